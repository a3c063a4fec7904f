#pragma once

// Hafnians and perfect matchings: the graph quantities Gaussian boson
// sampling is used to estimate.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace qumode {

/// Real symmetric adjacency matrix with zero diagonal.
class GraphAdjacency {
 public:
  explicit GraphAdjacency(Eigen::MatrixXd entries);

  static GraphAdjacency empty(int vertices);

  int vertices() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& matrix() const { return entries_; }

  /// True when every off-diagonal entry is 0 or 1.
  bool is_binary() const;

  GraphAdjacency permuted(const std::vector<int>& permutation) const;

 private:
  Eigen::MatrixXd entries_;
};

inline constexpr int kMaxHafnianDimension = 20;
inline constexpr int kMaxEnumerationDimension = 16;
inline constexpr int kMaxSignatureSubgraph = 8;

/// Sum over perfect matchings of the product of matched entries. Odd
/// dimension gives 0. Throws DomainError for asymmetric input or n > 20.
double hafnian(const Eigen::MatrixXd& a);

/// Exhaustive pairing enumeration on a 0/1 graph with n <= 16.
std::uint64_t perfect_matching_count(const GraphAdjacency& graph);

/// Sorted hafnians of every principal even-size submatrix of size 2..8;
/// invariant under vertex relabeling. Requires n <= 16.
std::vector<double> substructure_signature(const GraphAdjacency& graph);

/// Edge list: one `i j [weight]` per line, 1-indexed, weight defaults to 1.
/// Blank lines and lines starting with '#' are skipped. The vertex count is
/// the largest index seen unless `vertices` is positive.
GraphAdjacency read_edge_list(std::istream& in, int vertices = 0);

}  // namespace qumode
