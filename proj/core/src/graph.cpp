#include "qumode/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <string>

#include "qumode/errors.hpp"

namespace qumode {

GraphAdjacency::GraphAdjacency(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DomainError("adjacency matrix must be square");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 0.0) throw DomainError("adjacency matrix must have a zero diagonal");
    for (Eigen::Index j = 0; j < i; ++j) {
      if (!std::isfinite(entries_(i, j))) throw DomainError("adjacency entries must be finite");
      if (entries_(i, j) != entries_(j, i)) throw DomainError("adjacency matrix must be symmetric");
    }
  }
}

GraphAdjacency GraphAdjacency::empty(int vertices) {
  if (vertices < 0) throw DomainError("vertex count must be non-negative");
  return GraphAdjacency(Eigen::MatrixXd::Zero(vertices, vertices));
}

bool GraphAdjacency::is_binary() const {
  return (entries_.array() == 0.0 || entries_.array() == 1.0).all();
}

GraphAdjacency GraphAdjacency::permuted(const std::vector<int>& permutation) const {
  const int n = vertices();
  if (static_cast<int>(permutation.size()) != n) throw DomainError("permutation has wrong length");
  std::vector<int> seen(permutation);
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)] != i) throw DomainError("not a permutation");
  }
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = entries_(permutation[static_cast<std::size_t>(i)],
                           permutation[static_cast<std::size_t>(j)]);
    }
  }
  return GraphAdjacency(std::move(out));
}

namespace {

// Pairs the lowest remaining vertex with every other remaining vertex;
// memoized on the remaining-vertex bitmask.
class HafnianRecursion {
 public:
  explicit HafnianRecursion(const Eigen::MatrixXd& a)
      : a_(a), memo_(std::size_t{1} << a.rows(), std::numeric_limits<double>::quiet_NaN()) {}

  double operator()(std::uint32_t remaining) {
    if (remaining == 0) return 1.0;
    double& slot = memo_[remaining];
    if (!std::isnan(slot)) return slot;
    const int i = std::countr_zero(remaining);
    const std::uint32_t rest = remaining & (remaining - 1);
    double total = 0.0;
    for (std::uint32_t others = rest; others != 0; others &= others - 1) {
      const int j = std::countr_zero(others);
      const double w = a_(i, j);
      if (w != 0.0) total += w * (*this)(rest & ~(std::uint32_t{1} << j));
    }
    slot = total;
    return total;
  }

 private:
  const Eigen::MatrixXd& a_;
  std::vector<double> memo_;
};

std::uint64_t count_matchings(const Eigen::MatrixXd& a, std::uint32_t remaining) {
  if (remaining == 0) return 1;
  const int i = std::countr_zero(remaining);
  const std::uint32_t rest = remaining & (remaining - 1);
  std::uint64_t total = 0;
  for (int j = i + 1; j < a.rows(); ++j) {
    if ((rest >> j & 1U) && a(i, j) == 1.0) {
      total += count_matchings(a, rest & ~(std::uint32_t{1} << j));
    }
  }
  return total;
}

void collect_signature(const Eigen::MatrixXd& a, int size, int start, std::vector<int>& chosen,
                       std::vector<double>& out) {
  if (static_cast<int>(chosen.size()) == size) {
    Eigen::MatrixXd sub(size, size);
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        sub(r, c) = a(chosen[static_cast<std::size_t>(r)], chosen[static_cast<std::size_t>(c)]);
      }
    }
    out.push_back(hafnian(sub));
    return;
  }
  for (int v = start; v < a.rows(); ++v) {
    chosen.push_back(v);
    collect_signature(a, size, v + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

double hafnian(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw DomainError("hafnian: matrix must be square");
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      const double scale = std::max({1.0, std::abs(a(i, j)), std::abs(a(j, i))});
      if (std::abs(a(i, j) - a(j, i)) > 1e-12 * scale) {
        throw DomainError("hafnian: matrix must be symmetric");
      }
    }
  }
  if (n % 2 == 1) return 0.0;
  if (n > kMaxHafnianDimension) {
    throw DomainError("hafnian: dimension " + std::to_string(n) + " exceeds the exact limit of " +
                      std::to_string(kMaxHafnianDimension));
  }
  if (n == 0) return 1.0;
  HafnianRecursion recursion(a);
  return recursion((std::uint32_t{1} << n) - 1);
}

std::uint64_t perfect_matching_count(const GraphAdjacency& graph) {
  if (!graph.is_binary()) throw DomainError("perfect_matching_count needs 0/1 entries");
  const int n = graph.vertices();
  if (n > kMaxEnumerationDimension) {
    throw DomainError("perfect_matching_count: more than " +
                      std::to_string(kMaxEnumerationDimension) + " vertices");
  }
  if (n % 2 == 1) return 0;
  return count_matchings(graph.matrix(), (std::uint32_t{1} << n) - 1);
}

std::vector<double> substructure_signature(const GraphAdjacency& graph) {
  const int n = graph.vertices();
  if (n > kMaxEnumerationDimension) {
    throw DomainError("substructure_signature: more than " +
                      std::to_string(kMaxEnumerationDimension) + " vertices");
  }
  std::vector<double> signature;
  std::vector<int> chosen;
  for (int size = 2; size <= std::min(n, kMaxSignatureSubgraph); size += 2) {
    collect_signature(graph.matrix(), size, 0, chosen, signature);
  }
  std::sort(signature.begin(), signature.end());
  return signature;
}

GraphAdjacency read_edge_list(std::istream& in, int vertices) {
  struct Edge {
    int i, j;
    double w;
  };
  std::vector<Edge> edges;
  int max_index = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    Edge e{0, 0, 1.0};
    if (!(fields >> e.i >> e.j)) {
      throw DomainError("edge list line " + std::to_string(line_no) + ": expected `i j [weight]`");
    }
    if (!(fields >> e.w)) {
      if (!fields.eof()) {
        throw DomainError("edge list line " + std::to_string(line_no) + ": bad weight");
      }
      e.w = 1.0;
    }
    std::string extra;
    if (fields.clear(), fields >> extra) {
      throw DomainError("edge list line " + std::to_string(line_no) + ": trailing fields");
    }
    if (e.i < 1 || e.j < 1) {
      throw DomainError("edge list line " + std::to_string(line_no) + ": indices are 1-based");
    }
    if (e.i == e.j) {
      throw DomainError("edge list line " + std::to_string(line_no) + ": self-loops not allowed");
    }
    max_index = std::max({max_index, e.i, e.j});
    edges.push_back(e);
  }
  const int n = vertices > 0 ? vertices : max_index;
  if (max_index > n) throw DomainError("edge list references a vertex beyond the declared count");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : edges) {
    a(e.i - 1, e.j - 1) = e.w;
    a(e.j - 1, e.i - 1) = e.w;
  }
  return GraphAdjacency(std::move(a));
}

}  // namespace qumode
