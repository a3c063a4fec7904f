#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "qumode/errors.hpp"
#include "qumode/graph.hpp"

using namespace qumode;

namespace {

Eigen::MatrixXd complete_graph(int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Ones(n, n);
  a.diagonal().setZero();
  return a;
}

Eigen::MatrixXd path_graph(int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = 1.0;
  return a;
}

std::uint64_t oracle_count(const Eigen::MatrixXd& a) {
  std::vector<int> all(static_cast<std::size_t>(a.rows()));
  std::iota(all.begin(), all.end(), 0);
  return qumode::testing::brute_force_matchings(a, all);
}

}  // namespace

TEST(Hafnian, SmallExamples) {
  Eigen::MatrixXd edge(2, 2);
  edge << 0, 1, 1, 0;
  EXPECT_EQ(hafnian(edge), 1.0);
  EXPECT_EQ(hafnian(complete_graph(3)), 0.0);
  EXPECT_EQ(hafnian(complete_graph(4)), 3.0);
  EXPECT_EQ(hafnian(path_graph(4)), 1.0);
  EXPECT_EQ(hafnian(complete_graph(6)), 15.0);
  EXPECT_EQ(hafnian(Eigen::MatrixXd::Zero(6, 6)), 0.0);
  EXPECT_EQ(hafnian(Eigen::MatrixXd(0, 0)), 1.0);
}

TEST(Hafnian, CompleteGraphDoubleFactorial) {
  double expected = 1.0;
  for (int n = 2; n <= 16; n += 2) {
    expected *= n - 1;
    EXPECT_EQ(hafnian(complete_graph(n)), expected) << n;
  }
}

TEST(Hafnian, WeightedFourByFour) {
  Eigen::MatrixXd a(4, 4);
  a << 0, 2, 3, 5,
       2, 0, 7, 11,
       3, 7, 0, 13,
       5, 11, 13, 0;
  // a01 a23 + a02 a13 + a03 a12
  EXPECT_DOUBLE_EQ(hafnian(a), 2 * 13 + 3 * 11 + 5 * 7);
}

TEST(Hafnian, Errors) {
  Eigen::MatrixXd asym = path_graph(4);
  asym(0, 1) = 2.0;
  EXPECT_THROW(hafnian(asym), DomainError);
  EXPECT_THROW(hafnian(Eigen::MatrixXd::Zero(2, 3)), DomainError);
  EXPECT_THROW(hafnian(complete_graph(22)), DomainError);
}

TEST(GraphAdjacency, Validation) {
  Eigen::MatrixXd loop = path_graph(3);
  loop(1, 1) = 1.0;
  EXPECT_THROW(GraphAdjacency{loop}, DomainError);
  Eigen::MatrixXd asym = path_graph(3);
  asym(0, 1) = 0.5;
  EXPECT_THROW(GraphAdjacency{asym}, DomainError);
  EXPECT_TRUE(GraphAdjacency(path_graph(3)).is_binary());
  EXPECT_FALSE(GraphAdjacency(0.5 * path_graph(3)).is_binary());
  EXPECT_EQ(GraphAdjacency::empty(5).vertices(), 5);
  EXPECT_THROW(GraphAdjacency(path_graph(3)).permuted({0, 0, 1}), DomainError);
}

TEST(PerfectMatchings, Examples) {
  EXPECT_EQ(perfect_matching_count(GraphAdjacency(complete_graph(4))), 3U);
  EXPECT_EQ(perfect_matching_count(GraphAdjacency(path_graph(4))), 1U);
  EXPECT_EQ(perfect_matching_count(GraphAdjacency(path_graph(5))), 0U);
  EXPECT_EQ(perfect_matching_count(GraphAdjacency::empty(4)), 0U);
  EXPECT_THROW(perfect_matching_count(GraphAdjacency(0.5 * path_graph(4))), DomainError);
  EXPECT_THROW(perfect_matching_count(GraphAdjacency(path_graph(18))), DomainError);
}

TEST(PerfectMatchings, HafnianEqualsCountOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + 2 * (trial % 6);
    const Eigen::MatrixXd a = qumode::testing::random_graph(n, 0.5, rng);
    const std::uint64_t expected = oracle_count(a);
    EXPECT_EQ(perfect_matching_count(GraphAdjacency(a)), expected) << "trial " << trial;
    EXPECT_EQ(hafnian(a), static_cast<double>(expected)) << "trial " << trial;
  }
}

TEST(HafnianProperties, PermutationInvariance) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const GraphAdjacency g(qumode::testing::random_graph(10, 0.6, rng));
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(hafnian(g.matrix()), hafnian(g.permuted(perm).matrix()));
  }
}

TEST(HafnianProperties, BlockDiagonalFactorizes) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXd a = qumode::testing::random_graph(6, 0.7, rng);
    const Eigen::MatrixXd b = qumode::testing::random_graph(4, 0.7, rng);
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(10, 10);
    block.topLeftCorner(6, 6) = a;
    block.bottomRightCorner(4, 4) = b;
    EXPECT_EQ(hafnian(block), hafnian(a) * hafnian(b));
  }
}

TEST(Signature, DeterministicAndRelabelingInvariant) {
  std::mt19937_64 rng(53);
  const GraphAdjacency g(qumode::testing::random_graph(9, 0.5, rng));
  const std::vector<double> sig = substructure_signature(g);
  EXPECT_EQ(sig, substructure_signature(g));
  EXPECT_TRUE(std::is_sorted(sig.begin(), sig.end()));
  std::vector<int> perm = {4, 2, 8, 0, 1, 7, 3, 6, 5};
  EXPECT_EQ(sig, substructure_signature(g.permuted(perm)));
}

TEST(Signature, SeparatesPathFromComplete) {
  const std::vector<double> p4 = substructure_signature(GraphAdjacency(path_graph(4)));
  const std::vector<double> k4 = substructure_signature(GraphAdjacency(complete_graph(4)));
  // C(4,2) pairs plus the full set.
  EXPECT_EQ(p4.size(), 7U);
  EXPECT_EQ(k4.size(), 7U);
  EXPECT_NE(p4, k4);
}

TEST(EdgeList, ParsesCommentsWeightsAndVertexCount) {
  std::istringstream in("# triangle plus pendant\n1 2\n2 3 0.5\n\n3 1\n3 4 2\n");
  const GraphAdjacency g = read_edge_list(in);
  ASSERT_EQ(g.vertices(), 4);
  EXPECT_EQ(g.matrix()(0, 1), 1.0);
  EXPECT_EQ(g.matrix()(2, 1), 0.5);
  EXPECT_EQ(g.matrix()(3, 2), 2.0);
  EXPECT_EQ(g.matrix()(0, 3), 0.0);

  std::istringstream padded("1 2\n");
  EXPECT_EQ(read_edge_list(padded, 6).vertices(), 6);
}

TEST(EdgeList, Errors) {
  for (const char* text : {"1\n", "0 2\n", "2 2\n", "1 2 x\n", "1 2 3 4\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_edge_list(in), DomainError) << text;
  }
}
