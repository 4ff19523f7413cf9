#include <gtest/gtest.h>

#include <mtt/laplace.hpp>
#include <mtt/minors.hpp>
#include <mtt/poly.hpp>

using namespace mtt;

namespace {

FormalSum S(int n, std::vector<Edge> e, Coefficient c = 1) { return FormalSum(DirectedGraph(n, std::move(e)), c); }

FormalSum basis_sum(int n, int k) {
  FormalSum s(n, k);
  int c = 1;
  for (const DirectedGraph& g : enumerate_graphs(n, k)) s.add_term(g, c++);
  return s;
}

}  // namespace

TEST(BOp, Examples) {
  EXPECT_EQ(b_op(1, S(2, {{1, 2}, {1, 1}})), S(2, {{1, 2}, {1, 1}}));
  EXPECT_EQ(b_op(2, S(2, {{1, 2}, {1, 1}})), S(2, {{1, 2}, {1, 2}}, -1));
  EXPECT_EQ(b_op(2, S(3, {{1, 2}, {1, 1}})), S(3, {{1, 2}, {1, 2}}, -1) - S(3, {{1, 2}, {1, 3}}));
  EXPECT_TRUE(b_op(1, S(1, {{1, 1}})).is_zero());
  EXPECT_THROW(b_op(2, S(2, {{1, 1}})), std::out_of_range);
}

TEST(Laplace, Examples) {
  EXPECT_EQ(laplace(S(2, {{1, 2}})), S(2, {{1, 2}}));
  EXPECT_EQ(laplace(S(2, {{1, 1}, {2, 2}})), S(2, {{1, 2}, {2, 1}}));
  EXPECT_TRUE(laplace(universal_det(2, 2, {})).is_zero());
  EXPECT_EQ(laplace(S(2, {{1, 1}}, -1)), S(2, {{1, 2}}));
  EXPECT_TRUE(laplace(S(1, {{1, 1}})).is_zero());
  EXPECT_EQ(laplace(S(2, {})), S(2, {}));
}

TEST(Laplace, EqualsProductOfLoopOperators) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      const FormalSum s = basis_sum(n, k);
      FormalSum composed = s;
      for (int p = k; p >= 1; --p) composed = b_op(p, composed);
      EXPECT_EQ(laplace(s), composed) << n << ' ' << k;
    }
}

TEST(Laplace, IdempotentAndCommuting) {
  const FormalSum s = basis_sum(2, 2);
  EXPECT_EQ(b_op(1, b_op(2, s)), b_op(2, b_op(1, s)));
  EXPECT_EQ(b_op(1, b_op(1, s)), b_op(1, s));
  const FormalSum t = basis_sum(3, 2);
  EXPECT_EQ(laplace(laplace(t)), laplace(t));
}

TEST(Laplace, PairingWithLaplaceMatrix) {
  for (int n = 1; n <= 3; ++n) {
    const WeightMatrix w = WeightMatrix::symbolic(n);
    const WeightMatrix hat = laplace_matrix(w);
    for (int k = 0; k <= 2; ++k)
      for (const DirectedGraph& g : enumerate_graphs(n, k)) EXPECT_EQ(pairing(hat, FormalSum(g)), pairing(w, laplace(FormalSum(g))));
  }
}

TEST(Laplace, UndirectedVersion) {
  const UndirectedSum u(UndirectedGraph(2, {{1, 1}, {2, 2}}));
  EXPECT_EQ(laplace(u), UndirectedSum(UndirectedGraph(2, {{1, 2}, {1, 2}})));
  EXPECT_EQ(laplace(forget(basis_sum(3, 2))), forget(laplace(basis_sum(3, 2))));
}

TEST(Laplace, GradedElement) {
  const GradedElement th = theta(2);
  const GradedElement d = laplace(th);
  EXPECT_TRUE(d.component(3).is_zero());
  EXPECT_EQ(d.component(1), S(2, {{1, 2}}, -2) + S(2, {{2, 1}}, -2));
}
