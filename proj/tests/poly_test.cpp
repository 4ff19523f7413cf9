#include <random>

#include <gtest/gtest.h>

#include <mtt/poly.hpp>

using namespace mtt;

namespace {

MultiPoly w(int i, int j) { return MultiPoly(Variable::w(i, j)); }
const Variable q = Variable::scalar('q');
const Variable v = Variable::scalar('v');

}  // namespace

TEST(Coefficient, FractionStrings) {
  EXPECT_EQ(to_fraction_string(Coefficient(3)), "3/1");
  EXPECT_EQ(to_fraction_string(Coefficient(-1) / 2), "-1/2");
  EXPECT_EQ(to_fraction_string(Coefficient(0)), "0/1");
  EXPECT_EQ(parse_coefficient("6/4"), Coefficient(3) / 2);
  EXPECT_EQ(parse_coefficient("-7"), Coefficient(-7));
  EXPECT_THROW(parse_coefficient("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_coefficient("abc"), std::invalid_argument);
  EXPECT_EQ(factorial(20) * 21, factorial(21));
}

TEST(Poly, ArithmeticAndPrinting) {
  EXPECT_EQ((w(1, 2) + w(1, 2)).to_string(), "2/1 * w[1,2]");
  EXPECT_EQ((w(1, 1) * w(1, 1)).to_string(), "1/1 * w[1,1]^2");
  EXPECT_TRUE((w(1, 2) - w(1, 2)).is_zero());
  EXPECT_EQ(MultiPoly().to_string(), "0");
  EXPECT_EQ(pow(w(1, 2) + 1, 2), w(1, 2) * w(1, 2) + 2 * w(1, 2) + 1);
  EXPECT_EQ((w(1, 1) * w(2, 2) + w(1, 2)).total_degree(), 2);
}

TEST(Poly, Derivatives) {
  const Variable w11 = Variable::w(1, 1);
  EXPECT_EQ(derivative(w(1, 1) * w(2, 2), w11), w(2, 2));
  EXPECT_EQ(derivative(w(1, 1) * w(1, 1) * w(2, 2), w11, 2), 2 * w(2, 2));
  EXPECT_TRUE(derivative(w(1, 2) * w(2, 1), w11).is_zero());
  EXPECT_THROW(derivative(w(1, 1), w11, 0), std::invalid_argument);
}

TEST(Poly, LeibnizRule) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> idx(1, 2), coef(-3, 3), len(0, 3);
  auto random_poly = [&] {
    MultiPoly p;
    for (int t = 0; t < 4; ++t) {
      MultiPoly m = coef(rng);
      for (int f = len(rng); f > 0; --f) m *= w(idx(rng), idx(rng));
      p += m;
    }
    return p;
  };
  const Variable x = Variable::w(1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly a = random_poly(), b = random_poly();
    EXPECT_EQ(derivative(a * b, x), derivative(a, x) * b + a * derivative(b, x));
  }
}

TEST(Poly, Evaluate) {
  const MultiPoly p = MultiPoly(q) * MultiPoly(q) + MultiPoly(q) * MultiPoly(v);
  EXPECT_EQ(evaluate(p, {{q, -1}, {v, 1}}), MultiPoly(0));
  EXPECT_EQ(evaluate(p, {}), p);
  EXPECT_EQ(evaluate(pow(MultiPoly(q), 5), {{q, -1}}), MultiPoly(-1));
  EXPECT_EQ(evaluate(p, {{v, 2}}), MultiPoly(q) * MultiPoly(q) + 2 * MultiPoly(q));
}

TEST(Poly, Substitute) {
  EXPECT_EQ(substitute(w(1, 2) * w(2, 1), {{Variable::w(2, 1), w(1, 2)}}), w(1, 2) * w(1, 2));
}

TEST(Matrix, DeterminantAndMinors) {
  const WeightMatrix W = WeightMatrix::symbolic(2);
  EXPECT_EQ(determinant(W), w(1, 1) * w(2, 2) - w(1, 2) * w(2, 1));
  const WeightMatrix hat = laplace_matrix(W);
  EXPECT_EQ(hat(1, 1), -w(1, 2));
  EXPECT_EQ(hat(2, 1), w(2, 1));
  EXPECT_EQ(minor(hat, {1}, {1}), -w(2, 1));
  EXPECT_EQ(minor(hat, {1}, {2}), w(2, 1));
  EXPECT_EQ(minor(hat, {1, 2}, {1, 2}), MultiPoly(1));
  EXPECT_THROW(W(3, 1), std::out_of_range);
}

TEST(Matrix, LaplaceRowsSumToZero) {
  for (int n = 1; n <= 4; ++n) {
    const WeightMatrix hat = laplace_matrix(WeightMatrix::symbolic(n));
    for (int i = 1; i <= n; ++i) {
      MultiPoly row;
      for (int j = 1; j <= n; ++j) row += hat(i, j);
      EXPECT_TRUE(row.is_zero());
    }
    EXPECT_TRUE(determinant(hat).is_zero());
  }
}

TEST(Matrix, DeterminantIsMultilinearSpotCheck) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    WeightMatrix a(3), b(3);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        a(i, j) = entry(rng);
        b(i, j) = entry(rng);
      }
    WeightMatrix ab(3);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int l = 1; l <= 3; ++l) ab(i, j) += a(i, l) * b(l, j);
    EXPECT_EQ(determinant(ab), determinant(a) * determinant(b));
  }
}

TEST(Pairing, CommutatorVanishesAndNumberingIsIrrelevant) {
  const WeightMatrix W = WeightMatrix::symbolic(3);
  const FormalSum g1(DirectedGraph(3, {{1, 2}, {3, 3}}));
  const FormalSum g2(DirectedGraph(3, {{2, 1}}));
  EXPECT_TRUE(pairing(W, g1 * g2 - g2 * g1).is_zero());
  EXPECT_EQ(pairing(W, g1), w(1, 2) * w(3, 3));
  EXPECT_THROW(pairing(WeightMatrix::symbolic(2), g1), std::invalid_argument);
}
