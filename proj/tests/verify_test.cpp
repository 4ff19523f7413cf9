#include <gtest/gtest.h>

#include <mtt/suite.hpp>
#include <mtt/verify.hpp>

using namespace mtt;

namespace {

void expect_pass(const VerificationReport& r) {
  EXPECT_EQ(r.status, Status::Pass) << r.to_json().dump();
  EXPECT_TRUE(r.failures.empty());
}

}  // namespace

TEST(Verify, SubgraphIdentities) {
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= 3; ++k) {
      expect_pass(verify_direct(n, k));
      expect_pass(verify_direct_prime(n, k));
      expect_pass(verify_mobius_equiv(n, k));
    }
}

TEST(Verify, MatrixTreeTheorems) {
  expect_pass(verify_diag(2, 1, {2}));
  expect_pass(verify_diag(2, 2, {}));
  expect_pass(verify_diag(3, 1, {}));
  expect_pass(verify_diag(3, 3, {1}));
  expect_pass(verify_codim1(2, 1, 1, 2));
  expect_pass(verify_codim1(3, 2, 1, 3));
  expect_pass(verify_codim1(3, 2, 2, 2));
}

TEST(Verify, SignProbes) {
  const auto e = verify_expansion(2, 2);
  EXPECT_EQ(e.status, Status::PassWithSign);
  EXPECT_EQ(e.sign, -1);
  EXPECT_EQ(e.literal_holds, false);
  EXPECT_TRUE(meets_expectation(e));

  const auto trivial = verify_expansion(2, 1);
  EXPECT_EQ(trivial.status, Status::Pass);
  EXPECT_FALSE(trivial.sign);

  const auto d = verify_derivative(2, 2, 1, 1);
  EXPECT_EQ(d.status, Status::PassWithSign);
  EXPECT_EQ(d.sign, -1);
  EXPECT_TRUE(meets_expectation(d));
  EXPECT_TRUE(meets_expectation(verify_derivative(2, 3, 1, 1)));
  EXPECT_TRUE(meets_expectation(verify_derivative(2, 3, 2, 2)));
}

TEST(Verify, KirchhoffFamily) {
  expect_pass(verify_minor_pairing(2));
  expect_pass(verify_minor_pairing(3));
  expect_pass(verify_kirchhoff_diag(2, {1}));
  expect_pass(verify_kirchhoff_diag(3, {1}));
  expect_pass(verify_kirchhoff_diag(3, {1, 2, 3}));
  const auto odd = verify_kirchhoff_codim1(3, 1, 2);
  EXPECT_EQ(odd.status, Status::Pass);
  EXPECT_EQ(odd.literal_holds, false);
  const auto even = verify_kirchhoff_codim1(3, 1, 3);
  EXPECT_EQ(even.status, Status::Pass);
  EXPECT_EQ(even.literal_holds, true);
  expect_pass(verify_cayley(4));
  expect_pass(verify_det_recovery(3));
}

TEST(Verify, PottsFamily) {
  expect_pass(verify_specval(2, 2));
  expect_pass(verify_tutte(2, 2));
  expect_pass(verify_lapl_tutte(2, 1));
  expect_pass(verify_lapl_tutte(3, 2));
}

TEST(Verify, OperatorLaws) {
  expect_pass(verify_operator_laws(2, 2));
  expect_pass(verify_operator_laws(3, 2));
}

TEST(Verify, ThetaSmallestCase) {
  expect_pass(verify_theta(2));
  expect_pass(verify_theta_derived(2));
  expect_pass(verify_theta_derived(3));
}

TEST(Verify, ScaleGuard) {
  EXPECT_THROW(verify_diag(9, 9, {}), ScaleCapExceeded);
  EXPECT_THROW(verify_minor_pairing(5), ScaleCapExceeded);
  EXPECT_THROW(verify_direct(3, 4, {1, 100}), ScaleCapExceeded);
}

TEST(Report, JsonShape) {
  const auto r = verify_expansion(2, 2);
  const Json j = r.to_json();
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "params", "status", "sign", "literal_holds", "total_cases", "failures", "elapsed_ms"}));
  EXPECT_EQ(j["status"], "pass_with_sign");
  EXPECT_EQ(j["sign"], -1);
  EXPECT_FALSE(r.to_json(false).contains("elapsed_ms"));
}

TEST(Report, FailureCarriesCoefficients) {
  const auto r = verify_theta(3);
  ASSERT_EQ(r.status, Status::Fail);
  ASSERT_FALSE(r.failures.empty());
  const Json f = r.to_json()["failures"][0];
  EXPECT_TRUE(f["graph"].is_array());
  EXPECT_TRUE(f["expected"].is_string());
  EXPECT_TRUE(f["actual"].is_string());
}

TEST(Suite, SkipsCappedCells) {
  const auto r = run_cell("diag", {{"n", 9}}, [] { return verify_diag(9, 9, {}); });
  EXPECT_EQ(r.status, Status::Skipped);
  EXPECT_FALSE(r.note.empty());
  EXPECT_TRUE(meets_expectation(r));
}

TEST(Suite, SmallGridIsDeterministic) {
  SuiteConfig a{2, 2, 1, kDefaultCap};
  SuiteConfig b{2, 2, 8, kDefaultCap};
  const auto ra = run_suite(a);
  const auto rb = run_suite(b);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    EXPECT_EQ(ra[i].to_json(false), rb[i].to_json(false));
    EXPECT_TRUE(meets_expectation(ra[i])) << ra[i].to_json().dump();
  }
}

TEST(Suite, ConfigValidation) {
  EXPECT_THROW((SuiteConfig{0, 1, 1, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((SuiteConfig{1, -1, 1, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((SuiteConfig{1, 1, 0, 1}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((SuiteConfig{1, 0, 1, 1}.validate()));
}
