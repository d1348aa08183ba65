/// The named verification checks: expected verdicts, preconditions,
/// determinism, and the suite runner.

#include <nilpotra/lemma_lab.hpp>

#include <gtest/gtest.h>

#include <string>

namespace nilpotra {
namespace {

Json masked(const CheckReport& r) {
  Json j = r.to_json();
  j["millis"] = 0;  // timing is the one legitimately nondeterministic field
  return j;
}

TEST(Multilinearity, PassesOnTheFullGrid) {
  for (int c = 2; c <= 4; ++c)
    for (std::int64_t k : {1, 2, 3, 5}) {
      const CheckReport r = check_multilinearity(c, k);
      EXPECT_TRUE(r.pass) << c << " " << k << ": " << r.failures.dump();
      const auto weight_c = GroupContext::get(2, c)->basis().stratum(c).size();
      EXPECT_EQ(r.cases, 3 * static_cast<long long>(weight_c));
    }
}

TEST(Multilinearity, Preconditions) {
  EXPECT_THROW(check_multilinearity(1, 2), domain_error);
  EXPECT_THROW(check_multilinearity(2, 0), domain_error);
}

TEST(GlueProbe, EqualityExactlyWhenExponentsPredict) {
  // (2,2) is the only configuration on the grid where the displayed
  // identity holds for every commutator.
  for (int c = 2; c <= 4; ++c)
    for (std::int64_t k = 1; k <= 3; ++k) {
      const CheckReport r = probe_glue_identity(c, k);
      EXPECT_TRUE(r.pass) << r.failures.dump();
      const bool any_hold = !r.params.at("equality_holds_for").empty();
      EXPECT_EQ(any_hold, c == 2 && k == 2) << "c=" << c << " k=" << k;
    }
  const CheckReport good = probe_glue_identity(2, 2);
  EXPECT_TRUE(good.params.at("equality_fails_for").empty());
  EXPECT_EQ(good.params.at("equality_holds_for").size(), 1u);
  const CheckReport bad = probe_glue_identity(3, 2);
  EXPECT_TRUE(bad.params.at("equality_holds_for").empty());
  EXPECT_EQ(bad.params.at("equality_fails_for").size(), 2u);
  // k=1 fails everywhere: 1 + 1 != 1.
  const CheckReport k1 = probe_glue_identity(2, 1);
  EXPECT_TRUE(k1.params.at("equality_holds_for").empty());
}

TEST(ShiftClaim, SpecExamples) {
  // alpha=1, no betas, n=3: g_3 = e_0 + e_1 + e_2.
  const SparseVector g3 = shift_iterate(ShiftSystem{1, {}}, 3);
  EXPECT_EQ(g3, (SparseVector{{0, 1}, {1, 1}, {2, 1}}));
  // Boundary: alpha=1, beta_0=-1, n=2 cancels e_0, leaving exactly two.
  const SparseVector g2 = shift_iterate(ShiftSystem{1, {-1}}, 2);
  EXPECT_EQ(g2, (SparseVector{{1, 1}, {2, 1}}));
  EXPECT_TRUE(check_shift_claim(ShiftSystem{1, {-1}}, 2).pass);
  EXPECT_TRUE(check_shift_claim(ShiftSystem{-3, {5, 0, -2}}, 1).pass);
}

TEST(ShiftClaim, IterationMatchesClosedFormRandomly) {
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    ShiftSystem sys;
    while (sys.alpha == 0) sys.alpha = rng.uniform(-5, 5);
    const int r = static_cast<int>(rng.uniform(0, 6));
    for (int j = 0; j <= r; ++j) sys.betas.push_back(rng.uniform(-5, 5));
    const int n = static_cast<int>(rng.uniform(1, 12));
    EXPECT_EQ(shift_iterate(sys, n), shift_closed_form(sys, n));
    EXPECT_TRUE(check_shift_claim(sys, n).pass);
  }
}

TEST(ShiftClaim, AlphaZeroIsRejected) {
  EXPECT_THROW(check_shift_claim(ShiftSystem{0, {1}}, 2), domain_error);
  EXPECT_THROW(check_shift_claim(ShiftSystem{1, {}}, 0), domain_error);
}

TEST(DeltaBalance, PassesOnTheAcceptanceGrid) {
  for (int c : {3, 4})
    for (int m : {1, 2}) {
      const CheckReport r = check_delta_balance(c, m);
      EXPECT_TRUE(r.pass)
          << "c=" << c << " m=" << m << ": " << r.failures.dump();
    }
}

TEST(DeltaBalance, Preconditions) {
  EXPECT_THROW(check_delta_balance(2, 1), domain_error);
  EXPECT_THROW(check_delta_balance(3, 0), domain_error);
}

TEST(EpsilonSquare, PassesAtTwoBlocks) {
  for (int c : {3, 4}) {
    const CheckReport r = check_epsilon_square(c, 2);
    EXPECT_TRUE(r.pass) << "c=" << c << ": " << r.failures.dump();
  }
}

TEST(EpsilonSquare, SingleBlockHasNoSwapClasses) {
  // With one block the plus class (excluding x1) and the dropped-minus
  // class are empty, so the construction's precondition bites.
  EXPECT_THROW(check_epsilon_square(3, 1), domain_error);
}

TEST(CenterProps, PassesAtTheRequiredSettings) {
  EXPECT_TRUE(check_center_props(2, 2, 100, 0).pass);
  EXPECT_TRUE(check_center_props(3, 3, 100, 0).pass);
}

TEST(CenterProps, ZeroTrialsIsVacuouslyFine) {
  const CheckReport r = check_center_props(2, 2, 0, 0);
  EXPECT_TRUE(r.pass);
  // Only the deterministic non-centrality witness cases remain.
  EXPECT_LE(r.cases, 3);
}

TEST(LkCongruence, BasicsAcrossTheGrid) {
  for (int c = 2; c <= 4; ++c) {
    ContextPtr ctx = GroupContext::get(2, c);
    for (std::int64_t k = 1; k <= 5; ++k)
      for (const CommutatorTree* t : ctx->basis().stratum(c)) {
        const CheckReport r = check_lk_congruence(c, k, tree_word(t));
        EXPECT_TRUE(r.pass) << format_tree(t) << " k=" << k << " "
                            << r.failures.dump();
      }
  }
}

TEST(LkCongruence, RejectsShallowWords) {
  EXPECT_THROW(check_lk_congruence(3, 2, parse_word("x1", 2)), domain_error);
  EXPECT_THROW(check_lk_congruence(3, 2, parse_word("[x2,x1]", 2)),
               domain_error);
}

TEST(WordSymmetry, SymmetricSamplesSubstituteSymmetrically) {
  for (int c = 2; c <= 4; ++c) {
    const CheckReport r = check_word_symmetry(c, 30, 1);
    EXPECT_TRUE(r.pass) << r.failures.dump();
    EXPECT_GE(r.params.at("symmetric").get<long long>(), 1);
  }
}

TEST(Suite, IdsAndUnknown) {
  EXPECT_EQ(suite_ids().size(), 8u);
  EXPECT_THROW(run_suite("no-such-suite", VerifyConfig{}), parse_error);
}

TEST(Suite, AllSuitesPass) {
  VerifyConfig cfg;
  cfg.trials = 20;  // keep the unit-test run snappy
  for (const std::string& id : suite_ids()) {
    for (const CheckReport& r : run_suite(id, cfg))
      EXPECT_TRUE(r.pass) << id << ": " << r.failures.dump();
  }
}

TEST(Suite, ReportsAreDeterministicGivenSeed) {
  VerifyConfig cfg;
  cfg.seed = 42;
  cfg.trials = 10;
  const auto a = run_suite("center-props", cfg);
  const auto b = run_suite("center-props", cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    EXPECT_EQ(masked(a[i]), masked(b[i]));
}

TEST(Report, JsonSchema) {
  const CheckReport r = check_multilinearity(2, 2);
  const Json j = r.to_json();
  EXPECT_TRUE(j.contains("name"));
  EXPECT_TRUE(j.contains("params"));
  EXPECT_TRUE(j.contains("verdict"));
  EXPECT_TRUE(j.contains("cases"));
  EXPECT_TRUE(j.contains("failures"));
  EXPECT_TRUE(j.contains("seed"));
  EXPECT_TRUE(j.contains("millis"));
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_TRUE(j.at("failures").is_array());
}

TEST(Report, FailureCarriesAWitness) {
  // Drive a report to failure through the public expectation helper.
  CheckReport r;
  r.name = "synthetic";
  r.expect(false, [] { return Json{{"why", "forced"}}; });
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].at("why"), "forced");
  EXPECT_EQ(r.to_json().at("verdict"), "fail");
}

}  // namespace
}  // namespace nilpotra
