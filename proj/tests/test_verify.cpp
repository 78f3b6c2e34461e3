#include <gtest/gtest.h>

#include <set>

#include "thetabar/error.hpp"
#include "thetabar/verify.hpp"

using namespace thetabar;

namespace {

const CoefficientModel kP2 = CoefficientModel::p_adic(2);

HarnessOptions small(std::size_t samples, std::uint64_t seed = 1) {
  HarnessOptions o;
  o.samples = samples;
  o.seed = seed;
  o.weyl_samples_per_element = 5;
  return o;
}

// A property that is false for about half of all inputs: val(a) <= val(b).
Property wrong_ordering() {
  return {"wrong_ordering", [](const CaseContext& ctx) { return ctx.opts.samples; },
          [](const CaseContext&, std::size_t, Rng& rng) -> std::optional<Json> {
            const Val a = sample_val(rng), b = sample_val(rng);
            if (a <= b) return std::nullopt;
            return Json{{"detail", "val(a) > val(b)"}, {"input", {{"a", a.to_string()}, {"b", b.to_string()}}}};
          }};
}

}  // namespace

TEST(Harness, EveryCheckPassesOnSmallSystems) {
  for (const char* name : {"A1", "A2", "B2xA1"}) {
    const RootSystem rs = RootSystem::parse(name);
    for (const auto& r : run_suite(rs, kP2, "all", small(20))) {
      EXPECT_TRUE(r.passed()) << name << " " << r.to_json().dump();
      EXPECT_GT(r.samples, 0u);
    }
  }
}

TEST(Harness, TadicModelPasses) {
  const RootSystem rs = RootSystem::parse("A2");
  for (const auto& r : run_suite(rs, CoefficientModel::t_adic(), "all", small(15))) EXPECT_TRUE(r.passed()) << r.to_json().dump();
}

TEST(Harness, SuiteOrderAndSelection) {
  const RootSystem rs = RootSystem::parse("A1");
  const auto all = run_suite(rs, kP2, "all", small(3));
  ASSERT_EQ(all.size(), check_names().size());
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].check, check_names()[i]);
  const auto one = run_suite(rs, kP2, "strata", small(3));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].check, "strata");
  try {
    run_suite(rs, kP2, "everything", small(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Usage);
  }
  EXPECT_THROW(properties_of("nope"), Error);
}

TEST(Harness, ReportsAreDeterministicPerSeed) {
  const RootSystem rs = RootSystem::parse("B2");
  const auto a = run_suite(rs, kP2, "all", small(10, 42));
  const auto b = run_suite(rs, kP2, "all", small(10, 42));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json().dump(), b[i].to_json().dump());
  EXPECT_NE(case_seed(1, "gauss_norm", 0), case_seed(2, "gauss_norm", 0));
  EXPECT_NE(case_seed(1, "gauss_norm", 0), case_seed(1, "gauss_norm", 1));
  EXPECT_NE(case_seed(1, "gauss_norm", 0), case_seed(1, "reconstruction", 0));
}

TEST(Harness, ReportJsonRoundTripAndKeyOrder) {
  CheckReport r;
  r.check = "seminorm";
  r.system = "G2";
  r.model = "p-adic(5)";
  r.samples = 17;
  r.seed = 9;
  r.elapsed_ms = 1.5;
  r.failures.push_back(Json{{"property", "x"}, {"case", 3}, {"case_seed", 77}, {"detail", "d"}, {"input", Json::object()}});
  const Json j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "system", "model", "seed", "samples", "status", "failures"}));
  EXPECT_EQ(j["status"], "fail");
  const CheckReport back = CheckReport::from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.to_json().dump(), j.dump());
  EXPECT_TRUE(r.to_json(true).contains("elapsed_ms"));
  EXPECT_EQ(CheckReport::from_json(r.to_json(true)).elapsed_ms, 1.5);
}

TEST(Harness, WrongPropertyIsCaughtAndReplays) {
  const RootSystem rs = RootSystem::parse("A2");
  const std::vector<Property> props{wrong_ordering()};
  const HarnessOptions opts = small(50, 7);
  const CheckReport r = run_check("demo", props, rs, kP2, opts);
  EXPECT_EQ(r.samples, 50u);
  ASSERT_FALSE(r.passed());
  for (const auto& f : r.failures) {
    const auto again = replay(props, rs, kP2, opts, f);
    ASSERT_TRUE(again.has_value());
    EXPECT_EQ(again->dump(), f.dump());
  }
  // Replaying under a different suite seed is still exact: only the case seed matters.
  EXPECT_EQ(replay(props, rs, kP2, small(50, 999), r.failures[0])->dump(), r.failures[0].dump());
}

TEST(Harness, ExceptionsBecomeFailures) {
  const RootSystem rs = RootSystem::parse("A1");
  const std::vector<Property> props{{"throws", [](const CaseContext&) { return std::size_t{2}; },
                                     [](const CaseContext&, std::size_t, Rng&) -> std::optional<Json> {
                                       throw Error(ErrorKind::Domain, "boom");
                                     }}};
  const CheckReport r = run_check("demo", props, rs, kP2, small(2));
  ASSERT_EQ(r.failures.size(), 2u);
  EXPECT_NE(r.failures[0]["detail"].get<std::string>().find("boom"), std::string::npos);
}

TEST(Coverage, ManifestNamesExistingProperties) {
  std::set<std::string> known;
  for (const auto& c : check_names())
    for (const auto& p : properties_of(c)) known.insert(c + "/" + p.name);
  std::set<std::string> invariants;
  for (const auto& e : coverage_manifest()) {
    invariants.insert(e.invariant);
    EXPECT_FALSE(e.properties.empty()) << e.invariant;
    for (const auto& p : e.properties) EXPECT_TRUE(known.count(p)) << e.invariant << " -> " << p;
  }
  for (const char* inv : {"apartment.classify_extremes_and_monotonicity", "apartment.fan_cones_cover",
                          "apartment.glue_equal_equivalence", "apartment.interior_glue_across_charts",
                          "apartment.strata_count", "bigcell.multiplicativity", "bigcell.ultrametric",
                          "bigcell.norm_on_interior", "bigcell.reconstruction", "bigcell.torus_equivariance",
                          "bigcell.weyl_covariance", "bigcell.continuity", "wonder.base_point_type",
                          "wonder.one_ps_limit", "wonder.closure_characterizations", "wonder.strata_count_open_closed",
                          "wonder.pi_tau_constancy_and_injectivity", "wonder.stratification_compatibility"})
    EXPECT_TRUE(invariants.count(inv)) << inv;
}

TEST(Sampling, Bounds) {
  Rng rng(11);
  int infinite = 0;
  for (int i = 0; i < 3000; ++i) {
    const Rational q = sample_rational(rng);
    EXPECT_LE(q.get_den(), 8);
    EXPECT_LE(abs(q), 8);
    if (sample_val(rng).is_infinite()) ++infinite;
  }
  EXPECT_GT(infinite, 800);
  EXPECT_LT(infinite, 1200);
  const RootSystem rs = RootSystem::parse("G2");
  for (int i = 0; i < 200; ++i) {
    const WeylElement w = sample_weyl_element(rs, rng);
    for (std::uint32_t bits = 0; bits < 4; ++bits) {
      const BoundaryPoint y = sample_point_of_type(rs, w, ParabolicType(bits), rng);
      EXPECT_EQ(classify_stratum(y), ParabolicType(bits));
      EXPECT_EQ(y.chart(), w);
    }
    const CellPolynomial f = sample_polynomial(rs, kP2, Ring::Monoid, w, rng);
    EXPECT_GE(f.terms().size(), 1u);
    EXPECT_LE(f.terms().size(), 6u);
  }
}
