#pragma once

// Property harness.  Every check is a list of properties; every property is a
// sequence of cases, and case i of a run with seed s draws all its randomness
// from a generator seeded by (s, property name, i) alone.  A failure record
// carries that case seed, so it replays without rerunning the suite.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetabar/apartment.hpp"
#include "thetabar/bigcell.hpp"
#include "thetabar/rootsys.hpp"
#include "thetabar/valued.hpp"

namespace thetabar {

using Json = nlohmann::ordered_json;
using Rng = std::mt19937_64;

struct HarnessOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t horizon = 50;
  /// Weyl-chart covariance draws min(samples, this) cases per element of W.
  std::size_t weyl_samples_per_element = 100;
  bool timing = false;
};

struct CheckReport {
  std::string check;
  std::string system;
  std::string model;
  std::size_t samples = 0;
  std::vector<Json> failures;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  /// One line of JSON; elapsed time is only written when `with_timing`.
  Json to_json(bool with_timing = false) const;
  static CheckReport from_json(const Json& j);
};

// ---------------------------------------------------------------------------
// Sampling.  Rationals have denominators <= 8 and magnitude <= 8; boundary
// coordinates are +inf with probability 1/3.

Rational sample_rational(Rng& rng);
Val sample_val(Rng& rng);
ApartmentPoint sample_apartment_point(const RootSystem& rs, Rng& rng);
BoundaryPoint sample_boundary_point(const RootSystem& rs, const WeylElement& chart, Rng& rng);
/// Boundary point of the given type: finite exactly on tau.
BoundaryPoint sample_point_of_type(const RootSystem& rs, const WeylElement& chart, ParabolicType tau, Rng& rng);
WeylElement sample_weyl_element(const RootSystem& rs, Rng& rng);
Coefficient sample_coefficient(const CoefficientModel& model, Rng& rng);
/// 1 to max_terms terms; in the monoid ring every chi lies in the chart's <Phi->.
CellPolynomial sample_polynomial(const RootSystem& rs, const CoefficientModel& model, Ring ring,
                                 const WeylElement& chart, Rng& rng, int max_terms = 6);

// ---------------------------------------------------------------------------
// Properties and checks

struct CaseContext {
  const RootSystem& rs;
  const CoefficientModel& model;
  const HarnessOptions& opts;
  const WeylGroup* group;  ///< null when |W| exceeds the enumeration cap
};

struct Property {
  std::string name;
  std::function<std::size_t(const CaseContext&)> cases;
  /// nullopt on success, otherwise {"detail": ..., "input": ...}.
  std::function<std::optional<Json>(const CaseContext&, std::size_t index, Rng& rng)> run;
};

std::uint64_t case_seed(std::uint64_t seed, const std::string& property, std::size_t index);

CheckReport run_check(const std::string& check, const std::vector<Property>& properties, const RootSystem& rs,
                      const CoefficientModel& model, const HarnessOptions& opts);
/// Re-runs the case named by a failure record; returns the new failure record.
std::optional<Json> replay(const std::vector<Property>& properties, const RootSystem& rs,
                           const CoefficientModel& model, const HarnessOptions& opts, const Json& failure);

/// Check names in suite order.
const std::vector<std::string>& check_names();
/// Throws Usage for an unknown check.
const std::vector<Property>& properties_of(const std::string& check);

CheckReport check_seminorm(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts);
CheckReport check_injectivity(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts);
CheckReport check_equivariance(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts);
CheckReport check_continuity(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts);
CheckReport check_strata(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts);
CheckReport check_charts(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts);

/// "all" or a single check name; checks run concurrently and the reports come
/// back in check_names() order.  Throws Usage for an unknown suite.
std::vector<CheckReport> run_suite(const RootSystem& rs, const CoefficientModel& model, const std::string& suite,
                                   const HarnessOptions& opts);

/// Module invariants and the "check/property" entries that exercise them.
struct CoverageEntry {
  std::string invariant;
  std::vector<std::string> properties;
};
const std::vector<CoverageEntry>& coverage_manifest();

}  // namespace thetabar
