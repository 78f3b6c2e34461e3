#include "thetabar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <set>

#include "thetabar/error.hpp"
#include "thetabar/formats.hpp"
#include "thetabar/wonder.hpp"

namespace thetabar {

// ---------------------------------------------------------------------------
// Reports

Json CheckReport::to_json(bool with_timing) const {
  Json j;
  j["check"] = check;
  j["system"] = system;
  j["model"] = model;
  j["seed"] = seed;
  j["samples"] = samples;
  j["status"] = passed() ? "pass" : "fail";
  j["failures"] = Json::array();
  for (const auto& f : failures) j["failures"].push_back(f);
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

CheckReport CheckReport::from_json(const Json& j) {
  CheckReport r;
  r.check = j.at("check").get<std::string>();
  r.system = j.at("system").get<std::string>();
  r.model = j.at("model").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.samples = j.at("samples").get<std::size_t>();
  for (const auto& f : j.at("failures")) r.failures.push_back(f);
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, int num, int den) { return uniform_int(rng, 1, den) <= num; }

Rational positive_rational(Rng& rng) {
  Rational q(uniform_int(rng, 1, 8), uniform_int(rng, 1, 8));
  q.canonicalize();
  return q;
}

Coefficient uniformizer(const CoefficientModel& model) {
  if (model.kind() == CoefficientModel::Kind::TAdic) return Coefficient(RationalFunction::t());
  return Coefficient(Rational(model.prime()));
}

RootVector zero_vector(const RootSystem& rs) { return RootVector(static_cast<std::size_t>(rs.rank()), 0); }

}  // namespace

Rational sample_rational(Rng& rng) {
  const int den = uniform_int(rng, 1, 8);
  Rational q(uniform_int(rng, -8 * den, 8 * den), den);
  q.canonicalize();
  return q;
}

Val sample_val(Rng& rng) { return coin(rng, 1, 3) ? Val::infinity() : Val(sample_rational(rng)); }

ApartmentPoint sample_apartment_point(const RootSystem& rs, Rng& rng) {
  std::vector<Rational> v;
  for (int i = 0; i < rs.rank(); ++i) v.push_back(sample_rational(rng));
  return ApartmentPoint(std::move(v));
}

BoundaryPoint sample_boundary_point(const RootSystem& rs, const WeylElement& chart, Rng& rng) {
  std::vector<Val> c;
  for (int i = 0; i < rs.rank(); ++i) c.push_back(sample_val(rng));
  return {chart, std::move(c)};
}

BoundaryPoint sample_point_of_type(const RootSystem& rs, const WeylElement& chart, ParabolicType tau, Rng& rng) {
  std::vector<Val> c;
  for (int i = 0; i < rs.rank(); ++i) c.push_back(tau.contains(i) ? Val(sample_rational(rng)) : Val::infinity());
  return {chart, std::move(c)};
}

WeylElement sample_weyl_element(const RootSystem& rs, Rng& rng) {
  const int len = uniform_int(rng, 0, static_cast<int>(rs.num_positive()));
  std::vector<int> word;
  for (int k = 0; k < len; ++k) word.push_back(uniform_int(rng, 0, rs.rank() - 1));
  return WeylElement::from_word(rs, word);
}

Coefficient sample_coefficient(const CoefficientModel& model, Rng& rng) {
  int num = 0;
  while (num == 0) num = uniform_int(rng, -20, 20);
  const Rational unit(num, uniform_int(rng, 1, 20));
  const int k = uniform_int(rng, -3, 3);
  if (model.kind() == CoefficientModel::Kind::TAdic) {
    RationalFunction f = RationalFunction(unit) * RationalFunction::t().pow(k);
    if (coin(rng, 1, 3)) f = f * (RationalFunction(Rational(1)) + RationalFunction(sample_rational(rng)) * RationalFunction::t());
    if (f.is_zero()) f = RationalFunction(unit);
    return Coefficient(f);
  }
  mpz_class pk;
  mpz_pow_ui(pk.get_mpz_t(), mpz_class(model.prime()).get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  Rational c = unit;
  if (k >= 0)
    c *= Rational(pk);
  else
    c /= Rational(pk);
  return Coefficient(c);
}

CellPolynomial sample_polynomial(const RootSystem& rs, const CoefficientModel& model, Ring ring,
                                 const WeylElement& chart, Rng& rng, int max_terms) {
  CellPolynomial f(rs, ring, chart);
  const int terms = uniform_int(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    RootVector chi = zero_vector(rs);
    if (ring == Ring::Laurent) {
      for (auto& c : chi) c = uniform_int(rng, -2, 2);
    } else {
      RootVector m = zero_vector(rs);
      for (auto& c : m) c = -uniform_int(rng, 0, 2);
      chi = chart.apply(m);
    }
    std::vector<std::pair<std::size_t, int>> nu;
    const int factors = uniform_int(rng, 0, 2);
    for (int k = 0; k < factors; ++k)
      nu.emplace_back(static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(rs.num_roots()) - 1)),
                      uniform_int(rng, 1, 2));
    f.add_term(sample_coefficient(model, rng), chi, nu);
  }
  if (f.is_zero()) f.add_term(Coefficient(1), zero_vector(rs), std::vector<int>(rs.num_roots(), 0));
  return f;
}

// ---------------------------------------------------------------------------
// Harness plumbing

std::uint64_t case_seed(std::uint64_t seed, const std::string& property, std::size_t index) {
  // FNV-1a of the property name, mixed with splitmix64.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : property) h = (h ^ c) * 1099511628211ull;
  std::uint64_t z = seed ^ h ^ (0x9E3779B97F4A7C15ull * (index + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

std::optional<Json> run_case(const Property& p, const CaseContext& ctx, std::size_t index, std::uint64_t cs) {
  Rng rng(cs);
  std::optional<Json> out;
  try {
    out = p.run(ctx, index, rng);
  } catch (const Error& e) {
    out = Json{{"detail", "exception[" + std::string(to_string(e.kind())) + "]: " + e.what()}};
  } catch (const std::exception& e) {
    out = Json{{"detail", std::string("exception: ") + e.what()}};
  }
  if (!out) return std::nullopt;
  Json rec;
  rec["property"] = p.name;
  rec["case"] = index;
  rec["case_seed"] = cs;
  rec["detail"] = out->value("detail", "");
  rec["input"] = out->contains("input") ? (*out)["input"] : Json::object();
  return rec;
}

struct Context {
  std::optional<WeylGroup> group;
  explicit Context(const RootSystem& rs) {
    // Only the exhaustive properties use W, and they stop at 20000 cases.
    if (rs.weyl_order() <= 20000) group = weyl_group(rs);
  }
};

}  // namespace

CheckReport run_check(const std::string& check, const std::vector<Property>& properties, const RootSystem& rs,
                      const CoefficientModel& model, const HarnessOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Context shared(rs);
  const CaseContext ctx{rs, model, opts, shared.group ? &*shared.group : nullptr};
  CheckReport report;
  report.check = check;
  report.system = rs.name();
  report.model = model.name();
  report.seed = opts.seed;
  for (const auto& p : properties) {
    const std::size_t n = p.cases(ctx);
    for (std::size_t i = 0; i < n; ++i) {
      ++report.samples;
      if (auto f = run_case(p, ctx, i, case_seed(opts.seed, p.name, i))) report.failures.push_back(std::move(*f));
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<Json> replay(const std::vector<Property>& properties, const RootSystem& rs,
                           const CoefficientModel& model, const HarnessOptions& opts, const Json& failure) {
  const std::string name = failure.at("property").get<std::string>();
  const auto it = std::find_if(properties.begin(), properties.end(), [&](const Property& p) { return p.name == name; });
  if (it == properties.end()) throw Error(ErrorKind::Usage, "replay: unknown property '" + name + "'");
  const Context shared(rs);
  const CaseContext ctx{rs, model, opts, shared.group ? &*shared.group : nullptr};
  return run_case(*it, ctx, failure.at("case").get<std::size_t>(), failure.at("case_seed").get<std::uint64_t>());
}

// ---------------------------------------------------------------------------
// Shared helpers for the properties

namespace {

using Failure = std::optional<Json>;

Json fail(const std::string& detail, Json input = Json::object()) { return Json{{"detail", detail}, {"input", std::move(input)}}; }

std::string str(const RootSystem& rs, const BoundaryPoint& y) { return format_point(rs, y, "y"); }
std::string str(const ApartmentPoint& x) { return format_point(x); }

CellPolynomial monomial(const RootSystem& rs, Ring ring, const WeylElement& chart, const Monomial& m) {
  CellPolynomial p(rs, ring, chart);
  p.add_term(Coefficient(1), m.chi, m.nu);
  return p;
}

CellPolynomial chart_xi(const RootSystem& rs, const WeylElement& chart, std::size_t root) {
  CellPolynomial p(rs, Ring::Monoid, chart);
  p.add_term(Coefficient(1), zero_vector(rs), std::vector<std::pair<std::size_t, int>>{{root, 1}});
  return p;
}

/// Basis {chi_{w(-alpha_i)}} u {xi_alpha} of the chart's coordinate ring.
std::vector<CellPolynomial> monomial_basis(const RootSystem& rs, const WeylElement& chart) {
  std::vector<CellPolynomial> basis;
  for (int i = 0; i < rs.rank(); ++i) {
    RootVector e = zero_vector(rs);
    e[static_cast<std::size_t>(i)] = -1;
    CellPolynomial p(rs, Ring::Monoid, chart);
    p.add_term(Coefficient(1), chart.apply(e), std::vector<int>(rs.num_roots(), 0));
    basis.push_back(std::move(p));
  }
  for (std::size_t r = 0; r < rs.num_roots(); ++r) basis.push_back(chart_xi(rs, chart, r));
  return basis;
}

std::vector<Val> basis_values(const Seminorm& s, const std::vector<CellPolynomial>& basis) {
  std::vector<Val> out;
  for (const auto& b : basis) out.push_back(s(b));
  return out;
}

ParabolicType random_type(const RootSystem& rs, Rng& rng) {
  return ParabolicType(static_cast<std::uint32_t>(uniform_int(rng, 0, (1 << rs.rank()) - 1)));
}

/// y re-expressed in the chart w v for v in W_tau (tau the type of y): the
/// coordinate on (w v)(-alpha_j) is sum_i k_i c_i where v(alpha_j) = sum k_i alpha_i.
BoundaryPoint transport_within_type(const RootSystem& rs, const BoundaryPoint& y, const WeylElement& v) {
  std::vector<Val> coords;
  for (int j = 0; j < rs.rank(); ++j) {
    RootVector e = zero_vector(rs);
    e[static_cast<std::size_t>(j)] = 1;
    const RootVector k = v.apply(e);
    Val acc(0);
    for (int i = 0; i < rs.rank(); ++i) {
      const int ki = k[static_cast<std::size_t>(i)];
      const Val& ci = y.coords()[static_cast<std::size_t>(i)];
      if (ki > 0)
        acc += ci.scaled(Rational(ki));
      else if (ki < 0)
        acc += Val(Rational(ki) * ci.value());
    }
    coords.push_back(acc);
  }
  return {y.chart() * v, std::move(coords)};
}

WeylElement sample_levi_element(const RootSystem& rs, ParabolicType tau, Rng& rng) {
  const auto idx = tau.indices();
  std::vector<int> word;
  if (!idx.empty()) {
    const int len = uniform_int(rng, 0, 6);
    for (int k = 0; k < len; ++k) word.push_back(idx[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(idx.size()) - 1))]);
  }
  return WeylElement::from_word(rs, word);
}

/// Limits of val_{x_n}(beta) over all roots along x_n -> y, where x_n has
/// coordinate c_i + n^2 in place of each +inf.  Encoded as "+inf", "-inf" or
/// the finite limit.
std::vector<std::string> limit_signature(const RootSystem& rs, const BoundaryPoint& y) {
  std::vector<std::string> sig;
  for (std::size_t r = 0; r < rs.num_roots(); ++r) {
    const RootVector k = y.chart().apply_inverse(rs.root(r));
    // val(w alpha_i) = -c_i, so val(beta) = -sum_i k_i c_i.
    Rational growth = 0, finite = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      const Val& c = y.coords()[static_cast<std::size_t>(i)];
      const int ki = k[static_cast<std::size_t>(i)];
      if (c.is_infinite())
        growth -= ki;
      else
        finite -= Rational(ki) * c.value();
    }
    sig.push_back(growth > 0 ? "+inf" : growth < 0 ? "-inf" : finite.get_str());
  }
  return sig;
}

std::size_t n_types(const CaseContext& c) { return std::size_t{1} << c.rs.rank(); }
std::size_t n_samples(const CaseContext& c) { return c.opts.samples; }

// ---------------------------------------------------------------------------
// seminorm

Failure gauss_norm(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const CellPolynomial f = sample_polynomial(rs, c.model, Ring::Laurent, WeylElement::identity(rs.rank()), rng);
  Val expected = Val::infinity();
  for (const auto& [m, a] : f.terms()) expected = min(expected, c.model.valuation(a));
  const ApartmentPoint x0 = ApartmentPoint::origin(rs.rank());
  const Val got = eval_seminorm(c.model, x0, BoundaryPoint::interior(x0, WeylElement::identity(rs.rank())), f);
  if (got == expected) return std::nullopt;
  return fail("Theta(x0,x0)(f) = " + got.to_string() + ", Gauss norm = " + expected.to_string(),
              {{"f", format_polynomial(f)}});
}

struct PairSample {
  ApartmentPoint x;
  BoundaryPoint y;
};

PairSample sample_pair(const RootSystem& rs, Rng& rng) {
  const WeylElement w = sample_weyl_element(rs, rng);
  ApartmentPoint x = sample_apartment_point(rs, rng);
  BoundaryPoint y = sample_boundary_point(rs, w, rng);
  return {std::move(x), std::move(y)};
}

Json pair_input(const RootSystem& rs, const PairSample& p) { return {{"x", str(p.x)}, {"y", str(rs, p.y)}}; }

Failure multiplicativity(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const PairSample p = sample_pair(rs, rng);
  const CellPolynomial f = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  const CellPolynomial g = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  const Val vf = eval_seminorm(c.model, p.x, p.y, f);
  const Val vg = eval_seminorm(c.model, p.x, p.y, g);
  const Val vfg = eval_seminorm(c.model, p.x, p.y, poly_mul(f, g));
  if (vfg == vf + vg) return std::nullopt;
  Json in = pair_input(rs, p);
  in["f"] = format_polynomial(f);
  in["g"] = format_polynomial(g);
  return fail("eval(fg) = " + vfg.to_string() + " but eval(f) + eval(g) = " + (vf + vg).to_string(), in);
}

Failure ultrametric(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const PairSample p = sample_pair(rs, rng);
  const CellPolynomial f = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  const CellPolynomial g = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  CellPolynomial unif(rs, Ring::Monoid, p.y.chart());
  unif.add_term(uniformizer(c.model), zero_vector(rs), std::vector<int>(rs.num_roots(), 0));
  Json in = pair_input(rs, p);
  in["f"] = format_polynomial(f);
  in["g"] = format_polynomial(g);
  // g and pi*g: when eval(f) = eval(g), the second pair is forced apart.
  for (const CellPolynomial& h : {g, poly_mul(g, unif)}) {
    const Val vf = eval_seminorm(c.model, p.x, p.y, f);
    const Val vh = eval_seminorm(c.model, p.x, p.y, h);
    const Val vs = eval_seminorm(c.model, p.x, p.y, f + h);
    const Val lo = min(vf, vh);
    if (vs < lo) return fail("eval(f+g) = " + vs.to_string() + " < min = " + lo.to_string(), in);
    if (vf != vh && vs != lo)
      return fail("eval(f+g) = " + vs.to_string() + " but the values differ and min = " + lo.to_string(), in);
  }
  return std::nullopt;
}

Failure norm_on_interior(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const WeylElement w = sample_weyl_element(rs, rng);
  const ApartmentPoint x = sample_apartment_point(rs, rng);
  const BoundaryPoint y = BoundaryPoint::interior(sample_apartment_point(rs, rng), w);
  const Ring ring = coin(rng, 1, 2) ? Ring::Laurent : Ring::Monoid;
  const CellPolynomial f = sample_polynomial(rs, c.model, ring, w, rng);
  const Val v = eval_seminorm(c.model, x, y, f);
  if (v.is_finite()) return std::nullopt;
  return fail("seminorm of an interior pair vanishes on a nonzero f",
              {{"x", str(x)}, {"y", str(rs, y)}, {"f", format_polynomial(f)}});
}

Failure vanishing_iff(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const PairSample p = sample_pair(rs, rng);
  const CellPolynomial f = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  // A term vanishes iff it contains a factor with value +inf: chi on an
  // infinite coordinate, or xi_alpha for a chart-negative alpha with
  // val_y(alpha) = +inf.
  bool all_vanish = true;
  for (const auto& [m, a] : f.terms()) {
    const RootVector k = p.y.chart().apply_inverse(m.chi);
    bool vanishes = false;
    for (int i = 0; i < rs.rank(); ++i)
      if (k[static_cast<std::size_t>(i)] < 0 && p.y.coords()[static_cast<std::size_t>(i)].is_infinite()) vanishes = true;
    for (std::size_t r = 0; r < m.nu.size(); ++r) {
      if (m.nu[r] == 0) continue;
      const RootVector kr = p.y.chart().apply_inverse(rs.root(r));
      for (int i = 0; i < rs.rank(); ++i)
        if (kr[static_cast<std::size_t>(i)] < 0 && p.y.coords()[static_cast<std::size_t>(i)].is_infinite()) vanishes = true;
    }
    if (!vanishes) all_vanish = false;
  }
  const Val v = eval_seminorm(c.model, p.x, p.y, f);
  if (v.is_infinite() == all_vanish) return std::nullopt;
  Json in = pair_input(rs, p);
  in["f"] = format_polynomial(f);
  return fail(std::string("eval = ") + v.to_string() + " but every term vanishing is " + (all_vanish ? "true" : "false"),
              in);
}

// ---------------------------------------------------------------------------
// injectivity

Failure reconstruction(const CaseContext& c, std::size_t, Rng& rng) {
  const PairSample p = sample_pair(c.rs, rng);
  const auto [x, y] = reconstruct(Seminorm(c.rs, c.model, p.x, p.y));
  if (x == p.x && y == p.y) return std::nullopt;
  Json in = pair_input(c.rs, p);
  in["recovered_x"] = str(x);
  in["recovered_y"] = str(c.rs, y);
  return fail("reconstruct(Theta-bar(x, y)) != (x, y)", in);
}

Failure distinct_pairs(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const PairSample a = sample_pair(rs, rng);
  PairSample b = a;
  // Mostly near-collisions: perturb one coordinate of x or y, or nothing.
  switch (uniform_int(rng, 0, 3)) {
    case 0: {
      std::vector<Rational> v = a.x.vals();
      v[static_cast<std::size_t>(uniform_int(rng, 0, rs.rank() - 1))] += positive_rational(rng);
      b.x = ApartmentPoint(std::move(v));
      break;
    }
    case 1: {
      std::vector<Val> v = a.y.coords();
      auto& slot = v[static_cast<std::size_t>(uniform_int(rng, 0, rs.rank() - 1))];
      slot = slot.is_infinite() ? Val(sample_rational(rng)) : Val::infinity();
      b.y = BoundaryPoint(a.y.chart(), std::move(v));
      break;
    }
    case 2:
      b.x = sample_apartment_point(rs, rng);
      b.y = sample_boundary_point(rs, a.y.chart(), rng);
      break;
    default:
      break;
  }
  const auto basis = monomial_basis(rs, a.y.chart());
  const bool same_values = basis_values(Seminorm(rs, c.model, a.x, a.y), basis) ==
                           basis_values(Seminorm(rs, c.model, b.x, b.y), basis);
  const bool same_pair = a.x == b.x && a.y == b.y;
  if (same_values == same_pair) return std::nullopt;
  return fail(same_pair ? "equal pairs give different seminorms" : "distinct pairs collide on the monomial basis",
              {{"x", str(a.x)}, {"y", str(rs, a.y)}, {"x2", str(b.x)}, {"y2", str(rs, b.y)}});
}

Failure stratum_separation(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const WeylElement w = sample_weyl_element(rs, rng);
  const ParabolicType t1 = random_type(rs, rng);
  ParabolicType t2 = random_type(rs, rng);
  if (t2 == t1) t2 = ParabolicType(t1.bits() ^ 1u);
  const BoundaryPoint y1 = sample_point_of_type(rs, w, t1, rng);
  const BoundaryPoint y2 = sample_point_of_type(rs, w, t2, rng);
  const ApartmentPoint x1 = sample_apartment_point(rs, rng);
  const ApartmentPoint x2 = sample_apartment_point(rs, rng);
  const auto basis = monomial_basis(rs, w);
  auto pattern = [&](const ApartmentPoint& x, const BoundaryPoint& y) {
    std::vector<bool> v;
    for (const auto& val : basis_values(Seminorm(rs, c.model, x, y), basis)) v.push_back(val.is_infinite());
    return v;
  };
  if (pattern(x1, y1) != pattern(x2, y2)) return std::nullopt;
  return fail("pairs in different strata share a vanishing pattern",
              {{"x", str(x1)}, {"y", str(rs, y1)}, {"x2", str(x2)}, {"y2", str(rs, y2)}});
}

// ---------------------------------------------------------------------------
// equivariance

std::vector<Rational> sample_shift(const RootSystem& rs, Rng& rng) {
  std::vector<Rational> v;
  for (int i = 0; i < rs.rank(); ++i) v.push_back(sample_rational(rng));
  return v;
}

Failure torus_identity(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const PairSample p = sample_pair(rs, rng);
  const CellPolynomial f = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  const Seminorm s(rs, c.model, p.x, p.y);
  const std::vector<Rational> zero(static_cast<std::size_t>(rs.rank()), Rational(0));
  if (s.translate(zero, zero)(f) == s(f) && s.translate(zero, zero).translated_pair() == std::pair(p.x, p.y))
    return std::nullopt;
  Json in = pair_input(rs, p);
  in["f"] = format_polynomial(f);
  return fail("zero translation changed the seminorm", in);
}

Failure torus_translation(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const PairSample p = sample_pair(rs, rng);
  const CellPolynomial f = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  const std::vector<Rational> sv = sample_shift(rs, rng), tv = sample_shift(rs, rng);
  const Seminorm moved = Seminorm(rs, c.model, p.x, p.y).translate(sv, tv);
  const ApartmentPoint tx = p.x.shifted(tv);
  const BoundaryPoint sy = p.y.shifted(sv);
  std::vector<CellPolynomial> probes{f};
  for (const auto& [m, a] : f.terms()) probes.push_back(monomial(rs, Ring::Monoid, f.chart(), m));
  for (const auto& g : probes) {
    const Val lhs = moved(g), rhs = eval_seminorm(c.model, tx, sy, g);
    if (lhs != rhs) {
      Json in = pair_input(rs, p);
      in["f"] = format_polynomial(g);
      std::string s, t;
      for (std::size_t i = 0; i < sv.size(); ++i) {
        s += (i ? "," : "") + sv[i].get_str();
        t += (i ? "," : "") + tv[i].get_str();
      }
      in["s"] = s;
      in["t"] = t;
      return fail("translate() = " + lhs.to_string() + " but direct evaluation = " + rhs.to_string(), in);
    }
  }
  return std::nullopt;
}

// Exhaustive over W while |W| * per stays at desk scale; random w beyond.
constexpr std::size_t kExhaustiveWeylCases = 20000;

bool weyl_exhaustive(const CaseContext& c, std::size_t per) {
  return c.group && c.group->elements.size() * per <= kExhaustiveWeylCases;
}

std::size_t weyl_cases(const CaseContext& c) {
  const std::size_t per = std::min(c.opts.samples, c.opts.weyl_samples_per_element);
  return weyl_exhaustive(c, per) ? c.group->elements.size() * per : c.opts.samples;
}

Failure weyl_chart(const CaseContext& c, std::size_t index, Rng& rng) {
  const auto& rs = c.rs;
  const std::size_t per = std::min(c.opts.samples, c.opts.weyl_samples_per_element);
  const WeylElement w = weyl_exhaustive(c, per) ? c.group->elements[index / per] : sample_weyl_element(rs, rng);
  const PairSample p = sample_pair(rs, rng);
  const CellPolynomial f = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  const Val lhs = eval_seminorm(c.model, p.x, p.y, f);
  const CellPolynomial wf = weyl_transport(f, w);
  const BoundaryPoint wy(w * p.y.chart(), p.y.coords());
  const Val rhs = eval_seminorm(c.model, p.x.transformed(w), wy, wf);
  if (lhs == rhs) return std::nullopt;
  Json in = pair_input(rs, p);
  in["f"] = format_polynomial(f);
  std::string word;
  for (int i : w.word(rs)) word += (word.empty() ? "" : ",") + std::to_string(i);
  in["w"] = word;
  return fail("eval(x, y, f) = " + lhs.to_string() + " but eval(w x, w y, w f) = " + rhs.to_string(), in);
}

Failure rescaling(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const PairSample p = sample_pair(rs, rng);
  const CellPolynomial f = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  const Rational q = positive_rational(rng);
  const Val lhs = eval_seminorm(c.model, p.x.scaled(q), p.y.scaled(q), f, q);
  const Val rhs = eval_seminorm(c.model, p.x, p.y, f).scaled(q);
  if (lhs == rhs) return std::nullopt;
  Json in = pair_input(rs, p);
  in["f"] = format_polynomial(f);
  in["q"] = q.get_str();
  return fail("value-group rescaling: " + lhs.to_string() + " != " + rhs.to_string(), in);
}

// ---------------------------------------------------------------------------
// continuity

/// Interior points y_n -> y: finite coordinates settle after a short
/// perturbation, +inf coordinates grow like n^2.
std::vector<BoundaryPoint> approach(const BoundaryPoint& y, std::size_t horizon) {
  std::vector<BoundaryPoint> seq;
  for (std::size_t n = 1; n <= horizon; ++n) {
    std::vector<Val> coords;
    for (const auto& c : y.coords()) {
      if (c.is_infinite())
        coords.emplace_back(Rational(static_cast<long>(n * n)));
      else
        coords.emplace_back(c.value() + (n <= horizon / 4 ? Rational(1, static_cast<long>(n)) : Rational(0)));
    }
    seq.emplace_back(y.chart(), std::move(coords));
  }
  return seq;
}

Failure boundary_sequences(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const PairSample p = sample_pair(rs, rng);
  const CellPolynomial f = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  const auto seq = approach(p.y, c.opts.horizon);
  Json in = pair_input(rs, p);
  in["f"] = format_polynomial(f);
  if (!converges(seq, p.y, c.opts.horizon)) return fail("sampled sequence does not converge to y", in);
  std::vector<Val> values;
  for (const auto& yn : seq) values.push_back(eval_seminorm(c.model, p.x, yn, f));
  const Val limit = eval_seminorm(c.model, p.x, p.y, f);
  if (converges(values, limit, c.opts.horizon)) return std::nullopt;
  return fail("eval(x, y_n, f) does not converge to eval(x, y, f) = " + limit.to_string() + "; last term " +
                  values.back().to_string(),
              in);
}

Failure constant_sequence(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const PairSample p = sample_pair(rs, rng);
  const CellPolynomial f = sample_polynomial(rs, c.model, Ring::Monoid, p.y.chart(), rng);
  const std::vector<BoundaryPoint> seq(c.opts.horizon, p.y);
  const std::vector<Val> values(c.opts.horizon, eval_seminorm(c.model, p.x, p.y, f));
  if (converges(seq, p.y, c.opts.horizon) && converges(values, values.front(), c.opts.horizon)) return std::nullopt;
  return fail("constant sequence judged non-convergent", pair_input(rs, p));
}

Failure oscillation_rejected(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const PairSample p = sample_pair(rs, rng);
  const auto i = static_cast<std::size_t>(uniform_int(rng, 0, rs.rank() - 1));
  const Rational base = sample_rational(rng);
  std::vector<BoundaryPoint> seq;
  for (std::size_t n = 0; n < c.opts.horizon; ++n) {
    std::vector<Val> coords = p.y.coords();
    coords[i] = Val(base + Rational(static_cast<long>(n % 2)));
    seq.emplace_back(p.y.chart(), std::move(coords));
  }
  std::vector<Val> limit_coords = p.y.coords();
  for (const Val& target : {Val(base), Val(base + 1), Val::infinity()}) {
    limit_coords[i] = target;
    if (converges(seq, BoundaryPoint(p.y.chart(), limit_coords), c.opts.horizon))
      return fail("oscillating sequence judged convergent to " + target.to_string(), pair_input(rs, p));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// strata

Failure base_point_type(const CaseContext& c, std::size_t index, Rng&) {
  const ParabolicType tau(static_cast<std::uint32_t>(index));
  const BoundaryPoint e = base_point(c.rs, tau);
  for (int i = 0; i < c.rs.rank(); ++i)
    if (e.coords()[static_cast<std::size_t>(i)] != (tau.contains(i) ? Val(0) : Val::infinity()))
      return fail("base point coordinates wrong", {{"tau", tau.bitstring(c.rs.rank())}});
  if (classify_stratum(e) == tau) return std::nullopt;
  return fail("classify_stratum(base_point(tau)) = " + classify_stratum(e).bitstring(c.rs.rank()),
              {{"tau", tau.bitstring(c.rs.rank())}});
}

Failure one_ps(const CaseContext& c, std::size_t index, Rng& rng) {
  const auto& rs = c.rs;
  const std::size_t n = n_types(c);
  if (index < n) {
    const ParabolicType tau(static_cast<std::uint32_t>(index));
    if (one_ps_limit(rs, lambda_tau(rs, tau)) == base_point(rs, tau)) return std::nullopt;
    return fail("lim lambda_tau(t) != e_tau", {{"tau", tau.bitstring(rs.rank())}});
  }
  std::vector<int> lambda;
  for (int i = 0; i < rs.rank(); ++i) lambda.push_back(uniform_int(rng, 1, 5));
  if (index == n) {
    if (one_ps_limit(rs, lambda) == base_point(rs, ParabolicType())) return std::nullopt;
    return fail("regular lambda does not reach the closed orbit");
  }
  lambda[static_cast<std::size_t>(uniform_int(rng, 0, rs.rank() - 1))] = -uniform_int(rng, 1, 5);
  try {
    one_ps_limit(rs, lambda);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoLimit) return std::nullopt;
    throw;
  }
  return fail("lambda with a negative pairing produced a limit");
}

constexpr std::size_t kMembershipPerType = 10;

Failure membership(const CaseContext& c, std::size_t index, Rng& rng) {
  const auto& rs = c.rs;
  const ParabolicType tau(static_cast<std::uint32_t>(index / kMembershipPerType));
  const bool first = index % kMembershipPerType == 0;
  const WeylElement w = first ? WeylElement::identity(rs.rank()) : sample_weyl_element(rs, rng);
  const ApartmentPoint x = first ? ApartmentPoint::origin(rs.rank()) : sample_apartment_point(rs, rng);
  const BoundaryPoint y = first ? base_point(rs, tau) : sample_point_of_type(rs, w, tau, rng);
  const Json in{{"x", str(x)}, {"y", str(rs, y)}};
  const StratumDescriptor d = stratum_membership(rs, x, y);
  if (d.tau != tau) return fail("stratum_membership returned type " + d.tau.bitstring(rs.rank()), in);
  if (d.chart != min_coset_representative(rs, w, tau)) return fail("descriptor chart is not the minimal coset representative", in);
  // Oracle: alpha = w(gamma) with gamma negative vanishes iff -gamma has
  // support outside tau.
  std::set<std::size_t> expected;
  for (std::size_t r = 0; r < rs.num_roots(); ++r) {
    const RootVector g = w.apply_inverse(rs.root(r));
    bool negative = true, outside = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (g[static_cast<std::size_t>(i)] > 0) negative = false;
      if (g[static_cast<std::size_t>(i)] != 0 && !tau.contains(i)) outside = true;
    }
    if (negative && outside) expected.insert(r);
  }
  const ValuePattern pat = value_pattern(rs, x, y);
  std::set<std::size_t> chars, xis;
  for (std::size_t k = 0; k < pat.negative_roots.size(); ++k)
    if (pat.character_values[k].is_infinite()) chars.insert(pat.negative_roots[k]);
  for (std::size_t r = 0; r < rs.num_roots(); ++r)
    if (pat.xi_values[r].is_infinite()) xis.insert(r);
  if (chars != expected) return fail("|alpha| vanishing set differs from -w Phi(R_u(P))", in);
  if (xis != expected) return fail("|xi_alpha| vanishing set differs from -w Phi(R_u(P))", in);
  std::set<std::size_t> from_descriptor;
  for (std::size_t r : d.radical) from_descriptor.insert(rs.negative_of(r));
  if (from_descriptor != expected) return fail("descriptor radical disagrees with the vanishing set", in);
  return std::nullopt;
}

Failure closure(const CaseContext& c, std::size_t, Rng&) {
  const auto& rs = c.rs;
  const ClosurePoset p = closure_poset(rs);
  if (!p.agree) return fail("divisor-intersection and subset-union closures disagree");
  if (p.types.size() != n_types(c)) return fail("stratum count " + std::to_string(p.types.size()) + " != 2^rank");
  if (static_cast<int>(p.divisors.size()) != rs.rank()) return fail("boundary divisor count != rank");
  const auto open = std::count_if(p.types.begin(), p.types.end(), [&](ParabolicType t) { return t == ParabolicType::full(rs.rank()); });
  const auto closed = std::count_if(p.types.begin(), p.types.end(), [](ParabolicType t) { return t == ParabolicType(); });
  if (open != 1 || closed != 1) return fail("expected exactly one open and one closed stratum");
  std::set<ParabolicType> distinct;
  for (const auto& t : p.types) distinct.insert(classify_stratum(base_point(rs, t)));
  if (distinct.size() != p.types.size()) return fail("base points do not meet 2^rank distinct strata");
  for (std::size_t a = 0; a < p.types.size(); ++a)
    for (std::size_t b = 0; b < p.types.size(); ++b) {
      const bool subset = (p.types[a].bits() & ~p.types[b].bits()) == 0;
      if (p.by_subsets[a][b] != subset || p.by_divisors[a][b] != subset)
        return fail("closure relation wrong", {{"a", p.types[a].bitstring(rs.rank())}, {"b", p.types[b].bitstring(rs.rank())}});
    }
  return std::nullopt;
}

Failure stratification(const CaseContext& c, std::size_t index, Rng& rng) {
  const auto& rs = c.rs;
  const ParabolicType tau(static_cast<std::uint32_t>(index));
  const ClosurePoset p = closure_poset(rs);
  const auto closure = p.closure_of(tau);
  const std::set<ParabolicType> expected(closure.begin(), closure.end());
  // Types reached as limits of points of X(tau) by sending finite coordinates to +inf.
  const BoundaryPoint y = sample_point_of_type(rs, sample_weyl_element(rs, rng), tau, rng);
  std::set<ParabolicType> reached;
  for (std::uint32_t erase = 0; erase < (1u << rs.rank()); ++erase) {
    if ((erase & ~tau.bits()) != 0) continue;
    std::vector<Val> coords = y.coords();
    for (int i = 0; i < rs.rank(); ++i)
      if ((erase >> i) & 1u) coords[static_cast<std::size_t>(i)] = Val::infinity();
    reached.insert(classify_stratum(BoundaryPoint(y.chart(), coords)));
  }
  if (reached == expected) return std::nullopt;
  return fail("strata in the closure of X(tau) differ from {tau' <= tau}", {{"tau", tau.bitstring(rs.rank())}});
}

// Full sampling per type up to rank 4; beyond that 2^rank types already
// multiply the work, so each type gets a token sample.
std::size_t pi_per_type(const CaseContext& c) { return std::min<std::size_t>(c.opts.samples, c.rs.rank() <= 4 ? 100 : 10); }

Failure pi_tau(const CaseContext& c, std::size_t index, Rng& rng) {
  const auto& rs = c.rs;
  const std::size_t per = pi_per_type(c);
  const ParabolicType tau(static_cast<std::uint32_t>(index / per));  // never the full type
  const bool origin = index % per == 0;
  const WeylElement w = sample_weyl_element(rs, rng);
  const ApartmentPoint x = origin ? ApartmentPoint::origin(rs.rank()) : sample_apartment_point(rs, rng);
  const BoundaryPoint y1 = sample_point_of_type(rs, w, tau, rng);
  const BoundaryPoint y2 = sample_point_of_type(rs, w, tau, rng);
  const Json in{{"x", str(x)}, {"y", str(rs, y1)}, {"y2", str(rs, y2)}};
  const auto a = project_pi_tau(rs, x, y1);
  const auto b = project_pi_tau(rs, x, y2);
  if (a != b) return fail("pi_tau differs on one stratum fiber", in);
  if (a.first.tau != tau) return fail("pi_tau names the wrong type", in);
  for (const auto& [r, v] : a.second.coords) {
    const Val expected(x.pair(rs.root(r)));
    if (v != expected) return fail("flag coordinate " + v.to_string() + " != <x, alpha> = " + expected.to_string(), in);
    if (origin && v != Val(0)) return fail("x0 does not give the all-ones pattern", in);
  }
  if (a.second.coords.size() != a.first.radical.size()) return fail("flag coordinates do not cover Phi(R_u(P))", in);
  return std::nullopt;
}

Failure pi_tau_injective(const CaseContext& c, std::size_t index, Rng& rng) {
  const auto& rs = c.rs;
  const std::size_t per = pi_per_type(c);
  const ParabolicType tau(static_cast<std::uint32_t>(index / per));
  const WeylElement w = sample_weyl_element(rs, rng);
  const BoundaryPoint y = sample_point_of_type(rs, w, tau, rng);
  const ApartmentPoint x = sample_apartment_point(rs, rng);
  // Perturb one simple-root coordinate; injectivity is asserted only on
  // components where tau is nondegenerate.
  const int i = uniform_int(rng, 0, rs.rank() - 1);
  std::vector<Rational> v = x.vals();
  v[static_cast<std::size_t>(i)] += positive_rational(rng);
  const ApartmentPoint x2(std::move(v));
  const auto& comp = rs.components()[static_cast<std::size_t>(rs.component_of(i))];
  bool component_degenerate = true;
  for (int j = comp.offset; j < comp.offset + comp.rank; ++j)
    if (!tau.contains(j)) component_degenerate = false;
  if (component_degenerate) return std::nullopt;
  if (project_pi_tau(rs, x, y) != project_pi_tau(rs, x2, y)) return std::nullopt;
  return fail("pi_tau does not separate x on a nondegenerate component",
              {{"x", str(x)}, {"x2", str(x2)}, {"y", str(rs, y)}});
}

Failure classify_extremes_monotone(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const WeylElement w = sample_weyl_element(rs, rng);
  const ApartmentPoint x = sample_apartment_point(rs, rng);
  if (classify_stratum(BoundaryPoint::interior(x, w)) != ParabolicType::full(rs.rank()))
    return fail("interior point not of type Delta", {{"x", str(x)}});
  if (classify_stratum(BoundaryPoint(w, std::vector<Val>(static_cast<std::size_t>(rs.rank()), Val::infinity()))) !=
      ParabolicType())
    return fail("all-infinite point not of type empty");
  const BoundaryPoint y = sample_boundary_point(rs, w, rng);
  const ParabolicType tau = classify_stratum(y);
  for (int i : tau.indices()) {
    std::vector<Val> coords = y.coords();
    coords[static_cast<std::size_t>(i)] = Val::infinity();
    const ParabolicType smaller = classify_stratum(BoundaryPoint(w, coords));
    if (!(smaller.subset_of(tau) && smaller != tau && smaller == tau.without(i)))
      return fail("erasing a finite coordinate did not strictly shrink tau", {{"y", str(rs, y)}});
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// charts

std::size_t fan_cases(const CaseContext& c) { return c.rs.rank() <= 2 ? std::size_t(c.rs.rank() == 1 ? 13 : 169) : c.opts.samples; }

Failure fan_cover(const CaseContext& c, std::size_t index, Rng& rng) {
  const auto& rs = c.rs;
  ApartmentPoint x;
  if (rs.rank() <= 2) {
    // Exhaustive grid with step 1/2 on [-3, 3]^rank.
    std::vector<Rational> v;
    std::size_t k = index;
    for (int i = 0; i < rs.rank(); ++i) {
      Rational q(static_cast<long>(k % 13) - 6, 2);
      q.canonicalize();
      v.push_back(q);
      k /= 13;
    }
    x = ApartmentPoint(std::move(v));
  } else {
    x = sample_apartment_point(rs, rng);
  }
  const WeylElement w = chamber_of(rs, x);
  if (!FanCone(rs, w, ParabolicType()).contains(x)) return fail("chamber_of(x) does not contain x", {{"x", str(x)}});
  if (!c.group || c.group->elements.size() > 2000) return std::nullopt;
  // Brute force over all chambers w B w^-1.
  std::size_t chambers = 0;
  for (const auto& u : c.group->elements)
    if (FanCone(rs, u, ParabolicType()).contains(x)) ++chambers;
  if (chambers == 0) return fail("no Weyl chamber contains x", {{"x", str(x)}});
  // The smallest cone containing x: type = simple roots of the chamber on
  // whose walls x lies.
  ParabolicType wall;
  for (int i = 0; i < rs.rank(); ++i) {
    RootVector e = zero_vector(rs);
    e[static_cast<std::size_t>(i)] = 1;
    if (x.pair(w.apply(e)) == 0) wall = wall.with(i);
  }
  if (!FanCone(rs, w, wall).contains(x)) return fail("face cone c(P) through x does not contain x", {{"x", str(x)}});
  return std::nullopt;
}

Failure glue_equivalence(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const BoundaryPoint p = sample_boundary_point(rs, sample_weyl_element(rs, rng), rng);
  const ParabolicType tau = classify_stratum(p);
  const BoundaryPoint q = transport_within_type(rs, p, sample_levi_element(rs, tau, rng));
  const BoundaryPoint r = transport_within_type(rs, q, sample_levi_element(rs, tau, rng));
  const Json in{{"p", str(rs, p)}, {"q", str(rs, q)}, {"r", str(rs, r)}};
  if (!glue_equal(rs, p, p)) return fail("glue_equal is not reflexive", in);
  if (!glue_equal(rs, p, q) || !glue_equal(rs, q, p)) return fail("transport within W_tau not glue-equal", in);
  if (!glue_equal(rs, q, r) || !glue_equal(rs, p, r)) return fail("glue_equal is not transitive", in);
  // A random second point: symmetry must hold either way.
  const BoundaryPoint s = sample_boundary_point(rs, sample_weyl_element(rs, rng), rng);
  if (glue_equal(rs, p, s) != glue_equal(rs, s, p)) return fail("glue_equal is not symmetric", in);
  if (glue_equal(rs, p, s) && glue_equal(rs, s, r) != glue_equal(rs, p, r)) return fail("glue_equal is not transitive", in);
  // Changing a finite coordinate changes the point.
  const auto finite = tau.indices();
  if (!finite.empty()) {
    std::vector<Val> coords = p.coords();
    auto& slot = coords[static_cast<std::size_t>(finite[0])];
    slot = slot + Val(1);
    if (glue_equal(rs, p, BoundaryPoint(p.chart(), coords))) return fail("distinct residual points glued", in);
  }
  return std::nullopt;
}

Failure interior_transport(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const ApartmentPoint x = sample_apartment_point(rs, rng);
  const BoundaryPoint a = BoundaryPoint::interior(x, sample_weyl_element(rs, rng));
  const BoundaryPoint b = BoundaryPoint::interior(x, sample_weyl_element(rs, rng));
  if (!glue_equal(rs, a, b)) return fail("interior point not glue-equal across charts", {{"x", str(x)}});
  if (a.in_chart(b.chart()) != b || a.to_apartment() != x) return fail("chart transport of an interior point is lossy", {{"x", str(x)}});
  return std::nullopt;
}

Failure limit_oracle(const CaseContext& c, std::size_t, Rng& rng) {
  const auto& rs = c.rs;
  const BoundaryPoint p = sample_boundary_point(rs, sample_weyl_element(rs, rng), rng);
  BoundaryPoint q;
  switch (uniform_int(rng, 0, 2)) {
    case 0:
      q = transport_within_type(rs, p, sample_levi_element(rs, classify_stratum(p), rng));
      break;
    case 1:  // same coordinates, another chart
      q = BoundaryPoint(sample_weyl_element(rs, rng), p.coords());
      break;
    default:
      q = sample_boundary_point(rs, sample_weyl_element(rs, rng), rng);
      break;
  }
  const bool oracle = limit_signature(rs, p) == limit_signature(rs, q);
  if (glue_equal(rs, p, q) == oracle) return std::nullopt;
  return fail(std::string("glue_equal disagrees with the limit oracle (oracle says ") + (oracle ? "equal" : "distinct") + ")",
              {{"p", str(rs, p)}, {"q", str(rs, q)}});
}

// ---------------------------------------------------------------------------
// Registry

std::size_t constant(std::size_t n, const CaseContext&) { return n; }

const std::map<std::string, std::vector<Property>>& registry() {
  using namespace std::placeholders;
  static const std::map<std::string, std::vector<Property>> r = {
      {"seminorm",
       {{"gauss_norm", n_samples, gauss_norm},
        {"multiplicativity", n_samples, multiplicativity},
        {"ultrametric", n_samples, ultrametric},
        {"norm_on_interior", n_samples, norm_on_interior},
        {"vanishing_iff", n_samples, vanishing_iff}}},
      {"injectivity",
       {{"reconstruction", n_samples, reconstruction},
        {"distinct_pairs", n_samples, distinct_pairs},
        {"stratum_separation", n_samples, stratum_separation}}},
      {"equivariance",
       {{"torus_identity", n_samples, torus_identity},
        {"torus_translation", n_samples, torus_translation},
        {"weyl_chart", weyl_cases, weyl_chart},
        {"rescaling", n_samples, rescaling}}},
      {"continuity",
       {{"boundary_sequences", n_samples, boundary_sequences},
        {"constant_sequence", n_samples, constant_sequence},
        {"oscillation_rejected", n_samples, oscillation_rejected}}},
      {"strata",
       {{"base_point_type", n_types, base_point_type},
        {"one_ps_limit", [](const CaseContext& c) { return n_types(c) + 2; }, one_ps},
        {"membership", [](const CaseContext& c) { return n_types(c) * kMembershipPerType; }, membership},
        {"closure_poset", std::bind(constant, 1, _1), closure},
        {"stratification", n_types, stratification},
        {"pi_tau", [](const CaseContext& c) { return (n_types(c) - 1) * pi_per_type(c); }, pi_tau},
        {"pi_tau_injective", [](const CaseContext& c) { return (n_types(c) - 1) * pi_per_type(c); }, pi_tau_injective},
        {"classify_extremes_monotone", n_samples, classify_extremes_monotone}}},
      {"charts",
       {{"fan_cover", fan_cases, fan_cover},
        {"glue_equivalence", n_samples, glue_equivalence},
        {"interior_transport", n_samples, interior_transport},
        {"limit_oracle", n_samples, limit_oracle}}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"seminorm", "injectivity", "equivariance", "continuity", "strata", "charts"};
  return names;
}

const std::vector<Property>& properties_of(const std::string& check) {
  const auto& r = registry();
  const auto it = r.find(check);
  if (it == r.end()) throw Error(ErrorKind::Usage, "unknown check '" + check + "'");
  return it->second;
}

CheckReport check_seminorm(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts) {
  return run_check("seminorm", properties_of("seminorm"), rs, model, opts);
}
CheckReport check_injectivity(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts) {
  return run_check("injectivity", properties_of("injectivity"), rs, model, opts);
}
CheckReport check_equivariance(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts) {
  return run_check("equivariance", properties_of("equivariance"), rs, model, opts);
}
CheckReport check_continuity(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts) {
  return run_check("continuity", properties_of("continuity"), rs, model, opts);
}
CheckReport check_strata(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts) {
  return run_check("strata", properties_of("strata"), rs, model, opts);
}
CheckReport check_charts(const RootSystem& rs, const CoefficientModel& model, const HarnessOptions& opts) {
  return run_check("charts", properties_of("charts"), rs, model, opts);
}

std::vector<CheckReport> run_suite(const RootSystem& rs, const CoefficientModel& model, const std::string& suite,
                                   const HarnessOptions& opts) {
  std::vector<std::string> selected;
  if (suite == "all")
    selected = check_names();
  else if (std::find(check_names().begin(), check_names().end(), suite) != check_names().end())
    selected = {suite};
  else
    throw Error(ErrorKind::Usage, "unknown suite '" + suite + "' (expected all or one of seminorm, injectivity, "
                                  "equivariance, continuity, strata, charts)");
  std::vector<std::future<CheckReport>> jobs;
  for (const auto& name : selected)
    jobs.push_back(std::async(std::launch::async, [&rs, &model, &opts, name] {
      return run_check(name, properties_of(name), rs, model, opts);
    }));
  std::vector<CheckReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

const std::vector<CoverageEntry>& coverage_manifest() {
  static const std::vector<CoverageEntry> m = {
      {"apartment.classify_extremes_and_monotonicity", {"strata/classify_extremes_monotone"}},
      {"apartment.fan_cones_cover", {"charts/fan_cover"}},
      {"apartment.glue_equal_equivalence", {"charts/glue_equivalence", "charts/limit_oracle"}},
      {"apartment.interior_glue_across_charts", {"charts/interior_transport"}},
      {"apartment.strata_count", {"strata/closure_poset"}},
      {"bigcell.multiplicativity", {"seminorm/multiplicativity"}},
      {"bigcell.ultrametric", {"seminorm/ultrametric"}},
      {"bigcell.norm_on_interior", {"seminorm/norm_on_interior", "seminorm/vanishing_iff"}},
      {"bigcell.reconstruction", {"injectivity/reconstruction", "injectivity/distinct_pairs"}},
      {"bigcell.torus_equivariance", {"equivariance/torus_identity", "equivariance/torus_translation"}},
      {"bigcell.weyl_covariance", {"equivariance/weyl_chart"}},
      {"bigcell.continuity", {"continuity/boundary_sequences", "continuity/constant_sequence"}},
      {"wonder.base_point_type", {"strata/base_point_type"}},
      {"wonder.one_ps_limit", {"strata/one_ps_limit"}},
      {"wonder.closure_characterizations", {"strata/closure_poset"}},
      {"wonder.strata_count_open_closed", {"strata/closure_poset"}},
      {"wonder.pi_tau_constancy_and_injectivity", {"strata/pi_tau", "strata/pi_tau_injective"}},
      {"wonder.stratification_compatibility", {"strata/stratification"}},
  };
  return m;
}

}  // namespace thetabar
