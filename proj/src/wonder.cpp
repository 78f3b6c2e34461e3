#include "thetabar/wonder.hpp"

#include <algorithm>
#include <sstream>

#include "thetabar/error.hpp"

namespace thetabar {

namespace {

// Valuation of the unit coefficient is 0 in every model, so the value
// patterns below do not depend on the choice.
const CoefficientModel& unit_model() {
  static const CoefficientModel model = CoefficientModel::p_adic(2);
  return model;
}

CellPolynomial chart_xi(const RootSystem& rs, const WeylElement& chart, std::size_t root) {
  CellPolynomial p(rs, Ring::Monoid, chart);
  p.add_term(Coefficient(1), RootVector(static_cast<std::size_t>(rs.rank()), 0),
             std::vector<std::pair<std::size_t, int>>{{root, 1}});
  return p;
}

CellPolynomial chart_character(const RootSystem& rs, const WeylElement& chart, const RootVector& chi) {
  CellPolynomial p(rs, Ring::Monoid, chart);
  p.add_term(Coefficient(1), chi, std::vector<int>(rs.num_roots(), 0));
  return p;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

StratumDescriptor stratum_descriptor(const RootSystem& rs, const WeylElement& chart, ParabolicType tau) {
  StratumDescriptor d;
  d.tau = tau;
  d.chart = min_coset_representative(rs, chart, tau);
  const std::vector<std::size_t> perm = d.chart.root_permutation(rs);
  const LeviDecomposition ld = levi_and_radical_roots(rs, tau);
  for (std::size_t r : ld.levi) d.levi.push_back(perm[r]);
  for (std::size_t r : ld.radical) d.radical.push_back(perm[r]);
  std::sort(d.levi.begin(), d.levi.end());
  std::sort(d.radical.begin(), d.radical.end());
  return d;
}

BoundaryPoint base_point(const RootSystem& rs, ParabolicType tau) {
  std::vector<Val> coords;
  for (int i = 0; i < rs.rank(); ++i) coords.push_back(tau.contains(i) ? Val(0) : Val::infinity());
  return BoundaryPoint(std::move(coords));
}

std::vector<int> lambda_tau(const RootSystem& rs, ParabolicType tau) {
  std::vector<int> m;
  for (int i = 0; i < rs.rank(); ++i) m.push_back(tau.contains(i) ? 0 : 1);
  return m;
}

BoundaryPoint one_ps_limit(const RootSystem& rs, std::span<const int> pairings) {
  if (static_cast<int>(pairings.size()) != rs.rank())
    throw Error(ErrorKind::Domain, "one_ps_limit: expected one pairing per simple root");
  std::vector<Val> coords;
  for (int m : pairings) {
    if (m < 0) throw Error(ErrorKind::NoLimit, "lambda(t) has no limit in Z as t -> 0: negative pairing");
    // The coordinate -alpha_i of lambda(t) is t^m; its valuation m * val(t) tends to +inf iff m > 0.
    coords.push_back(m > 0 ? Val::infinity() : Val(0));
  }
  return BoundaryPoint(std::move(coords));
}

// ---------------------------------------------------------------------------
// Closure poset

ClosurePoset closure_poset(const RootSystem& rs) {
  ClosurePoset p;
  p.rank = rs.rank();
  p.types = type_poset(rs).types;
  for (int i = 0; i < rs.rank(); ++i) p.divisors.push_back(ParabolicType::full(rs.rank()).without(i));
  const std::size_t n = p.types.size();
  p.by_subsets.assign(n, std::vector<bool>(n, false));
  p.by_divisors.assign(n, std::vector<bool>(n, false));
  std::vector<BoundaryPoint> base;
  for (const auto& t : p.types) base.push_back(base_point(rs, t));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      p.by_subsets[a][b] = p.types[a].subset_of(p.types[b]);
      // X(tau') lies in D_i iff the coordinate -alpha_i vanishes at e_{tau'}.
      bool in_all = true;
      for (int i = 0; i < rs.rank(); ++i)
        if (!p.types[b].contains(i) && base[a].coords()[static_cast<std::size_t>(i)].is_finite()) in_all = false;
      p.by_divisors[a][b] = in_all;
    }
  p.agree = p.by_subsets == p.by_divisors;
  return p;
}

std::vector<std::pair<ParabolicType, ParabolicType>> ClosurePoset::covers() const {
  std::vector<std::pair<ParabolicType, ParabolicType>> out;
  const std::size_t n = types.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !by_subsets[a][b]) continue;
      bool covering = true;
      for (std::size_t c = 0; c < n && covering; ++c)
        if (c != a && c != b && by_subsets[a][c] && by_subsets[c][b]) covering = false;
      if (covering) out.emplace_back(types[a], types[b]);
    }
  return out;
}

std::vector<ParabolicType> ClosurePoset::closure_of(ParabolicType tau) const {
  std::vector<ParabolicType> out;
  const auto it = std::find(types.begin(), types.end(), tau);
  if (it == types.end()) throw Error(ErrorKind::Domain, "closure_of: unknown type");
  const auto b = static_cast<std::size_t>(it - types.begin());
  for (std::size_t a = 0; a < types.size(); ++a)
    if (by_subsets[a][b]) out.push_back(types[a]);
  return out;
}

// ---------------------------------------------------------------------------
// Projection and stratum membership

std::pair<StratumDescriptor, FlagPoint> project_pi_tau(const RootSystem& rs, const ApartmentPoint& x,
                                                        const BoundaryPoint& y) {
  const ParabolicType tau = classify_stratum(y);
  if (tau == ParabolicType::full(rs.rank()))
    throw Error(ErrorKind::Domain, "project_pi_tau: y is an interior point");
  StratumDescriptor d = stratum_descriptor(rs, y.chart(), tau);
  const Seminorm s(rs, unit_model(), x, y);
  FlagPoint flag{d, {}};
  for (std::size_t r : d.radical) flag.coords.emplace(r, s(chart_xi(rs, y.chart(), r)));
  return {std::move(d), std::move(flag)};
}

ValuePattern value_pattern(const RootSystem& rs, const ApartmentPoint& x, const BoundaryPoint& y) {
  const Seminorm s(rs, unit_model(), x, y);
  ValuePattern p;
  for (std::size_t r = 0; r < rs.num_roots(); ++r) {
    const RootVector pre = y.chart().apply_inverse(rs.root(r));
    if (std::all_of(pre.begin(), pre.end(), [](int c) { return c <= 0; })) {
      p.negative_roots.push_back(r);
      p.character_values.push_back(s(chart_character(rs, y.chart(), rs.root(r))));
    }
    p.xi_values.push_back(s(chart_xi(rs, y.chart(), r)));
  }
  return p;
}

StratumDescriptor stratum_membership(const RootSystem& rs, const ApartmentPoint& x, const BoundaryPoint& y) {
  const ParabolicType tau = classify_stratum(y);
  const LeviDecomposition ld = levi_and_radical_roots(rs, tau);
  const ValuePattern pattern = value_pattern(rs, x, y);
  const WeylElement& w = y.chart();

  enum class Role { NegRadical, LeviNeg, LeviPos, Radical };
  auto role_of = [&](std::size_t r) {
    // Classify the standard root w^-1(root r) against the Levi decomposition.
    const auto idx = rs.index_of(w.apply_inverse(rs.root(r)));
    const std::size_t g = *idx;
    if (std::binary_search(ld.radical.begin(), ld.radical.end(), g)) return Role::Radical;
    if (std::find(ld.levi_positive.begin(), ld.levi_positive.end(), g) != ld.levi_positive.end()) return Role::LeviPos;
    if (std::find(ld.levi_negative.begin(), ld.levi_negative.end(), g) != ld.levi_negative.end()) return Role::LeviNeg;
    return Role::NegRadical;
  };
  auto mismatch = [&](const std::string& what, std::size_t r) {
    throw Error(ErrorKind::PatternMismatch, what + " at root " + std::to_string(r) + " (tau=" +
                                                tau.bitstring(rs.rank()) + ")");
  };

  for (std::size_t k = 0; k < pattern.negative_roots.size(); ++k) {
    const std::size_t r = pattern.negative_roots[k];
    const Val& got = pattern.character_values[k];
    if (role_of(r) == Role::NegRadical) {
      if (got.is_finite()) mismatch("|alpha| should vanish", r);
    } else {
      const Val expected = y.pair_global(rs.root(r)) + Val(Rational(-x.pair(rs.root(r))));
      if (got.is_infinite() || got != expected) mismatch("|alpha| should equal <y,alpha><x,alpha>^-1", r);
    }
  }
  for (std::size_t r = 0; r < rs.num_roots(); ++r) {
    const Val& got = pattern.xi_values[r];
    switch (role_of(r)) {
      case Role::NegRadical:
        if (got.is_finite()) mismatch("|xi_alpha| should vanish", r);
        break;
      case Role::LeviNeg:
        if (got != y.pair_global(rs.root(r)) || got.is_infinite()) mismatch("|xi_alpha| should equal <y,alpha>", r);
        break;
      case Role::LeviPos:
      case Role::Radical:
        if (got != Val(x.pair(rs.root(r)))) mismatch("|xi_alpha| should equal <x,alpha>", r);
        break;
    }
  }
  return stratum_descriptor(rs, w, tau);
}

std::string stratum_report(const RootSystem& rs, const StratumDescriptor& d) {
  std::ostringstream out;
  const auto word = d.chart.word(rs);
  std::string w;
  for (std::size_t i = 0; i < word.size(); ++i) w += (i ? "," : "") + std::to_string(word[i]);
  std::vector<std::size_t> vanishing;
  for (std::size_t r : d.radical) vanishing.push_back(rs.negative_of(r));
  std::sort(vanishing.begin(), vanishing.end());
  out << "tau=" << d.tau.bitstring(rs.rank()) << " chart=[" << w << "] kind="
      << (d.is_open(rs.rank()) ? "open" : d.is_closed() ? "closed" : "boundary") << " levi=[" << join(d.levi)
      << "] radical=[" << join(d.radical) << "] vanishing=[" << join(vanishing) << "]";
  return out.str();
}

}  // namespace thetabar
