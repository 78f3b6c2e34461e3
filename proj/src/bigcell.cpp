#include "thetabar/bigcell.hpp"

#include <algorithm>

#include "thetabar/error.hpp"

namespace thetabar {

// ---------------------------------------------------------------------------
// CellPolynomial

CellPolynomial::CellPolynomial(const RootSystem& rs, Ring ring, WeylElement chart)
    : rs_(rs), ring_(ring), chart_(std::move(chart)) {
  if (chart_.rank() != rs.rank()) throw Error(ErrorKind::Domain, "chart rank differs from the root system rank");
}

CellPolynomial CellPolynomial::constant(const RootSystem& rs, Ring ring, const Coefficient& c) {
  CellPolynomial p(rs, ring);
  p.add_term(c, RootVector(static_cast<std::size_t>(rs.rank()), 0), std::vector<int>(rs.num_roots(), 0));
  return p;
}

CellPolynomial CellPolynomial::character(const RootSystem& rs, Ring ring, const RootVector& chi) {
  CellPolynomial p(rs, ring);
  p.add_term(Coefficient(1), chi, std::vector<int>(rs.num_roots(), 0));
  return p;
}

CellPolynomial CellPolynomial::xi(const RootSystem& rs, Ring ring, std::size_t root, int power) {
  CellPolynomial p(rs, ring);
  p.add_term(Coefficient(1), RootVector(static_cast<std::size_t>(rs.rank()), 0),
             std::vector<std::pair<std::size_t, int>>{{root, power}});
  return p;
}

bool CellPolynomial::in_chart_monoid(const RootVector& chi) const {
  const RootVector k = chart_.apply_inverse(chi);
  return std::all_of(k.begin(), k.end(), [](int c) { return c <= 0; });
}

void CellPolynomial::add_term(const Coefficient& c, const RootVector& chi, const std::vector<int>& nu) {
  if (static_cast<int>(chi.size()) != rs_.rank() || nu.size() != rs_.num_roots())
    throw Error(ErrorKind::Domain, "term exponents do not match the root system");
  if (std::any_of(nu.begin(), nu.end(), [](int m) { return m < 0; }))
    throw Error(ErrorKind::Domain, "negative xi multiplicity");
  if (ring_ == Ring::Monoid && !in_chart_monoid(chi))
    throw Error(ErrorKind::RingMismatch, "character outside the chart monoid <Phi-> in a monoid-ring polynomial");
  if (c.is_zero()) return;
  Monomial key{chi, nu};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void CellPolynomial::add_term(const Coefficient& c, const RootVector& chi,
                              const std::vector<std::pair<std::size_t, int>>& nu) {
  std::vector<int> dense(rs_.num_roots(), 0);
  for (const auto& [root, mult] : nu) {
    if (root >= rs_.num_roots()) throw Error(ErrorKind::Domain, "root index " + std::to_string(root) + " out of range");
    dense[root] += mult;
  }
  add_term(c, chi, dense);
}

void CellPolynomial::check_compatible(const CellPolynomial& g, const char* op) const {
  if (!(rs_ == g.rs_)) throw Error(ErrorKind::Domain, std::string(op) + ": different root systems");
  if (ring_ != g.ring_) throw Error(ErrorKind::RingMismatch, std::string(op) + ": Laurent and monoid polynomials mixed");
  if (chart_ != g.chart_) throw Error(ErrorKind::ChartMismatch, std::string(op) + ": polynomials in different charts");
}

CellPolynomial operator+(const CellPolynomial& f, const CellPolynomial& g) {
  f.check_compatible(g, "add");
  CellPolynomial out = f;
  for (const auto& [m, c] : g.terms_) out.add_term(c, m.chi, m.nu);
  return out;
}

CellPolynomial operator-(const CellPolynomial& f, const CellPolynomial& g) {
  f.check_compatible(g, "subtract");
  CellPolynomial out = f;
  for (const auto& [m, c] : g.terms_) out.add_term(-c, m.chi, m.nu);
  return out;
}

CellPolynomial operator*(const CellPolynomial& f, const CellPolynomial& g) {
  f.check_compatible(g, "multiply");
  CellPolynomial out(f.rs_, f.ring_, f.chart_);
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) {
      RootVector chi = mf.chi;
      for (std::size_t i = 0; i < chi.size(); ++i) chi[i] += mg.chi[i];
      std::vector<int> nu = mf.nu;
      for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += mg.nu[i];
      out.add_term(cf * cg, chi, nu);
    }
  return out;
}

bool operator==(const CellPolynomial& f, const CellPolynomial& g) {
  return f.rs_ == g.rs_ && f.ring_ == g.ring_ && f.chart_ == g.chart_ && f.terms_ == g.terms_;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Per-root valuations entering the formula: val_x on chart-positive roots,
// val_y on chart-negative roots.
struct RootWeights {
  std::vector<Val> weight;
};

RootWeights root_weights(const RootSystem& rs, const ApartmentPoint& x, const BoundaryPoint& y) {
  RootWeights w;
  w.weight.reserve(rs.num_roots());
  for (std::size_t r = 0; r < rs.num_roots(); ++r) {
    const RootVector& root = rs.root(r);
    const RootVector pre = y.chart().apply_inverse(root);
    const bool chart_positive = std::all_of(pre.begin(), pre.end(), [](int c) { return c >= 0; });
    w.weight.push_back(chart_positive ? Val(x.pair(root)) : y.pair_global(root));
  }
  return w;
}

BoundaryPoint align_chart(const BoundaryPoint& y, const CellPolynomial& f) {
  if (f.ring() == Ring::Laurent && !y.is_interior())
    throw Error(ErrorKind::RingMismatch, "Laurent polynomial evaluated at a boundary point");
  if (y.chart() == f.chart()) return y;
  if (!y.is_interior())
    throw Error(ErrorKind::ChartMismatch, "boundary point and polynomial are written in different charts");
  return y.in_chart(f.chart());
}

template <typename Extra>
Val evaluate_terms(const CoefficientModel& model, const ApartmentPoint& x, const BoundaryPoint& y,
                   const CellPolynomial& f, const Rational& scale, Extra&& extra) {
  const RootSystem& rs = f.root_system();
  if (x.rank() != rs.rank() || y.rank() != rs.rank())
    throw Error(ErrorKind::Domain, "point rank differs from the root system rank");
  const RootWeights weights = root_weights(rs, x, y);
  Val best = Val::infinity();
  for (const auto& [mono, coeff] : f.terms()) {
    Val v = model.valuation(coeff).scaled(scale);
    v += y.pair_global(mono.chi);
    if (v.is_infinite()) continue;
    v += Val(Rational(-x.pair(mono.chi)));
    for (std::size_t r = 0; r < mono.nu.size() && v.is_finite(); ++r)
      if (mono.nu[r] != 0) v += weights.weight[r].scaled(Rational(mono.nu[r]));
    if (v.is_infinite()) continue;
    v += extra(mono);
    best = min(best, v);
  }
  return best;
}

}  // namespace

Val eval_seminorm(const CoefficientModel& model, const ApartmentPoint& x, const BoundaryPoint& y,
                  const CellPolynomial& f, const Rational& scale) {
  if (scale <= 0) throw Error(ErrorKind::Domain, "value-group scale must be positive");
  const BoundaryPoint yc = align_chart(y, f);
  return evaluate_terms(model, x, yc, f, scale, [](const Monomial&) { return Val(0); });
}

// ---------------------------------------------------------------------------
// Seminorm

Seminorm::Seminorm(RootSystem rs, CoefficientModel model, ApartmentPoint x, BoundaryPoint y)
    : rs_(std::move(rs)),
      model_(model),
      x_(std::move(x)),
      y_(std::move(y)),
      s_shift_(static_cast<std::size_t>(rs_.rank()), Rational(0)),
      t_shift_(static_cast<std::size_t>(rs_.rank()), Rational(0)) {
  if (x_.rank() != rs_.rank() || y_.rank() != rs_.rank())
    throw Error(ErrorKind::Domain, "seminorm: point rank differs from the root system rank");
}

Val Seminorm::operator()(const CellPolynomial& f) const {
  const BoundaryPoint yc = align_chart(y_, f);
  const ApartmentPoint s(s_shift_), t(t_shift_);
  std::vector<bool> chart_positive(rs_.num_roots());
  for (std::size_t r = 0; r < rs_.num_roots(); ++r) {
    const RootVector pre = f.chart().apply_inverse(rs_.root(r));
    chart_positive[r] = std::all_of(pre.begin(), pre.end(), [](int c) { return c >= 0; });
  }
  return evaluate_terms(model_, x_, yc, f, Rational(1), [&](const Monomial& m) {
    Rational mult = s.pair(m.chi) - t.pair(m.chi);
    for (std::size_t r = 0; r < m.nu.size(); ++r)
      if (m.nu[r] != 0) mult += Rational((chart_positive[r] ? t : s).pair(rs_.root(r)) * m.nu[r]);
    return Val(mult);
  });
}

Seminorm Seminorm::translate(std::span<const Rational> sval, std::span<const Rational> tval) const {
  if (static_cast<int>(sval.size()) != rs_.rank() || static_cast<int>(tval.size()) != rs_.rank())
    throw Error(ErrorKind::Domain, "translate: multiplier rank mismatch");
  Seminorm out = *this;
  for (std::size_t i = 0; i < sval.size(); ++i) {
    out.s_shift_[i] += sval[i];
    out.t_shift_[i] += tval[i];
  }
  return out;
}

std::pair<ApartmentPoint, BoundaryPoint> Seminorm::translated_pair() const {
  return {x_.shifted(t_shift_), y_.shifted(s_shift_)};
}

std::pair<ApartmentPoint, BoundaryPoint> reconstruct(const Seminorm& s) {
  const RootSystem& rs = s.root_system();
  const WeylElement& w = s.chart();
  const int n = rs.rank();
  auto xi_value = [&](const RootVector& root) {
    const auto idx = rs.index_of(root);
    if (!idx) throw Error(ErrorKind::Domain, "reconstruct: not a root");
    CellPolynomial p(rs, Ring::Monoid, w);
    p.add_term(Coefficient(1), RootVector(static_cast<std::size_t>(n), 0), std::vector<std::pair<std::size_t, int>>{{*idx, 1}});
    return s(p);
  };

  std::vector<Rational> on_chart_simple;  // val_x(w alpha_i)
  std::vector<Val> coords;                // val_y(w(-alpha_i))
  for (int i = 0; i < n; ++i) {
    RootVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    RootVector pos = w.apply(e);
    on_chart_simple.push_back(xi_value(pos).value());
    for (auto& c : pos) c = -c;
    coords.push_back(xi_value(pos));
  }
  std::vector<Rational> xv;
  for (int j = 0; j < n; ++j) {
    RootVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    const RootVector k = w.apply_inverse(e);
    Rational acc = 0;
    for (int i = 0; i < n; ++i) acc += on_chart_simple[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(i)];
    xv.push_back(acc);
  }
  return {ApartmentPoint(std::move(xv)), BoundaryPoint(w, std::move(coords))};
}

CellPolynomial weyl_transport(const CellPolynomial& f, const WeylElement& w) {
  const RootSystem& rs = f.root_system();
  const std::vector<std::size_t> perm = w.root_permutation(rs);
  CellPolynomial out(rs, f.ring(), w * f.chart());
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> nu(m.nu.size(), 0);
    for (std::size_t r = 0; r < m.nu.size(); ++r) nu[perm[r]] = m.nu[r];
    out.add_term(c, w.apply(m.chi), nu);
  }
  return out;
}

}  // namespace thetabar
