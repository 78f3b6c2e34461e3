#include "thetabar/apartment.hpp"

#include <algorithm>
#include <set>

#include "thetabar/error.hpp"

namespace thetabar {

namespace {

RootVector unit(int rank, int i) {
  RootVector e(static_cast<std::size_t>(rank), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

void check_rank(int a, int b, const char* what) {
  if (a != b) throw Error(ErrorKind::Domain, std::string(what) + ": rank mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------
// ApartmentPoint

Rational ApartmentPoint::pair(std::span<const int> chi) const {
  check_rank(static_cast<int>(chi.size()), rank(), "pair");
  Rational acc = 0;
  for (std::size_t i = 0; i < vals_.size(); ++i)
    if (chi[i] != 0) acc += vals_[i] * chi[i];
  return acc;
}

ApartmentPoint ApartmentPoint::shifted(std::span<const Rational> shift) const {
  check_rank(static_cast<int>(shift.size()), rank(), "shift");
  std::vector<Rational> v = vals_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
  return ApartmentPoint(std::move(v));
}

ApartmentPoint ApartmentPoint::transformed(const WeylElement& w) const {
  check_rank(w.rank(), rank(), "transform");
  std::vector<Rational> v(vals_.size());
  for (int j = 0; j < rank(); ++j) v[static_cast<std::size_t>(j)] = pair(w.apply_inverse(unit(rank(), j)));
  return ApartmentPoint(std::move(v));
}

ApartmentPoint ApartmentPoint::scaled(const Rational& q) const {
  std::vector<Rational> v = vals_;
  for (auto& x : v) x *= q;
  return ApartmentPoint(std::move(v));
}

// ---------------------------------------------------------------------------
// BoundaryPoint

BoundaryPoint::BoundaryPoint(std::vector<Val> coords)
    : chart_(WeylElement::identity(static_cast<int>(coords.size()))), coords_(std::move(coords)) {}

BoundaryPoint BoundaryPoint::interior(const ApartmentPoint& x, const WeylElement& chart) {
  check_rank(chart.rank(), x.rank(), "interior");
  std::vector<Val> c;
  for (int i = 0; i < x.rank(); ++i) c.emplace_back(Rational(-x.pair(chart.apply(unit(x.rank(), i)))));
  return {chart, std::move(c)};
}

bool BoundaryPoint::is_interior() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Val& v) { return v.is_finite(); });
}

Val BoundaryPoint::boundary_pair(std::span<const int> mult) const {
  check_rank(static_cast<int>(mult.size()), rank(), "boundary_pair");
  Val acc(0);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (mult[i] < 0) throw Error(ErrorKind::Domain, "boundary_pair: negative multiplicity outside the monoid");
    acc += coords_[i].scaled(Rational(mult[i]));
  }
  return acc;
}

Val BoundaryPoint::pair_global(std::span<const int> chi) const {
  RootVector k = chart_.apply_inverse(chi);
  for (auto& x : k) x = -x;
  if (is_interior()) {
    Rational acc = 0;
    for (std::size_t i = 0; i < k.size(); ++i) acc += coords_[i].value() * k[i];
    return Val(acc);
  }
  return boundary_pair(k);
}

std::optional<ApartmentPoint> BoundaryPoint::to_apartment() const {
  if (!is_interior()) return std::nullopt;
  std::vector<Rational> v;
  for (int j = 0; j < rank(); ++j) v.push_back(pair_global(unit(rank(), j)).value());
  return ApartmentPoint(std::move(v));
}

BoundaryPoint BoundaryPoint::in_chart(const WeylElement& chart) const {
  if (chart == chart_) return *this;
  const auto x = to_apartment();
  if (!x) throw Error(ErrorKind::ChartMismatch, "boundary point cannot be re-expressed in another chart");
  return interior(*x, chart);
}

BoundaryPoint BoundaryPoint::shifted(std::span<const Rational> shift) const {
  check_rank(static_cast<int>(shift.size()), rank(), "shift");
  std::vector<Val> c = coords_;
  for (int i = 0; i < rank(); ++i) {
    const RootVector img = chart_.apply(unit(rank(), i));
    Rational delta = 0;
    for (std::size_t j = 0; j < img.size(); ++j) delta -= shift[j] * img[j];
    c[static_cast<std::size_t>(i)] += Val(delta);
  }
  return {chart_, std::move(c)};
}

BoundaryPoint BoundaryPoint::scaled(const Rational& q) const {
  if (q <= 0) throw Error(ErrorKind::Domain, "value-group rescaling needs q > 0");
  std::vector<Val> c = coords_;
  for (auto& v : c) v = v.scaled(q);
  return {chart_, std::move(c)};
}

ParabolicType classify_stratum(const BoundaryPoint& y) {
  std::uint32_t bits = 0;
  for (int i = 0; i < y.rank(); ++i)
    if (y.coords()[static_cast<std::size_t>(i)].is_finite()) bits |= 1u << i;
  return ParabolicType(bits);
}

// ---------------------------------------------------------------------------
// Gluing

CanonicalPoint canonical_form(const RootSystem& rs, const BoundaryPoint& y) {
  check_rank(y.rank(), rs.rank(), "canonical_form");
  const ParabolicType tau = classify_stratum(y);
  const WeylElement u = min_coset_representative(rs, y.chart(), tau);
  const WeylElement v = y.chart().inverse() * u;  // lies in W_tau
  std::vector<Val> coords(static_cast<std::size_t>(rs.rank()), Val::infinity());
  for (int j : tau.indices()) {
    const RootVector k = v.apply(unit(rs.rank(), j));
    Rational acc = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      if (k[static_cast<std::size_t>(i)] == 0) continue;
      if (!tau.contains(i)) throw Error(ErrorKind::Domain, "coset transport left the Levi lattice");
      acc += y.coords()[static_cast<std::size_t>(i)].value() * k[static_cast<std::size_t>(i)];
    }
    coords[static_cast<std::size_t>(j)] = Val(acc);
  }
  return {u, tau, std::move(coords)};
}

bool glue_equal(const RootSystem& rs, const BoundaryPoint& p, const BoundaryPoint& q) {
  return canonical_form(rs, p) == canonical_form(rs, q);
}

// ---------------------------------------------------------------------------
// Weyl fan

FanCone::FanCone(const RootSystem& rs, const WeylElement& chart, ParabolicType tau)
    : chart_(min_coset_representative(rs, chart, tau)), tau_(tau) {
  const LeviDecomposition ld = levi_and_radical_roots(rs, tau);
  for (std::size_t r = 0; r < rs.num_positive(); ++r) roots_.push_back(chart_.apply(rs.root(r)));
  for (std::size_t r : ld.levi_negative) roots_.push_back(chart_.apply(rs.root(r)));
}

bool FanCone::contains(const ApartmentPoint& x) const {
  return std::all_of(roots_.begin(), roots_.end(), [&](const RootVector& beta) { return x.pair(beta) <= 0; });
}

std::vector<FanCone> fan_cones(const RootSystem& rs, const WeylGroup& group) {
  std::vector<FanCone> out;
  std::set<std::pair<std::uint32_t, WeylElement>> seen;
  for (const auto& tau : type_poset(rs).types)
    for (const auto& w : group.elements) {
      FanCone cone(rs, w, tau);
      if (seen.emplace(tau.bits(), cone.chart()).second) out.push_back(std::move(cone));
    }
  return out;
}

WeylElement chamber_of(const RootSystem& rs, const ApartmentPoint& x) {
  WeylElement u = WeylElement::identity(rs.rank());
  for (;;) {
    int step = -1;
    for (int i = 0; i < rs.rank() && step < 0; ++i)
      if (x.pair(u.apply(unit(rs.rank(), i))) > 0) step = i;
    if (step < 0) return u;
    u = u * WeylElement::simple_reflection(rs, step);
  }
}

// ---------------------------------------------------------------------------
// Convergence

bool converges(std::span<const Val> seq, const Val& limit, std::size_t horizon) {
  const std::size_t n = std::min(horizon, seq.size());
  if (n == 0) return false;
  const std::size_t start = n / 2;
  if (limit.is_infinite()) {
    for (std::size_t i = start + 1; i < n; ++i)
      if (seq[i] < seq[i - 1]) return false;
    return seq[n - 1] >= Val(static_cast<long>(n));
  }
  auto distance = [&](const Val& v) -> Val {
    if (v.is_infinite()) return Val::infinity();
    return Val(Rational(abs(v.value() - limit.value())));
  };
  for (std::size_t i = start + 1; i < n; ++i)
    if (distance(seq[i]) > distance(seq[i - 1])) return false;
  return distance(seq[n - 1]) <= Val(Rational(1, static_cast<unsigned long>(n)));
}

bool converges(std::span<const BoundaryPoint> seq, const BoundaryPoint& y, std::size_t horizon) {
  for (const auto& p : seq)
    if (p.chart() != y.chart() || p.rank() != y.rank())
      throw Error(ErrorKind::ChartMismatch, "converges: sequence and limit live in different charts");
  for (int i = 0; i < y.rank(); ++i) {
    std::vector<Val> column;
    column.reserve(seq.size());
    for (const auto& p : seq) column.push_back(p.coords()[static_cast<std::size_t>(i)]);
    if (!converges(column, y.coords()[static_cast<std::size_t>(i)], horizon)) return false;
  }
  return true;
}

}  // namespace thetabar
