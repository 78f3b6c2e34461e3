#pragma once

// Points of the apartment A, of its partial compactification in a chart, and
// of the Weyl-fan compactification obtained by gluing charts.
//
// Conventions (valuation coordinates, |.| = b^(-val)):
//   ApartmentPoint x   stores val_x(alpha_i) for the simple roots; the pairing
//                      with any character extends linearly.
//   BoundaryPoint y    lives in the chart of a Weyl element w (naming the Borel
//                      w B w^-1) and stores val_y(w(-alpha_i)), with +inf
//                      allowed; the pairing extends N-linearly to w<Phi->.

#include <optional>
#include <span>
#include <vector>

#include "thetabar/rootsys.hpp"
#include "thetabar/valued.hpp"

namespace thetabar {

class ApartmentPoint {
 public:
  ApartmentPoint() = default;
  explicit ApartmentPoint(std::vector<Rational> vals) : vals_(std::move(vals)) {
    for (auto& v : vals_) v.canonicalize();
  }
  /// The special point x0: every pairing equals 1, i.e. valuation 0.
  static ApartmentPoint origin(int rank) { return ApartmentPoint(std::vector<Rational>(static_cast<std::size_t>(rank), Rational(0))); }

  int rank() const { return static_cast<int>(vals_.size()); }
  const std::vector<Rational>& vals() const { return vals_; }

  /// val of <x, chi> for chi in Z Delta.
  Rational pair(std::span<const int> chi) const;
  /// Translation by the torus element with valuations `shift` on the simple roots.
  ApartmentPoint shifted(std::span<const Rational> shift) const;
  /// w . x, so that val_{w x}(chi) = val_x(w^-1 chi).
  ApartmentPoint transformed(const WeylElement& w) const;
  ApartmentPoint scaled(const Rational& q) const;

  friend bool operator==(const ApartmentPoint&, const ApartmentPoint&) = default;

 private:
  std::vector<Rational> vals_;
};

/// pair(x, chi) from the build contract, as a finite Val.
inline Val pair(const ApartmentPoint& x, std::span<const int> chi) { return Val(x.pair(chi)); }

class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  BoundaryPoint(WeylElement chart, std::vector<Val> coords) : chart_(std::move(chart)), coords_(std::move(coords)) {}
  /// Standard chart (w = 1).
  explicit BoundaryPoint(std::vector<Val> coords);
  /// Interior point x expressed in the chart of w.
  static BoundaryPoint interior(const ApartmentPoint& x, const WeylElement& chart);

  int rank() const { return static_cast<int>(coords_.size()); }
  const WeylElement& chart() const { return chart_; }
  const std::vector<Val>& coords() const { return coords_; }
  bool is_interior() const;

  /// Value on the element sum_i mult_i * w(-alpha_i) of the chart monoid.
  /// Throws Domain on a negative multiplicity.
  Val boundary_pair(std::span<const int> mult) const;
  /// Value on a character given in global simple-root coordinates.  Throws
  /// Domain unless chi lies in w<Phi-> or the point is interior.
  Val pair_global(std::span<const int> chi) const;

  /// The interior point as an ApartmentPoint; nullopt on the boundary.
  std::optional<ApartmentPoint> to_apartment() const;
  /// Re-expresses an interior point in another chart; throws ChartMismatch on
  /// a boundary point.
  BoundaryPoint in_chart(const WeylElement& chart) const;
  /// Torus translation: val_{s y}(chi) = val_y(chi) + val_s(chi).
  BoundaryPoint shifted(std::span<const Rational> shift) const;
  BoundaryPoint scaled(const Rational& q) const;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  WeylElement chart_;
  std::vector<Val> coords_;
};

/// boundary_pair from the build contract.
inline Val boundary_pair(const BoundaryPoint& y, std::span<const int> mult) { return y.boundary_pair(mult); }

/// tau = { i : val_y(w(-alpha_i)) finite }.
ParabolicType classify_stratum(const BoundaryPoint& y);

/// Canonical name of a point of the Weyl-fan compactification: the stratum
/// parabolic (minimal coset representative u and type tau) and the residual
/// interior point, recorded as the coordinates on u(-alpha_i), i in tau.
struct CanonicalPoint {
  WeylElement chart;
  ParabolicType tau;
  std::vector<Val> coords;  ///< +inf off tau
  friend bool operator==(const CanonicalPoint&, const CanonicalPoint&) = default;
};

CanonicalPoint canonical_form(const RootSystem& rs, const BoundaryPoint& y);
bool glue_equal(const RootSystem& rs, const BoundaryPoint& p, const BoundaryPoint& q);

/// The cone c(P) = { x : val_x(beta) <= 0 for all beta in Phi(P) } of the
/// parabolic P = w P_tau w^-1 containing T.
class FanCone {
 public:
  FanCone(const RootSystem& rs, const WeylElement& chart, ParabolicType tau);

  const WeylElement& chart() const { return chart_; }
  ParabolicType tau() const { return tau_; }
  /// Roots beta with val_x(beta) <= 0 required.
  const std::vector<RootVector>& inequalities() const { return roots_; }
  bool contains(const ApartmentPoint& x) const;

  friend bool operator==(const FanCone& a, const FanCone& b) { return a.chart_ == b.chart_ && a.tau_ == b.tau_; }

 private:
  WeylElement chart_;
  ParabolicType tau_;
  std::vector<RootVector> roots_;
};

/// Every cone of the Weyl fan, one per parabolic containing T.
std::vector<FanCone> fan_cones(const RootSystem& rs, const WeylGroup& group);
/// A Weyl element whose chamber c(w B w^-1) contains x, found by descent.
WeylElement chamber_of(const RootSystem& rs, const ApartmentPoint& x);

/// Finite-horizon convergence in Q u {+inf}, judged on the window of the
/// first n = min(horizon, size) terms:
///  - finite limit L: the distances |s_k - L| over the second half of the
///    window are non-increasing and the last one is at most 1/n;
///  - limit +inf: the second half is non-decreasing and the last term is
///    +inf or at least n.
bool converges(std::span<const Val> seq, const Val& limit, std::size_t horizon);
/// Coordinatewise; throws ChartMismatch unless every point shares y's chart.
bool converges(std::span<const BoundaryPoint> seq, const BoundaryPoint& y, std::size_t horizon);

}  // namespace thetabar
