#pragma once

// Formal elements of the big-cell coordinate ring k[X*(T)][(xi_a)] and of the
// partially compactified cell k[<Phi->][(xi_a)], and the seminorms attached
// to pairs (x, y) of an apartment point and a (boundary) point.
//
// In valuation coordinates the seminorm of a pair is
//
//   f = sum a_{chi,nu} chi xi^nu  |->
//     min over terms of  val(a) + val_y(chi) - val_x(chi)
//                        + sum_{alpha in Phi-} nu(alpha) val_y(alpha)
//                        + sum_{alpha in Phi+} nu(alpha) val_x(alpha),
//
// where the sign split of Phi and the monoid <Phi-> are those of the chart
// (the Borel w B w^-1) the polynomial is written in.

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "thetabar/apartment.hpp"
#include "thetabar/rootsys.hpp"
#include "thetabar/valued.hpp"

namespace thetabar {

enum class Ring { Laurent, Monoid };

/// Exponent data of one term: chi in global simple-root coordinates and
/// nu indexed by RootSystem::roots().
struct Monomial {
  RootVector chi;
  std::vector<int> nu;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class CellPolynomial {
 public:
  using Terms = std::map<Monomial, Coefficient>;

  CellPolynomial(const RootSystem& rs, Ring ring, WeylElement chart);
  CellPolynomial(const RootSystem& rs, Ring ring) : CellPolynomial(rs, ring, WeylElement::identity(rs.rank())) {}

  static CellPolynomial constant(const RootSystem& rs, Ring ring, const Coefficient& c);
  /// The character chi (in the monoid ring it must lie in the chart's <Phi->).
  static CellPolynomial character(const RootSystem& rs, Ring ring, const RootVector& chi);
  /// xi_alpha^power for the root with the given index.
  static CellPolynomial xi(const RootSystem& rs, Ring ring, std::size_t root, int power = 1);

  const RootSystem& root_system() const { return rs_; }
  Ring ring() const { return ring_; }
  const WeylElement& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates c * chi * xi^nu; exact zeros are dropped.  Throws RingMismatch
  /// when a monoid polynomial receives chi outside the chart's <Phi->.
  void add_term(const Coefficient& c, const RootVector& chi, const std::vector<int>& nu);
  /// Same, with nu given sparsely as (root index, multiplicity) pairs.
  void add_term(const Coefficient& c, const RootVector& chi, const std::vector<std::pair<std::size_t, int>>& nu);

  friend CellPolynomial operator+(const CellPolynomial& f, const CellPolynomial& g);
  friend CellPolynomial operator-(const CellPolynomial& f, const CellPolynomial& g);
  friend CellPolynomial operator*(const CellPolynomial& f, const CellPolynomial& g);
  friend bool operator==(const CellPolynomial& f, const CellPolynomial& g);

  /// chi lies in the chart's monoid w<Phi->.
  bool in_chart_monoid(const RootVector& chi) const;

 private:
  void check_compatible(const CellPolynomial& g, const char* op) const;

  RootSystem rs_;
  Ring ring_;
  WeylElement chart_;
  Terms terms_;
};

/// poly_mul from the build contract.  Throws RingMismatch on differing flags or charts.
inline CellPolynomial poly_mul(const CellPolynomial& f, const CellPolynomial& g) { return f * g; }

/// Seminorm value of f at the pair (x, y), in valuation coordinates.  `scale`
/// rescales the value group of k (val -> scale * val), which models an
/// extension of the ground field.  An interior y in another chart is
/// re-expressed in f's chart; a boundary y must already share it
/// (ChartMismatch).  A Laurent polynomial against a boundary y is an error
/// (RingMismatch).
Val eval_seminorm(const CoefficientModel& model, const ApartmentPoint& x, const BoundaryPoint& y,
                  const CellPolynomial& f, const Rational& scale = 1);

/// The seminorm of a pair, possibly translated by torus elements (s, t):
/// the value at f is computed from the base pair with per-term multipliers
///   chi -> chi(s) chi(t)^-1,  xi_a -> a(s) xi_a (a in Phi-),  a(t) xi_a (a in Phi+).
class Seminorm {
 public:
  Seminorm(RootSystem rs, CoefficientModel model, ApartmentPoint x, BoundaryPoint y);

  const RootSystem& root_system() const { return rs_; }
  const CoefficientModel& model() const { return model_; }
  const WeylElement& chart() const { return y_.chart(); }
  const ApartmentPoint& base_x() const { return x_; }
  const BoundaryPoint& base_y() const { return y_; }

  Val operator()(const CellPolynomial& f) const;

  /// Translation by s on the y side and t on the x side (valuations of the
  /// simple roots at s and t).
  Seminorm translate(std::span<const Rational> sval, std::span<const Rational> tval) const;
  /// (t x, s y): the pair this seminorm is attached to.
  std::pair<ApartmentPoint, BoundaryPoint> translated_pair() const;

 private:
  RootSystem rs_;
  CoefficientModel model_;
  ApartmentPoint x_;
  BoundaryPoint y_;
  std::vector<Rational> s_shift_;
  std::vector<Rational> t_shift_;
};

/// Recovers (x, y) from the seminorm values at the monomials xi_alpha of its
/// chart: val_x(alpha) for chart-positive alpha, val_y(alpha) for
/// chart-negative alpha.
std::pair<ApartmentPoint, BoundaryPoint> reconstruct(const Seminorm& s);

/// translate() from the build contract.
inline Seminorm translate(const Seminorm& s, std::span<const Rational> sval, std::span<const Rational> tval) {
  return s.translate(sval, tval);
}

/// chi -> w(chi), xi_alpha -> xi_{w(alpha)}; the result is written in the
/// chart w * f.chart().
CellPolynomial weyl_transport(const CellPolynomial& f, const WeylElement& w);

}  // namespace thetabar
