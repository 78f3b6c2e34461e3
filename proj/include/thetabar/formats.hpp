#pragma once

// Text formats read and written by the command-line tool.
//
// Point file, one record per line ('#' starts a comment):
//     [label:] chart = i,j,... ; vals = v1, ..., vn
//   `chart` is a word in the simple reflections (0-based, may be empty or
//   omitted for the standard chart).  For a label `x` the values are
//   val_x(alpha_i); otherwise they are the chart coordinates val_y(w(-alpha_i)),
//   with "inf" for +inf.  All values are exact fractions.
//
// Polynomial file:
//     ring = laurent|monoid [; chart = i,j,...]
//     coeff ; chi = c1,...,cn ; nu = (root-index:multiplicity, ...)
//   chi is given in simple-root coordinates; root indices follow
//   RootSystem::roots().  Missing chi / nu default to zero.

#include <iosfwd>
#include <string>
#include <vector>

#include "thetabar/apartment.hpp"
#include "thetabar/bigcell.hpp"
#include "thetabar/rootsys.hpp"
#include "thetabar/valued.hpp"
#include "thetabar/wonder.hpp"

namespace thetabar {

struct PointRecord {
  std::string label;
  int line = 0;
  WeylElement chart;
  std::vector<Val> vals;

  ApartmentPoint as_apartment_point() const;
  BoundaryPoint as_boundary_point() const;
};

std::vector<PointRecord> parse_point_file(const RootSystem& rs, std::istream& in, const std::string& source);
std::string format_point(const RootSystem& rs, const BoundaryPoint& y, const std::string& label = "y");
std::string format_point(const ApartmentPoint& x);

CellPolynomial parse_polynomial(const RootSystem& rs, const CoefficientModel& model, std::istream& in,
                                const std::string& source);
std::string format_polynomial(const CellPolynomial& f);

/// Hasse diagram of the closure poset; nodes are type bitstrings, edges are
/// covering relations from the smaller to the larger type.
std::string poset_dot(const RootSystem& rs, const ClosurePoset& poset);

/// Geometry of a rank-2 compactified apartment, in exact valuation
/// coordinates (v1, v2) = (val_x(alpha_1), val_x(alpha_2)).
struct PlotGeometry {
  struct Chamber {
    std::vector<int> word;
    std::size_t ray_a, ray_b;
  };
  std::vector<std::vector<Rational>> rays;
  std::vector<Chamber> chambers;
  std::vector<RootVector> walls;  ///< positive roots; wall = { val_x(beta) = 0 }
  std::vector<std::pair<ParabolicType, BoundaryPoint>> base_points;
};

/// Throws Domain unless the rank is exactly 2.
PlotGeometry plot_geometry(const RootSystem& rs, bool overlay);
std::string plot_csv(const RootSystem& rs, const PlotGeometry& g);
std::string plot_svg(const RootSystem& rs, const PlotGeometry& g);

}  // namespace thetabar
