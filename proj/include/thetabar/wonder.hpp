#pragma once

// Boundary combinatorics of the wonderful compactification, computed through
// value patterns of the seminorms of pairs (x, y).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thetabar/apartment.hpp"
#include "thetabar/bigcell.hpp"
#include "thetabar/rootsys.hpp"

namespace thetabar {

/// Names the G x G-orbit X(tau) through the parabolic P = w P_tau w^-1, with
/// w the minimal coset representative.  Root sets are transported by w.
struct StratumDescriptor {
  ParabolicType tau;
  WeylElement chart;
  std::vector<std::size_t> levi;     ///< w Phi(L)
  std::vector<std::size_t> radical;  ///< w Phi(R_u(P))

  bool is_open(int rank) const { return tau == ParabolicType::full(rank); }
  bool is_closed() const { return tau == ParabolicType(); }
  friend bool operator==(const StratumDescriptor&, const StratumDescriptor&) = default;
};

StratumDescriptor stratum_descriptor(const RootSystem& rs, const WeylElement& chart, ParabolicType tau);

/// Chart coordinates of a point of the flag variety: |xi_alpha| for alpha in
/// Phi(R_u(P)), in valuation form.
struct FlagPoint {
  StratumDescriptor parabolic;
  std::map<std::size_t, Val> coords;
  friend bool operator==(const FlagPoint&, const FlagPoint&) = default;
};

/// e_{(T,B),tau}: val(-alpha_i) = 0 on tau and +inf off tau, standard chart.
BoundaryPoint base_point(const RootSystem& rs, ParabolicType tau);

/// Pairings <lambda, alpha_i> of lambda_tau: 0 on tau, 1 off tau.
std::vector<int> lambda_tau(const RootSystem& rs, ParabolicType tau);

/// lim_{t -> 0} lambda(t) in Z, for lambda given by its pairings with the
/// simple roots.  Throws NoLimit when some pairing is negative.
BoundaryPoint one_ps_limit(const RootSystem& rs, std::span<const int> pairings);

/// Both descriptions of orbit closures, evaluated on every pair of types.
struct ClosurePoset {
  int rank = 0;
  std::vector<ParabolicType> types;
  std::vector<ParabolicType> divisors;  ///< D_i, i.e. Delta \ {i}
  /// by_subsets[a][b]: types[a] <= types[b], i.e. X(a) lies in the closure of X(b).
  std::vector<std::vector<bool>> by_subsets;
  /// by_divisors[a][b]: X(a) lies in every D_i with i outside types[b].
  std::vector<std::vector<bool>> by_divisors;
  bool agree = false;

  std::vector<std::pair<ParabolicType, ParabolicType>> covers() const;
  std::vector<ParabolicType> closure_of(ParabolicType tau) const;
};

ClosurePoset closure_poset(const RootSystem& rs);

/// (pi_tau o Theta-bar)(x, y): the parabolic of y's stratum and the flag
/// coordinates |xi_alpha| on its unipotent radical, read off the seminorm.
/// Throws Domain for an interior y.
std::pair<StratumDescriptor, FlagPoint> project_pi_tau(const RootSystem& rs, const ApartmentPoint& x,
                                                        const BoundaryPoint& y);

/// Per-coordinate value pattern of the seminorm of (x, y) on the chart
/// generators: |alpha| for chart-negative alpha, |xi_alpha| for every alpha.
struct ValuePattern {
  std::vector<std::size_t> negative_roots;  ///< chart-negative root indices
  std::vector<Val> character_values;        ///< |alpha|, same order
  std::vector<Val> xi_values;               ///< |xi_alpha|, indexed by root
};

ValuePattern value_pattern(const RootSystem& rs, const ApartmentPoint& x, const BoundaryPoint& y);

/// Classifies y and checks the value pattern of the seminorm against the
/// defining conditions of Z(tau) and X(tau) in the partially compactified cell.
/// Throws PatternMismatch on disagreement.
StratumDescriptor stratum_membership(const RootSystem& rs, const ApartmentPoint& x, const BoundaryPoint& y);

/// Stratum report as a single structured text record.
std::string stratum_report(const RootSystem& rs, const StratumDescriptor& d);

}  // namespace thetabar
