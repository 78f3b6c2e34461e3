#pragma once

// Root systems and Weyl groups of split adjoint groups.
//
// Adjoint convention: the character lattice X*(T) is the root lattice, so every
// character is an integer vector in the basis of simple roots.  Roots are
// stored exactly; there is no floating point in this module.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thetabar {

/// Integer vector in the simple-root basis.
using RootVector = std::vector<int>;

enum class Family { A, B, C, D, E, F, G };

struct ComponentSpec {
  Family family;
  int rank;
};

char family_letter(Family f);

/// Subset of the simple roots, stored as a bitmask (bit i <=> alpha_i).
class ParabolicType {
 public:
  constexpr ParabolicType() = default;
  constexpr explicit ParabolicType(std::uint32_t bits) : bits_(bits) {}
  static ParabolicType full(int rank) { return ParabolicType(rank >= 32 ? ~0u : (1u << rank) - 1u); }
  static ParabolicType from_indices(std::span<const int> indices);

  std::uint32_t bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  bool subset_of(ParabolicType other) const { return (bits_ & ~other.bits_) == 0; }
  int size() const;
  std::vector<int> indices() const;
  ParabolicType with(int i) const { return ParabolicType(bits_ | (1u << i)); }
  ParabolicType without(int i) const { return ParabolicType(bits_ & ~(1u << i)); }

  /// Character i is '1' iff alpha_{i+1} lies in the type, left to right.
  std::string bitstring(int rank) const;
  static ParabolicType parse_bitstring(std::string_view s);

  friend auto operator<=>(ParabolicType, ParabolicType) = default;

 private:
  std::uint32_t bits_ = 0;
};

class WeylElement;

/// Root datum of a (possibly reducible) split adjoint group.  Cheap to copy:
/// the data is shared and immutable.
class RootSystem {
 public:
  struct Component {
    Family family;
    int rank;
    int offset;  ///< index of its first simple root
  };

  /// Throws InvalidRootSystem for an invalid family/rank pair or total rank > 32.
  static RootSystem build(std::span<const ComponentSpec> spec);
  /// "A2", "B2xA1", case-insensitive.
  static RootSystem parse(std::string_view spec);

  int rank() const { return data_->rank; }
  const std::vector<Component>& components() const { return data_->components; }
  std::string name() const;

  /// All roots: positive ones sorted by height then descending lexicographic
  /// order (so alpha_1..alpha_n come first), followed by their negatives in
  /// the same order.  Root i + num_positive() is -(root i).
  const std::vector<RootVector>& roots() const { return data_->roots; }
  std::size_t num_roots() const { return data_->roots.size(); }
  std::size_t num_positive() const { return data_->roots.size() / 2; }
  const RootVector& root(std::size_t i) const { return data_->roots[i]; }
  bool is_positive(std::size_t i) const { return i < num_positive(); }
  std::size_t negative_of(std::size_t i) const {
    return is_positive(i) ? i + num_positive() : i - num_positive();
  }
  std::optional<std::size_t> index_of(const RootVector& v) const;
  /// Index of the simple root alpha_i (equal to i).
  std::size_t simple_root(int i) const { return static_cast<std::size_t>(i); }

  /// <v, alpha_i^vee>.
  int coroot_pairing(const RootVector& v, int i) const;
  RootVector reflect(const RootVector& v, int i) const;
  /// Symmetric invariant form (alpha_i, alpha_j), scaled to integers per component.
  int gram(int i, int j) const { return data_->gram[static_cast<std::size_t>(i * rank() + j)]; }
  int component_of(int simple) const;

  /// Positive-root count from the classical formulas, as an oracle for tests.
  static std::size_t classical_root_count(Family f, int rank);
  static std::uint64_t classical_weyl_order(Family f, int rank);
  std::uint64_t weyl_order() const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.name() == b.name(); }

 private:
  struct Data {
    int rank = 0;
    std::vector<Component> components;
    std::vector<int> gram;
    std::vector<int> norms;  // (alpha_i, alpha_i)
    std::vector<RootVector> roots;
    std::vector<std::pair<RootVector, std::size_t>> index;  // sorted for lookup
  };
  std::shared_ptr<const Data> data_;
};

/// Element of W acting on X*(T) = Z Delta, stored as its matrix and the
/// matrix of its inverse (column j = image of alpha_j).
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank);
  static WeylElement simple_reflection(const RootSystem& rs, int i);
  /// s_{i_1} s_{i_2} ... s_{i_k}.
  static WeylElement from_word(const RootSystem& rs, std::span<const int> word);

  int rank() const { return rank_; }
  RootVector apply(std::span<const int> v) const;
  RootVector apply_inverse(std::span<const int> v) const;
  WeylElement inverse() const;
  bool is_identity() const;

  /// Canonical reduced word (rightmost descents peeled off smallest-index first).
  std::vector<int> word(const RootSystem& rs) const;
  int length(const RootSystem& rs) const;
  /// w(alpha_i) is a positive root.
  bool sends_simple_positive(int i) const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.matrix_ <=> b.matrix_; }

  /// Permutation of root indices induced by this element.
  std::vector<std::size_t> root_permutation(const RootSystem& rs) const;

  std::size_t hash() const;

 private:
  WeylElement(int rank, std::vector<int> m, std::vector<int> inv)
      : rank_(rank), matrix_(std::move(m)), inverse_(std::move(inv)) {}
  static std::vector<int> multiply(int n, const std::vector<int>& a, const std::vector<int>& b);
  int rank_ = 0;
  std::vector<int> matrix_;
  std::vector<int> inverse_;
};

inline constexpr std::uint64_t kDefaultWeylCap = 51840;

struct WeylGroup {
  std::vector<WeylElement> elements;  ///< sorted by length, then by reduced word
  WeylElement longest;
};

/// Full W by breadth-first closure under simple reflections.  Throws
/// CapExceeded when |W| exceeds the cap.
WeylGroup weyl_group(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);

/// w0 by descent, without enumerating W.
WeylElement longest_element(const RootSystem& rs);

/// tau^opp = -w0(tau).
ParabolicType opposite_type(const RootSystem& rs, ParabolicType tau);

/// Minimal-length representative of the coset w W_tau.
WeylElement min_coset_representative(const RootSystem& rs, const WeylElement& w, ParabolicType tau);

/// Root index sets attached to the standard parabolic of type tau.
struct LeviDecomposition {
  std::vector<std::size_t> levi;           ///< Phi(L): roots supported in tau
  std::vector<std::size_t> radical;        ///< Phi(R_u(P)) = Phi+ \ Phi(L)
  std::vector<std::size_t> levi_positive;  ///< Phi(L)+
  std::vector<std::size_t> levi_negative;  ///< Phi(L)-
};

LeviDecomposition levi_and_radical_roots(const RootSystem& rs, ParabolicType tau);

/// The Boolean lattice of types under inclusion.
struct TypePoset {
  int rank = 0;
  std::vector<ParabolicType> types;  ///< ordered by bitmask
  bool leq(ParabolicType a, ParabolicType b) const { return a.subset_of(b); }
  /// Covering pairs (smaller, larger).
  std::vector<std::pair<ParabolicType, ParabolicType>> covers() const;
  ParabolicType minimum() const { return ParabolicType(); }
  ParabolicType maximum() const { return ParabolicType::full(rank); }
};

TypePoset type_poset(const RootSystem& rs);

/// tau contains every simple root of some irreducible component.
bool is_degenerate(const RootSystem& rs, ParabolicType tau);

}  // namespace thetabar

template <>
struct std::hash<thetabar::WeylElement> {
  std::size_t operator()(const thetabar::WeylElement& w) const noexcept { return w.hash(); }
};
