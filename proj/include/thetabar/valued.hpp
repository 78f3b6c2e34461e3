#pragma once

// Exact valuations and valued coefficient fields.
//
// Multiplicative quantities are carried in valuation coordinates: an absolute
// value |a| is represented by val(a) with |a| = b^(-val(a)) for a presentation
// base b > 1.  Maxima of absolute values become minima of valuations, and the
// absolute value 0 becomes the absorbing element +inf.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace thetabar {

using Rational = mpq_class;

/// Parses "3", "-1/4", "0.25" into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Element of Q u {+inf} under (min, +).
class Val {
 public:
  Val() = default;
  Val(const Rational& q) : finite_(true), value_(q) { value_.canonicalize(); }  // NOLINT: implicit by design of the semiring
  Val(long n) : finite_(true), value_(n) {}              // NOLINT

  static Val infinity() {
    Val v;
    v.finite_ = false;
    return v;
  }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }
  /// Throws Domain for +inf.
  const Rational& value() const;

  /// Multiplication by a nonnegative scalar; 0 * (+inf) = 0, since a factor
  /// with multiplicity zero is absent from the product.
  Val scaled(const Rational& k) const;

  friend Val operator+(const Val& a, const Val& b);
  Val& operator+=(const Val& b) { return *this = *this + b; }

  friend bool operator==(const Val& a, const Val& b);
  friend std::strong_ordering operator<=>(const Val& a, const Val& b);

  /// "inf" or an exact fraction.
  std::string to_string() const;
  static Val parse(std::string_view text);

 private:
  bool finite_ = true;
  Rational value_{0};
};

inline Val min(const Val& a, const Val& b) { return b < a ? b : a; }

/// Max of absolute values = min of valuations.  Throws Domain on an empty list.
Val tropical_min_plus(std::span<const Val> terms);

/// Dense univariate polynomial over Q, coefficient of t^i at index i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  /// Order of vanishing at t = 0; undefined (throws) for the zero polynomial.
  int order() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  static Polynomial gcd(Polynomial a, Polynomial b);
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(t), kept reduced with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(const Rational& c) : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction t() { return {Polynomial::monomial(1, 1), Polynomial::constant(1)}; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant_value() const;
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return {-num_, den_}; }
  RationalFunction pow(int e) const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Parses t-expressions such as "t^3/(1+t)", "2*t - 1/3", "(1+t)^-2".
RationalFunction parse_rational_function(std::string_view text);

/// Coefficient of a cell polynomial: an exact rational, or a rational
/// function of t.  Mixed arithmetic promotes to the rational function.
class Coefficient {
 public:
  Coefficient() : repr_(Rational(0)) {}
  Coefficient(const Rational& q) : repr_(q) { std::get<Rational>(repr_).canonicalize(); }  // NOLINT
  Coefficient(long n) : repr_(Rational(n)) {}   // NOLINT
  Coefficient(const RationalFunction& f);       // NOLINT

  bool is_zero() const;
  bool is_rational() const { return std::holds_alternative<Rational>(repr_); }
  const Rational& rational() const { return std::get<Rational>(repr_); }
  RationalFunction as_function() const;

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient operator-() const;
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  std::string to_string() const;

 private:
  std::variant<Rational, RationalFunction> repr_;
};

/// The valued field k: Q with a p-adic valuation, or Q(t) with ord_t.
class CoefficientModel {
 public:
  enum class Kind { PAdic, TAdic };

  /// Throws Domain unless p is prime.
  static CoefficientModel p_adic(long p);
  static CoefficientModel t_adic();

  Kind kind() const { return kind_; }
  long prime() const { return prime_; }

  /// val(0) = +inf.  Throws Domain for a non-constant function in the p-adic model.
  Val valuation(const Coefficient& c) const;
  Coefficient parse(std::string_view text) const;
  std::string name() const;

  friend bool operator==(const CoefficientModel&, const CoefficientModel&) = default;

 private:
  CoefficientModel(Kind kind, long prime) : kind_(kind), prime_(prime) {}
  Kind kind_;
  long prime_;
};

bool is_prime(long n);

/// val_of from the build contract: valuation of c in the given model.
inline Val val_of(const CoefficientModel& model, const Coefficient& c) { return model.valuation(c); }

}  // namespace thetabar
