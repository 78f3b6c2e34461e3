#include "thetabar/valued.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "thetabar/error.hpp"

namespace thetabar {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Rational decimal_to_rational(std::string_view s, std::string_view original) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(s)) throw Error(ErrorKind::Parse, "not a number: '" + std::string(original) + "'");
    return Rational(mpz_class(std::string(s), 10));
  }
  std::string_view ip = s.substr(0, dot);
  std::string_view fp = s.substr(dot + 1);
  if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
    throw Error(ErrorKind::Parse, "not a number: '" + std::string(original) + "'");
  mpz_class scale = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
  mpz_class digits(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
  Rational q(digits, scale);
  q.canonicalize();
  return q;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRootSystem: return "root-system";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::ChartMismatch: return "chart-mismatch";
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::NoLimit: return "no-limit";
    case ErrorKind::PatternMismatch: return "pattern-mismatch";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = decimal_to_rational(trim(s.substr(0, slash)), text);
    Rational den = decimal_to_rational(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
    q = num / den;
  } else {
    q = decimal_to_rational(s, text);
  }
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

// ---------------------------------------------------------------------------
// Val

const Rational& Val::value() const {
  if (!finite_) throw Error(ErrorKind::Domain, "value() of +inf");
  return value_;
}

Val Val::scaled(const Rational& k) const {
  if (k < 0) throw Error(ErrorKind::Domain, "negative scalar on a valuation");
  if (k == 0) return Val(0);
  if (!finite_) return *this;
  return Val(Rational(value_ * k));
}

Val operator+(const Val& a, const Val& b) {
  if (!a.finite_ || !b.finite_) return Val::infinity();
  return Val(Rational(a.value_ + b.value_));
}

bool operator==(const Val& a, const Val& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Val& a, const Val& b) {
  if (!a.finite_ || !b.finite_) {
    if (a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Val::to_string() const { return finite_ ? value_.get_str() : "inf"; }

Val Val::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "inf" || s == "+inf" || s == "oo") return infinity();
  return Val(parse_rational(s));
}

Val tropical_min_plus(std::span<const Val> terms) {
  if (terms.empty()) throw Error(ErrorKind::Domain, "tropical sum of an empty list");
  return *std::min_element(terms.begin(), terms.end());
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Polynomial::order() const {
  if (is_zero()) throw Error(ErrorKind::Domain, "order of the zero polynomial");
  int i = 0;
  while (coeffs_[static_cast<std::size_t>(i)] == 0) ++i;
  return i;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw Error(ErrorKind::Domain, "polynomial division by zero");
  r = a;
  std::vector<Rational> qc(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0,
                           Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    Rational c = r.leading() / b.leading();
    qc[static_cast<std::size_t>(shift)] = c;
    r = r - Polynomial::monomial(c, shift) * b;
  }
  q = Polynomial(std::move(qc));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> v = coeffs_;
  const Rational lead = leading();
  for (auto& c : v) c /= lead;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      if (i > 0 && mag.get_den() != 1)
        out << '(' << mag.get_str() << ")*";
      else
        out << mag.get_str() << (i > 0 ? "*" : "");
    }
    if (i >= 1) out << 't';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(ErrorKind::Domain, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num, den);
  Polynomial q, r;
  Polynomial::divmod(num, g, num_, r);
  Polynomial::divmod(den, g, q, r);
  const Rational lead = q.leading();
  num_ = num_ * Polynomial::constant(Rational(1 / lead));
  den_ = q.monic();
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::Domain, "not a constant: " + to_string());
  return num_.is_zero() ? Rational(0) : Rational(num_.coeffs()[0] / den_.coeffs()[0]);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::Domain, "division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::pow(int e) const {
  RationalFunction base = e < 0 ? RationalFunction(1) / *this : *this;
  RationalFunction acc(1);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) acc = acc * base;
  return acc;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) {
    if (num_.degree() <= 0) return num_.to_string();
    return num_.to_string();
  }
  auto wrap = [](const Polynomial& p) {
    const auto nonzero = std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c != 0; });
    return nonzero > 1 ? "(" + p.to_string() + ")" : p.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

// Recursive-descent parser for t-expressions.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      skip_ws();
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else if (pos_ < text_.size() && (text_[pos_] == '(' || text_[pos_] == 't' ||
                                          std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        acc = acc * power();  // juxtaposition, e.g. "3t"
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      bool neg = accept('-');
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (neg && base.is_zero()) fail("negative power of zero");
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalFunction atom() {
    skip_ws();
    if (accept('(')) {
      RationalFunction f = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (accept('t')) return RationalFunction::t();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (start == pos_) fail("expected number, 't' or '('");
    return RationalFunction(parse_rational(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------------------
// Coefficient

Coefficient::Coefficient(const RationalFunction& f) {
  if (f.is_constant()) {
    Rational q = f.constant_value();
    q.canonicalize();
    repr_ = q;
  } else {
    repr_ = f;
  }
}

bool Coefficient::is_zero() const {
  return is_rational() ? rational() == 0 : std::get<RationalFunction>(repr_).is_zero();
}

RationalFunction Coefficient::as_function() const {
  return is_rational() ? RationalFunction(rational()) : std::get<RationalFunction>(repr_);
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  if (a.is_rational() && b.is_rational()) return Coefficient(Rational(a.rational() + b.rational()));
  return Coefficient(a.as_function() + b.as_function());
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.is_rational() && b.is_rational()) return Coefficient(Rational(a.rational() * b.rational()));
  return Coefficient(a.as_function() * b.as_function());
}

Coefficient Coefficient::operator-() const {
  if (is_rational()) return Coefficient(Rational(-rational()));
  return Coefficient(-std::get<RationalFunction>(repr_));
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  return a.as_function() == b.as_function();
}

std::string Coefficient::to_string() const {
  return is_rational() ? rational().get_str() : std::get<RationalFunction>(repr_).to_string();
}

// ---------------------------------------------------------------------------
// CoefficientModel

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientModel CoefficientModel::p_adic(long p) {
  if (!is_prime(p)) throw Error(ErrorKind::Domain, "p-adic model needs a prime, got " + std::to_string(p));
  return {Kind::PAdic, p};
}

CoefficientModel CoefficientModel::t_adic() { return {Kind::TAdic, 0}; }

namespace {

long p_adic_order(const mpz_class& n, long p) {
  mpz_class rest;
  const mpz_class prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

Val CoefficientModel::valuation(const Coefficient& c) const {
  if (c.is_zero()) return Val::infinity();
  if (kind_ == Kind::PAdic) {
    if (!c.is_rational()) throw Error(ErrorKind::Domain, "p-adic valuation of non-constant " + c.to_string());
    const Rational& q = c.rational();
    return Val(p_adic_order(q.get_num(), prime_) - p_adic_order(q.get_den(), prime_));
  }
  const RationalFunction f = c.as_function();
  return Val(static_cast<long>(f.numerator().order() - f.denominator().order()));
}

Coefficient CoefficientModel::parse(std::string_view text) const {
  if (kind_ == Kind::PAdic) {
    if (text.find('t') != std::string_view::npos)
      throw Error(ErrorKind::Parse, "t-expression '" + std::string(text) + "' under a p-adic model");
    return Coefficient(parse_rational_function(text));
  }
  return Coefficient(parse_rational_function(text));
}

std::string CoefficientModel::name() const {
  return kind_ == Kind::PAdic ? "p-adic(p=" + std::to_string(prime_) + ")" : "t-adic";
}

}  // namespace thetabar
