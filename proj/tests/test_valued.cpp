#include <gtest/gtest.h>

#include <random>

#include "thetabar/error.hpp"
#include "thetabar/valued.hpp"

using namespace thetabar;

namespace {

// Hand-rolled generator: small rationals, +inf with probability 1/4.
Val draw_val(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3), num(-30, 30), den(1, 9);
  if (pick(rng) == 0) return Val::infinity();
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return Val(q);
}

Rational draw_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 400), den(1, 400), sign(0, 1);
  Rational q(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  q.canonicalize();
  return q;
}

// Independent oracle: v_p by repeated division of machine integers.
int vp_int(long n, long p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int vp_oracle(const Rational& q, long p) {
  return vp_int(std::labs(q.get_num().get_si()), p) - vp_int(q.get_den().get_si(), p);
}

}  // namespace

TEST(Rationals, ParseFormsAgree) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/4"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational(" 6/8 "), Rational(3, 4));
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
}

TEST(Rationals, MalformedInputIsAParseError) {
  for (const char* bad : {"", "abc", "1/0", "1//2", "2.5.1"}) {
    try {
      parse_rational(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
    }
  }
}

TEST(Val, InfinityIsTopAndAbsorbing) {
  const Val inf = Val::infinity();
  EXPECT_TRUE(inf.is_infinite());
  EXPECT_LT(Val(1000000), inf);
  EXPECT_EQ(inf + Val(-5), inf);
  EXPECT_EQ(min(inf, Val(3)), Val(3));
  EXPECT_EQ(inf.scaled(Rational(0)), Val(0));
  EXPECT_EQ(inf.scaled(Rational(2)), inf);
  EXPECT_THROW((void)inf.value(), Error);
}

TEST(Val, TextRoundTrip) {
  for (const char* s : {"inf", "0", "-7/3", "12"}) EXPECT_EQ(Val::parse(s).to_string(), s);
  EXPECT_EQ(Val::parse("+inf"), Val::infinity());
  EXPECT_EQ(Val::parse("oo"), Val::infinity());
  EXPECT_EQ(Val::parse("0.5"), Val(Rational(1, 2)));
}

TEST(Val, TropicalMinPlusOfEmptyIsADomainError) {
  try {
    tropical_min_plus({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
  const std::vector<Val> v{Val(3), Val::infinity(), Val(Rational(-1, 2))};
  EXPECT_EQ(tropical_min_plus(v), Val(Rational(-1, 2)));
}

TEST(Val, SemiringLawsOnRandomSamples) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Val a = draw_val(rng), b = draw_val(rng), c = draw_val(rng);
    EXPECT_EQ(min(a, b), min(b, a));
    EXPECT_EQ(min(min(a, b), c), min(a, min(b, c)));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + min(b, c), min(a + b, a + c));
    EXPECT_EQ(a + Val(0), a);
    EXPECT_EQ(min(a, Val::infinity()), a);
  }
}

TEST(PAdic, ValuationMatchesDivisionOracle) {
  const auto m = CoefficientModel::p_adic(2);
  EXPECT_EQ(m.valuation(Rational(12)), Val(2));
  EXPECT_EQ(CoefficientModel::p_adic(3).valuation(Rational(1, 9)), Val(-2));
  EXPECT_EQ(m.valuation(Rational(0)), Val::infinity());
  std::mt19937_64 rng(11);
  for (long p : {2L, 3L, 5L, 7L}) {
    const auto model = CoefficientModel::p_adic(p);
    for (int i = 0; i < 500; ++i) {
      const Rational q = draw_nonzero(rng);
      EXPECT_EQ(model.valuation(q), Val(vp_oracle(q, p))) << q.get_str();
    }
  }
}

TEST(PAdic, MultiplicativeAndSharplyUltrametric) {
  std::mt19937_64 rng(13);
  const auto model = CoefficientModel::p_adic(3);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = draw_nonzero(rng), b = draw_nonzero(rng);
    const Val va = model.valuation(a), vb = model.valuation(b);
    EXPECT_EQ(model.valuation(Rational(a * b)), va + vb);
    const Val vs = model.valuation(Rational(a + b));
    EXPECT_GE(vs, min(va, vb));
    if (va != vb) EXPECT_EQ(vs, min(va, vb));
  }
}

TEST(PAdic, CompositeModulusRejected) {
  EXPECT_THROW(CoefficientModel::p_adic(4), Error);
  EXPECT_THROW(CoefficientModel::p_adic(1), Error);
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(91));
}

TEST(PAdic, ParseRejectsTheVariable) {
  try {
    CoefficientModel::p_adic(2).parse("t+1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}

TEST(RationalFunctions, ArithmeticAndReduction) {
  const RationalFunction t = RationalFunction::t();
  const RationalFunction one(Rational(1));
  EXPECT_EQ((t + one) * (t + one), t * t + RationalFunction(Rational(2)) * t + one);
  EXPECT_EQ((t * t - one) / (t - one), t + one);
  EXPECT_EQ(t.pow(-2) * t.pow(2), one);
  EXPECT_TRUE(((t + one) / (t + one)).is_constant());
}

TEST(RationalFunctions, ParserHandlesPowersAndJuxtaposition) {
  const RationalFunction t = RationalFunction::t();
  EXPECT_EQ(parse_rational_function("t^3/(1+t)"), t.pow(3) / (t + RationalFunction(Rational(1))));
  EXPECT_EQ(parse_rational_function("2t - 1/3"), RationalFunction(Rational(2)) * t - RationalFunction(Rational(1, 3)));
  EXPECT_EQ(parse_rational_function("(1+t)^-2"), (t + RationalFunction(Rational(1))).pow(-2));
  EXPECT_THROW(parse_rational_function("(t+1"), Error);
  EXPECT_THROW(parse_rational_function("t/0"), Error);
}

TEST(TAdic, OrderOfVanishingAtZero) {
  const auto m = CoefficientModel::t_adic();
  EXPECT_EQ(m.valuation(m.parse("t^3/(1+t)")), Val(3));
  EXPECT_EQ(m.valuation(m.parse("t^-2 + 1")), Val(-2));
  EXPECT_EQ(m.valuation(m.parse("5")), Val(0));
  EXPECT_EQ(m.valuation(m.parse("0")), Val::infinity());
}

TEST(TAdic, MultiplicativeAndSharplyUltrametric) {
  std::mt19937_64 rng(17);
  const auto m = CoefficientModel::t_adic();
  std::uniform_int_distribution<int> e(-4, 4), c(-5, 5);
  auto draw = [&] {
    RationalFunction f;
    while (f.is_zero()) f = RationalFunction(Rational(c(rng))) * RationalFunction::t().pow(e(rng)) +
                            RationalFunction(Rational(c(rng))) * RationalFunction::t().pow(e(rng));
    return Coefficient(f);
  };
  for (int i = 0; i < 500; ++i) {
    const Coefficient a = draw(), b = draw();
    EXPECT_EQ(m.valuation(a * b), m.valuation(a) + m.valuation(b));
    const Val va = m.valuation(a), vb = m.valuation(b);
    EXPECT_GE(m.valuation(a + b), min(va, vb));
    if (va != vb) EXPECT_EQ(m.valuation(a + b), min(va, vb));
  }
}

TEST(Coefficients, ConstantFunctionsCollapseToRationals) {
  const Coefficient c(RationalFunction::t() / RationalFunction::t());
  EXPECT_TRUE(c.is_rational());
  EXPECT_EQ(c, Coefficient(1));
  EXPECT_EQ((Coefficient(Rational(1, 2)) + Coefficient(Rational(1, 2))), Coefficient(1));
}
