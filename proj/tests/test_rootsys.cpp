#include <gtest/gtest.h>

#include <set>

#include "thetabar/error.hpp"
#include "thetabar/rootsys.hpp"

using namespace thetabar;

namespace {

struct Expected {
  const char* name;
  std::size_t positive;
  std::uint64_t weyl;
};

// Classical tables, written out by hand.
const Expected kTable[] = {
    {"A1", 1, 2},      {"A2", 3, 6},     {"A3", 6, 24},       {"A4", 10, 120},  {"B2", 4, 8},
    {"B3", 9, 48},     {"B4", 16, 384},  {"C3", 9, 48},       {"C4", 16, 384},  {"D4", 12, 192},
    {"D5", 20, 1920},  {"G2", 6, 12},    {"F4", 24, 1152},    {"E6", 36, 51840}, {"E7", 63, 2903040},
    {"E8", 120, 696729600},
};

RootVector unit(int n, int i) {
  RootVector v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

// W_tau by breadth-first closure under the reflections in tau.
std::set<WeylElement> parabolic_subgroup(const RootSystem& rs, ParabolicType tau) {
  std::set<WeylElement> seen{WeylElement::identity(rs.rank())};
  std::vector<WeylElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i : tau.indices()) {
        const WeylElement v = w * WeylElement::simple_reflection(rs, i);
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST(RootSystem, RootCountsMatchClassicalTable) {
  for (const auto& e : kTable) {
    const RootSystem rs = RootSystem::parse(e.name);
    EXPECT_EQ(rs.num_positive(), e.positive) << e.name;
    EXPECT_EQ(rs.num_roots(), 2 * e.positive) << e.name;
    EXPECT_EQ(rs.weyl_order(), e.weyl) << e.name;
  }
}

TEST(RootSystem, BruteForceWeylOrders) {
  for (const auto& e : kTable) {
    if (e.weyl > 2000) continue;
    const RootSystem rs = RootSystem::parse(e.name);
    const WeylGroup g = weyl_group(rs);
    EXPECT_EQ(g.elements.size(), e.weyl) << e.name;
    std::set<WeylElement> distinct(g.elements.begin(), g.elements.end());
    EXPECT_EQ(distinct.size(), e.weyl) << e.name;
  }
  EXPECT_EQ(weyl_group(RootSystem::parse("B2")).elements.size(), 8u);
}

TEST(RootSystem, CapExceededBeforeEnumeration) {
  try {
    weyl_group(RootSystem::parse("E8"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  EXPECT_THROW(weyl_group(RootSystem::parse("A5"), 100), Error);
}

TEST(RootSystem, SimpleRootsComeFirstAndNegativesMirror) {
  for (const char* name : {"A3", "B3", "G2", "F4", "B2xA1"}) {
    const RootSystem rs = RootSystem::parse(name);
    for (int i = 0; i < rs.rank(); ++i) EXPECT_EQ(rs.root(static_cast<std::size_t>(i)), unit(rs.rank(), i));
    for (std::size_t r = 0; r < rs.num_roots(); ++r) {
      RootVector neg = rs.root(r);
      for (auto& c : neg) c = -c;
      EXPECT_EQ(rs.root(rs.negative_of(r)), neg);
      EXPECT_EQ(rs.index_of(rs.root(r)), r);
    }
  }
}

TEST(RootSystem, ReflectionsPreserveRootsAndAreInvolutions) {
  for (const char* name : {"A4", "B3", "C3", "D4", "G2", "F4", "E6", "A1xA1xA2"}) {
    const RootSystem rs = RootSystem::parse(name);
    for (const auto& root : rs.roots())
      for (int i = 0; i < rs.rank(); ++i) {
        const RootVector s = rs.reflect(root, i);
        EXPECT_TRUE(rs.index_of(s).has_value()) << name;
        EXPECT_EQ(rs.reflect(s, i), root);
      }
  }
}

TEST(RootSystem, G2CartanData) {
  const RootSystem rs = RootSystem::parse("G2");
  // alpha_1 short, <alpha_1, alpha_2^vee> = -1, <alpha_2, alpha_1^vee> = -3.
  EXPECT_EQ(rs.coroot_pairing(unit(2, 0), 1), -1);
  EXPECT_EQ(rs.coroot_pairing(unit(2, 1), 0), -3);
  EXPECT_TRUE(rs.index_of({3, 2}).has_value());
  EXPECT_FALSE(rs.index_of({2, 2}).has_value());
}

TEST(RootSystem, ParseAndValidation) {
  EXPECT_EQ(RootSystem::parse("b2xa1").name(), "B2xA1");
  for (const char* bad : {"B1", "C1", "D2", "E9", "E5", "F3", "G3", "A0", "A", "", "X2", "A33", "A2x"}) {
    try {
      RootSystem::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidRootSystem) << bad;
    }
  }
}

TEST(WeylElement, CanonicalWordsRoundTrip) {
  const RootSystem rs = RootSystem::parse("B3");
  for (const auto& w : weyl_group(rs).elements) {
    const auto word = w.word(rs);
    EXPECT_EQ(WeylElement::from_word(rs, word), w);
    EXPECT_EQ(w.length(rs), static_cast<int>(word.size()));
    EXPECT_TRUE((w * w.inverse()).is_identity());
    // Length equals the number of positive roots sent negative.
    int inversions = 0;
    for (std::size_t r = 0; r < rs.num_positive(); ++r) {
      const RootVector img = w.apply(rs.root(r));
      if (std::all_of(img.begin(), img.end(), [](int c) { return c <= 0; })) ++inversions;
    }
    EXPECT_EQ(inversions, w.length(rs));
  }
}

TEST(WeylElement, LongestElementByDescentMatchesBruteForce) {
  for (const char* name : {"A1", "A3", "B2", "C3", "D4", "G2", "F4", "B2xA1"}) {
    const RootSystem rs = RootSystem::parse(name);
    const WeylGroup g = weyl_group(rs);
    EXPECT_EQ(longest_element(rs), g.longest) << name;
    EXPECT_EQ(g.longest.length(rs), static_cast<int>(rs.num_positive())) << name;
  }
  for (const char* name : {"E7", "E8"}) {
    const RootSystem rs = RootSystem::parse(name);
    const WeylElement w0 = longest_element(rs);
    EXPECT_EQ(w0.length(rs), static_cast<int>(rs.num_positive())) << name;
    EXPECT_TRUE((w0 * w0).is_identity()) << name;
  }
}

TEST(Parabolics, OppositeTypeExamples) {
  const RootSystem a2 = RootSystem::parse("A2");
  EXPECT_EQ(opposite_type(a2, ParabolicType(0b01)), ParabolicType(0b10));
  const RootSystem b2 = RootSystem::parse("B2");
  for (std::uint32_t b = 0; b < 4; ++b) EXPECT_EQ(opposite_type(b2, ParabolicType(b)), ParabolicType(b));
  // E6: -w0 is the diagram automorphism 1<->6, 3<->5 (Bourbaki), 2 and 4 fixed.
  const RootSystem e6 = RootSystem::parse("E6");
  EXPECT_EQ(opposite_type(e6, ParabolicType(0b000001)), ParabolicType(0b100000));
  EXPECT_EQ(opposite_type(e6, ParabolicType(0b000100)), ParabolicType(0b010000));
  EXPECT_EQ(opposite_type(e6, ParabolicType(0b001010)), ParabolicType(0b001010));
}

TEST(Parabolics, OppositeTypeIsAnInvolutionUpToRankFour) {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "A2xA2", "B2xA1"}) {
    const RootSystem rs = RootSystem::parse(name);
    for (const auto& t : type_poset(rs).types) EXPECT_EQ(opposite_type(rs, opposite_type(rs, t)), t) << name;
  }
}

TEST(Parabolics, LeviAndRadicalPartitionRoots) {
  for (const char* name : {"A3", "B3", "G2", "D4", "B2xA1"}) {
    const RootSystem rs = RootSystem::parse(name);
    for (const auto& tau : type_poset(rs).types) {
      const LeviDecomposition ld = levi_and_radical_roots(rs, tau);
      std::set<std::size_t> all;
      for (auto r : ld.levi) all.insert(r);
      for (auto r : ld.radical) EXPECT_TRUE(all.insert(r).second);
      for (auto r : ld.radical) EXPECT_TRUE(all.insert(rs.negative_of(r)).second);
      EXPECT_EQ(all.size(), rs.num_roots());
      EXPECT_EQ(ld.levi_positive.size() + ld.levi_negative.size(), ld.levi.size());
      // Oracle: the W_tau-orbit of the simple roots in tau is Phi(L).
      std::set<RootVector> orbit;
      for (const auto& v : parabolic_subgroup(rs, tau))
        for (int i : tau.indices()) orbit.insert(v.apply(unit(rs.rank(), i)));
      EXPECT_EQ(orbit.size(), ld.levi.size()) << name << " tau=" << tau.bitstring(rs.rank());
    }
  }
}

TEST(Parabolics, MinimalCosetRepresentativeIsShortestInCoset) {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    const RootSystem rs = RootSystem::parse(name);
    const WeylGroup g = weyl_group(rs);
    for (const auto& tau : type_poset(rs).types) {
      const auto sub = parabolic_subgroup(rs, tau);
      for (const auto& w : g.elements) {
        const WeylElement u = min_coset_representative(rs, w, tau);
        int best = 1 << 20;
        bool in_coset = false;
        for (const auto& v : sub) {
          best = std::min(best, (w * v).length(rs));
          if (w * v == u) in_coset = true;
        }
        EXPECT_TRUE(in_coset);
        EXPECT_EQ(u.length(rs), best);
      }
    }
  }
}

TEST(Parabolics, TypePosetIsBoolean) {
  const RootSystem rs = RootSystem::parse("B2xA1");
  const TypePoset p = type_poset(rs);
  EXPECT_EQ(p.types.size(), 8u);
  EXPECT_EQ(p.covers().size(), 12u);  // rank * 2^(rank-1)
  EXPECT_EQ(p.minimum(), ParabolicType());
  EXPECT_EQ(p.maximum(), ParabolicType(0b111));
  EXPECT_EQ(ParabolicType::parse_bitstring("101"), ParabolicType(0b101));
  EXPECT_EQ(ParabolicType(0b001).bitstring(3), "100");
}

TEST(Parabolics, Degeneracy) {
  const RootSystem rs = RootSystem::parse("B2xA1");
  EXPECT_TRUE(is_degenerate(rs, ParabolicType(0b100)));   // the A1 factor is full
  EXPECT_TRUE(is_degenerate(rs, ParabolicType(0b011)));   // the B2 factor is full
  EXPECT_FALSE(is_degenerate(rs, ParabolicType(0b001)));
  EXPECT_FALSE(is_degenerate(rs, ParabolicType()));
}

TEST(Products, ComputationsFactorThroughComponents) {
  const RootSystem prod = RootSystem::parse("B2xA2");
  const RootSystem b2 = RootSystem::parse("B2"), a2 = RootSystem::parse("A2");
  EXPECT_EQ(prod.num_positive(), b2.num_positive() + a2.num_positive());
  EXPECT_EQ(prod.weyl_order(), b2.weyl_order() * a2.weyl_order());
  EXPECT_EQ(weyl_group(prod).elements.size(), 48u);
  EXPECT_EQ(longest_element(prod).length(prod), longest_element(b2).length(b2) + longest_element(a2).length(a2));
  for (std::uint32_t lo = 0; lo < 4; ++lo)
    for (std::uint32_t hi = 0; hi < 4; ++hi) {
      const ParabolicType t(lo | (hi << 2));
      const std::uint32_t expect =
          opposite_type(b2, ParabolicType(lo)).bits() | (opposite_type(a2, ParabolicType(hi)).bits() << 2);
      EXPECT_EQ(opposite_type(prod, t).bits(), expect);
    }
}
