#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "cabling/farey.hpp"
#include "cabling/transverse.hpp"
#include "cables.hpp"

namespace {

using cabling::CableSpec;
using cabling::DomainError;
using cabling::Int;
using cabling::LegendrianClass;
using cabling::QualSuite;
using cabling::TorusKnot;
using cabling::TransverseClassification;

const TorusKnot trefoil(2, 3);
const TorusKnot t25(2, 5);

std::string name(const TorusKnot& k) { return "T(" + std::to_string(k.p()) + "," + std::to_string(k.q()) + ")"; }

// Transverse classes at a given sl, counted as components of the graph of
// Legendrian classes with tb - rot = sl joined by negative stabilization.
Int orbit_count(const cabling::Classification& cl, Int sl, Int floor) {
  std::map<LegendrianClass, LegendrianClass> parent;
  std::function<LegendrianClass(const LegendrianClass&)> find = [&](const LegendrianClass& c) {
    auto p = parent.at(c);
    if (p == c) return c;
    auto root = find(p);
    parent[c] = root;
    return root;
  };
  for (Int tb = cl.params.tb_max; tb >= floor; --tb) {
    Int rot = tb - sl;
    for (auto& c : cabling::classes_at(cl, rot, tb)) parent.emplace(c, c);
  }
  for (auto& [c, p] : parent) {
    if (cabling::class_tb(cl, c) <= floor) continue;
    auto d = cabling::stabilize(cl, c, -1);
    parent[find(c)] = find(d);
  }
  Int count = 0;
  for (auto& [c, p] : parent) count += find(c) == c;
  return count;
}

TEST(Pushoff, Examples) {
  EXPECT_EQ(cabling::pushoff_sl(6, 1, +1), 5);
  EXPECT_EQ(cabling::pushoff_sl(6, -1, +1), 7);
  EXPECT_EQ(cabling::pushoff_sl(5, 2, +1), 3);
  EXPECT_EQ(cabling::pushoff_sl(5, 2, -1), 7);
  EXPECT_THROW(cabling::pushoff_sl(6, 2, +1), DomainError);
  EXPECT_THROW(cabling::pushoff_sl(6, 1, 0), DomainError);
}

TEST(MaxSl, Examples) {
  EXPECT_EQ(cabling::max_sl(CableSpec(trefoil, 2, 3)), 7);
  EXPECT_EQ(cabling::max_sl(CableSpec(t25, 3, 2)), 9);
  EXPECT_EQ(cabling::max_sl(CableSpec(trefoil, 2, 5)), 13);
}

TEST(Transverse, SimpleCableHasOneChain) {
  auto tc = cabling::classify_transverse(CableSpec(trefoil, 5, 1));
  EXPECT_TRUE(tc.simple);
  ASSERT_EQ(tc.branches.size(), 1u);
  EXPECT_TRUE(tc.branches[0].top_chain);
  EXPECT_EQ(cabling::count_transverse(tc, tc.max_sl), 1);
  EXPECT_EQ(cabling::count_transverse(tc, tc.max_sl + 2), 0);
  EXPECT_EQ(cabling::count_transverse(tc, tc.max_sl - 1), 0);
}

TEST(Transverse, TrefoilTwoThree) {
  auto tc = cabling::classify_transverse(CableSpec(trefoil, 2, 3));
  EXPECT_EQ(tc.max_sl, 7);
  EXPECT_EQ(cabling::count_transverse(tc, 3), 2);
  EXPECT_EQ(cabling::count_transverse(tc, 1), 1);
}

TEST(Transverse, TrefoilTwoFive) {
  auto tc = cabling::classify_transverse(CableSpec(trefoil, 2, 5));
  EXPECT_EQ(tc.max_sl, 13);
  EXPECT_EQ(cabling::count_transverse(tc, 5), 3);
  EXPECT_FALSE(tc.simple);
}

TEST(Transverse, LowerInfluenceCarriesNote) {
  auto tc = cabling::classify_transverse(CableSpec(t25, 5, 3));
  ASSERT_EQ(tc.branches.size(), 2u);
  EXPECT_FALSE(tc.notes.empty());
  auto q = cabling::quotient_transverse(cabling::classify(CableSpec(t25, 5, 3)));
  ASSERT_EQ(q.branches.size(), 2u);
  EXPECT_EQ(q.branches[1].sl_top, tc.branches[1].sl_top);
  EXPECT_EQ(q.branches[1].merge_sl, tc.branches[1].merge_sl);
}

void expect_same(const TransverseClassification& a, const TransverseClassification& b) {
  EXPECT_EQ(a.max_sl, b.max_sl);
  EXPECT_EQ(a.simple, b.simple);
  ASSERT_EQ(a.branches.size(), b.branches.size());
  for (std::size_t i = 0; i < a.branches.size(); ++i) {
    EXPECT_EQ(a.branches[i].top_chain, b.branches[i].top_chain);
    EXPECT_EQ(a.branches[i].sl_top, b.branches[i].sl_top);
    EXPECT_EQ(a.branches[i].merge_sl, b.branches[i].merge_sl);
    EXPECT_EQ(a.branches[i].destabilizable, b.branches[i].destabilizable);
  }
}

TEST(Transverse, QuotientMatchesClosedForm) {
  for (const auto& knot : testing_cables::small_knots())
    for (const auto& cable : testing_cables::all_cables(knot, 9, 6)) {
      SCOPED_TRACE(name(knot) + " r=" + std::to_string(cable.r()) + " s=" + std::to_string(cable.s()));
      expect_same(cabling::quotient_transverse(cabling::classify(cable)), cabling::classify_transverse(cable));
    }
}

TEST(Transverse, CountMatchesOrbitComponents) {
  for (const auto& cable : testing_cables::sample_cables(60, 7)) {
    SCOPED_TRACE("r=" + std::to_string(cable.r()) + " s=" + std::to_string(cable.s()));
    auto cl = cabling::classify(cable);
    auto tc = cabling::classify_transverse(cable);
    Int deepest = tc.max_sl;
    for (const auto& b : tc.branches) deepest = std::min(deepest, b.merge_sl.value_or(b.sl_top));
    Int floor = cl.params.tb_max - (tc.max_sl - deepest) - 30;
    for (Int sl = tc.max_sl + 2; sl >= deepest - 4; sl -= 2)
      EXPECT_EQ(cabling::count_transverse(tc, sl), orbit_count(cl, sl, floor)) << "sl " << sl;
  }
}

TEST(Transverse, MaxSlIsBennequinAndOdd) {
  for (const auto& cable : testing_cables::sample_cables(100, 11)) {
    auto tc = cabling::classify_transverse(cable);
    auto rots = cabling::peak_rotations(cable);
    EXPECT_EQ(tc.max_sl, cabling::max_tb(cable) + *std::max_element(rots.begin(), rots.end()));
    EXPECT_NE(tc.max_sl % 2, 0);
  }
}

TEST(Qualitative, SuiteNames) {
  EXPECT_EQ(cabling::parse_suite("qual2"), QualSuite::qual2);
  EXPECT_EQ(cabling::suite_name(QualSuite::qual4), "qual4");
  EXPECT_THROW(cabling::parse_suite("qual3"), DomainError);
}

TEST(Qualitative, RejectsHypothesisViolations) {
  EXPECT_THROW(cabling::verify_qualitative(t25, QualSuite::qual1, 1, 1, 3), DomainError);
  EXPECT_THROW(cabling::verify_qualitative(trefoil, QualSuite::qual1, 2, 2, 3), DomainError);
  EXPECT_THROW(cabling::verify_qualitative(trefoil, QualSuite::qual1, 1, 1, 1), DomainError);
  EXPECT_THROW(cabling::verify_qualitative(trefoil, QualSuite::qual2, 1, 1, 2), DomainError);
  EXPECT_THROW(cabling::verify_qualitative(trefoil, QualSuite::qual4, 2, 1, 1), DomainError);
  EXPECT_THROW(cabling::verify_qualitative(t25, QualSuite::qual4, 2, 2, 2), DomainError);
}

TEST(Qualitative, Sweep) {
  for (Int k = 1; k <= 4; ++k)
    for (Int m = 1; m <= 4; ++m)
      for (Int n = 2; n <= 5; ++n) {
        if (std::gcd(k, m) != 1) continue;
        for (auto suite : {QualSuite::qual1, QualSuite::qual2}) {
          if (suite == QualSuite::qual2 && n < 3) continue;
          auto rep = cabling::verify_qualitative(trefoil, suite, k, m, n);
          for (const auto& c : rep.claims)
            EXPECT_TRUE(c.pass) << cabling::suite_name(suite) << " k=" << k << " m=" << m << " n=" << n << ": "
                                << c.claim << " " << c.detail;
        }
      }
  for (const auto& knot : {TorusKnot(2, 5), TorusKnot(3, 4), TorusKnot(2, 7)})
    for (Int k : cabling::exceptional_indices(knot, 6))
      for (Int m = 1; m <= 3; ++m)
        for (Int n = 1; n <= 3; ++n) {
          if (std::gcd(m, n) != 1) continue;
          auto rep = cabling::verify_qualitative(knot, QualSuite::qual4, k, m, n);
          for (const auto& c : rep.claims)
            EXPECT_TRUE(c.pass) << name(knot) << " qual4 k=" << k << " m=" << m << " n=" << n << ": " << c.claim
                                << " " << c.detail;
        }
}

}  // namespace
