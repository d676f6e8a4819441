#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cabling/farey.hpp"
#include "cabling/legendrian.hpp"
#include "cables.hpp"

namespace {

using cabling::BranchClass;
using cabling::CableSpec;
using cabling::Classification;
using cabling::CommonClass;
using cabling::DomainError;
using cabling::GeneratorKind;
using cabling::Int;
using cabling::LegendrianClass;
using cabling::Region;
using cabling::Slope;
using cabling::TorusKnot;

const TorusKnot trefoil(2, 3);
const TorusKnot t25(2, 5);
const TorusKnot t34(3, 4);

std::size_t find_gen(const Classification& cl, const std::string& label) {
  for (std::size_t i = 0; i < cl.generators.size(); ++i)
    if (cl.generators[i].label == label) return i;
  ADD_FAILURE() << "no generator " << label;
  return 0;
}

// Reference counts: expand every stabilization word of every generator
// explicitly, collapsing words past their bound, and tally distinct classes.
std::map<std::pair<Int, Int>, Int> enumerate_words(const Classification& cl, Int floor) {
  std::set<std::pair<Int, Int>> common;
  std::set<std::tuple<std::size_t, Int, Int>> branches;
  for (std::size_t i = 0; i < cl.generators.size(); ++i) {
    const auto& g = cl.generators[i];
    Int depth = g.tb - floor;
    for (Int a = 0; a <= depth; ++a)
      for (Int b = 0; a + b <= depth; ++b) {
        // a protected-direction moves, b opposite moves
        int dir = g.is_branch() ? g.sign : 1;
        Int rot = g.rot + dir * (a - b);
        Int tb = g.tb - a - b;
        if (g.is_branch() && a <= *g.bound)
          branches.insert({i, a, b});
        else
          common.insert({rot, tb});
      }
  }
  std::map<std::pair<Int, Int>, Int> out;
  for (auto p : common) ++out[p];
  for (auto [i, a, b] : branches) {
    const auto& g = cl.generators[i];
    ++out[{g.rot + g.sign * (a - b), g.tb - a - b}];
  }
  return out;
}

TEST(Cable, Validation) {
  EXPECT_THROW(CableSpec(trefoil, 0, 1), DomainError);
  EXPECT_THROW(CableSpec(trefoil, 2, 4), DomainError);
  EXPECT_THROW(CableSpec(t25, 2, 1), DomainError);
  CableSpec neg(trefoil, 3, -2);
  EXPECT_EQ(neg.r(), -3);
  EXPECT_EQ(neg.s(), 2);
  EXPECT_EQ(neg.slope(), Slope(-2, 3));
}

TEST(MaxTb, Examples) {
  EXPECT_EQ(cabling::max_tb(CableSpec(trefoil, 2, 3)), 6);
  EXPECT_EQ(cabling::max_tb(CableSpec(trefoil, 3, 2)), 5);
  EXPECT_EQ(cabling::max_tb(CableSpec(t25, 3, 2)), 6);
  EXPECT_EQ(cabling::bennequin_bound(CableSpec(trefoil, 2, 3)), 7);
  EXPECT_EQ(cabling::bennequin_bound(CableSpec(t25, 3, 2)), 9);
  EXPECT_EQ(cabling::bennequin_bound(CableSpec(trefoil, 3, 2)), 5);
  // The (r,1)-curve is the knot itself.
  EXPECT_EQ(cabling::max_tb(CableSpec(t34, 7, 1)), 5);
}

TEST(Classify, TrefoilTwoThree) {
  auto cl = classify(CableSpec(trefoil, 2, 3));
  EXPECT_EQ(cl.case_name(), "trefoil_band");
  EXPECT_FALSE(cl.simple);
  EXPECT_EQ(cl.params.c, 1);
  EXPECT_EQ(cl.params.c_prime, 0);
  ASSERT_EQ(cl.generators.size(), 4u);
  const auto& lp = cl.generators[find_gen(cl, "L^1_+")];
  EXPECT_EQ(lp.tb, 6);
  EXPECT_EQ(lp.rot, 1);
  const auto& lm = cl.generators[find_gen(cl, "L^1_-")];
  EXPECT_EQ(lm.rot, -1);
  const auto& kp = cl.generators[find_gen(cl, "K_+")];
  EXPECT_EQ(kp.tb, 5);
  EXPECT_EQ(kp.rot, 2);
  EXPECT_FALSE(kp.destabilizable);
  const auto& km = cl.generators[find_gen(cl, "K_-")];
  EXPECT_EQ(km.tb, 5);
  EXPECT_EQ(km.rot, -2);
  EXPECT_EQ(km.bound, 0);
}

TEST(Classify, TwoFiveThreeTwo) {
  auto cl = classify(CableSpec(t25, 3, 2));
  EXPECT_EQ(cl.case_name(), "influence_upper");
  EXPECT_EQ(cl.params.n, 2);
  EXPECT_EQ(cl.params.k, 2);
  EXPECT_EQ(cl.params.c, 0);
  std::multiset<Int> peaks;
  for (const auto& g : cl.generators) {
    EXPECT_EQ(g.tb, 6);
    if (!g.is_branch()) peaks.insert(g.rot);
  }
  EXPECT_EQ(peaks, (std::multiset<Int>{-3, -1, 1, 3}));
  EXPECT_EQ(cl.generators[find_gen(cl, "K_+")].rot, 3);
  EXPECT_EQ(cl.generators[find_gen(cl, "K_-")].rot, -3);
  EXPECT_TRUE(cl.generators[find_gen(cl, "K_+")].destabilizable);
}

TEST(Classify, TrefoilTwoFive) {
  auto cl = classify(CableSpec(trefoil, 2, 5));
  EXPECT_EQ(cl.params.n, 2);
  EXPECT_EQ(cl.params.c, 1);
  EXPECT_EQ(cl.params.c_prime, 0);
  for (auto label : {"L^1_+", "L^2_+"}) {
    EXPECT_EQ(cl.generators[find_gen(cl, label)].tb, 10);
    EXPECT_EQ(cl.generators[find_gen(cl, label)].rot, 3);
  }
  EXPECT_EQ(cl.generators[find_gen(cl, "L^2_-")].rot, -3);
  EXPECT_EQ(cl.generators[find_gen(cl, "K_+")].tb, 9);
  EXPECT_EQ(cl.generators[find_gen(cl, "K_+")].rot, 4);
  EXPECT_EQ(cl.generators[find_gen(cl, "K_-")].rot, -4);
}

TEST(Classify, LowerInfluence) {
  // 3/5 in (1/2, 2/3) for (2,5): K at tb 15 - |3*3 - 5*2|, rot r(n-1).
  auto cl = classify(CableSpec(t25, 5, 3));
  EXPECT_EQ(cl.case_name(), "influence_lower");
  const auto& kp = cl.generators[find_gen(cl, "K_+")];
  EXPECT_EQ(kp.tb, 14);
  EXPECT_EQ(kp.rot, 5);
  EXPECT_FALSE(kp.destabilizable);
  EXPECT_EQ(kp.bound, cabling::intersect(Slope(3, 5), Slope(1, 1)) - 1 - 1);
}

TEST(Classify, IntegralTrefoilBandOmitsK) {
  auto cl = classify(CableSpec(trefoil, 1, 3));
  EXPECT_EQ(cl.case_name(), "trefoil_band_integral");
  for (const auto& g : cl.generators) EXPECT_NE(g.kind, GeneratorKind::ProtectedK);
  auto one = classify(CableSpec(trefoil, 1, 1));
  EXPECT_TRUE(one.simple);
  EXPECT_EQ(count_classes(one, 0, 1), 1);
}

TEST(PeakRotations, Examples) {
  EXPECT_EQ(cabling::peak_rotations(CableSpec(trefoil, 3, -2)), (std::vector<Int>{-5, -3, -1, 1, 3, 5}));
  EXPECT_EQ(cabling::peak_rotations(CableSpec(t25, 3, 2)), (std::vector<Int>{-3, -3, -1, 1, 3, 3}));
  EXPECT_EQ(cabling::peak_rotations(CableSpec(trefoil, 2, 3)), (std::vector<Int>{-1, 1}));
  EXPECT_EQ(cabling::peak_rotations(CableSpec(trefoil, 3, 2)), (std::vector<Int>{0}));
}

TEST(Stabilize, Examples) {
  auto cl = classify(CableSpec(trefoil, 2, 3));
  auto k = BranchClass{find_gen(cl, "K_+"), 0, 0};
  auto down = cabling::stabilize(cl, k, -1);
  EXPECT_EQ(down, LegendrianClass(BranchClass{k.generator, 0, 1}));
  EXPECT_EQ(cabling::class_tb(cl, down), 4);
  EXPECT_EQ(cabling::class_rot(cl, down), 1);
  EXPECT_EQ(cabling::stabilize(cl, k, +1), LegendrianClass(CommonClass{3, 4}));
  EXPECT_EQ(cabling::stabilize(cl, CommonClass{0, 5}, +1), LegendrianClass(CommonClass{1, 4}));
}

TEST(SameClass, Examples) {
  auto cl5 = classify(CableSpec(trefoil, 2, 5));
  auto l2 = find_gen(cl5, "L^2_+");
  EXPECT_TRUE(cabling::same_class(cl5, BranchClass{l2, 1, 4}, BranchClass{l2, 1, 4}));
  auto cl = classify(CableSpec(trefoil, 2, 3));
  auto kp = find_gen(cl, "K_+");
  EXPECT_FALSE(cabling::same_class(cl, BranchClass{kp, 0, 1}, CommonClass{1, 4}));
  auto a = cabling::stabilize(cl, BranchClass{kp, 0, 1}, +1);
  auto b = cabling::stabilize(cl, cabling::stabilize(cl, CommonClass{2, 5}, +1), -1);
  EXPECT_TRUE(cabling::same_class(cl, a, b));
  EXPECT_EQ(a, LegendrianClass(CommonClass{2, 3}));
}

TEST(CountClasses, Examples) {
  auto cl = classify(CableSpec(trefoil, 2, 5));
  EXPECT_EQ(count_classes(cl, 3, 10), 2);
  EXPECT_EQ(count_classes(cl, 0, 5), 5);
  EXPECT_EQ(count_classes(cl, 0, 6), 0);
  EXPECT_EQ(count_classes(classify(CableSpec(trefoil, 2, 3)), 0, 1), 1);
}

TEST(Mountain, TrefoilTwoFiveCounts) {
  auto cl = classify(CableSpec(trefoil, 2, 5));
  auto mr = mountain_range(cl, 5);
  for (Int s : {1, -1}) {
    EXPECT_EQ(mr.at(3 * s, 10), 2);
    EXPECT_EQ(mr.at(4 * s, 9), 3);
    EXPECT_EQ(mr.at(1 * s, 6), 4);
  }
  EXPECT_EQ(mr.at(0, 7), 3);
  EXPECT_EQ(mr.at(0, 5), 5);
  // Labels in terms of n = 2.
  Int n = 2;
  EXPECT_EQ(mr.at(3, 10), n);
  EXPECT_EQ(mr.at(4, 9), n + 1);
  EXPECT_EQ(mr.at(0, 7), 2 * n - 1);
  EXPECT_EQ(mr.at(1, 6), 2 * n);
  EXPECT_EQ(mr.at(0, 5), 2 * n + 1);
  EXPECT_EQ(count_classes(cl, 0, 1), 1);
}

TEST(Mountain, LowSlopeSingleCone) {
  auto cl = classify(CableSpec(trefoil, 3, 2));
  auto mr = mountain_range(cl, 3);
  EXPECT_EQ(mr.counts.size(), 1u + 2u + 3u);
  for (auto [pt, n] : mr.counts) {
    EXPECT_EQ(n, 1);
    EXPECT_LE(std::abs(pt.first), 5 - pt.second);
  }
  EXPECT_THROW(mountain_range(cl, 6), DomainError);
}

TEST(Parameters, Values) {
  EXPECT_EQ(cabling::divide_tb(2, 3), 6);
  EXPECT_EQ(cabling::ruling_tb(3, 2, Slope(1, 1), 1), 5);
  EXPECT_EQ(cabling::ruling_tb(1, 1, Slope::infinity(), 1), 0);
  EXPECT_THROW(cabling::ruling_tb(3, 2, Slope(2, 3), 1), DomainError);
  EXPECT_EQ(cabling::cable_rot(5, 3, 1, 0), 5);
  EXPECT_EQ(cabling::cable_rot(4, 7, 0, 0), 0);
  for (Int k = 1; k < 5; ++k)
    for (int sign : {1, -1}) EXPECT_EQ(cabling::cable_rot(3, 5, sign * (k - 1), 0), sign * 3 * (k - 1));
}

TEST(Model, CountsMatchWordEnumeration) {
  for (const auto& knot : {trefoil, t25, t34})
    for (const auto& cable : testing_cables::all_cables(knot, 7, 5)) {
      auto cl = classify(cable);
      Int floor = cl.params.tb_max - 14;
      auto ref = enumerate_words(cl, floor);
      auto mr = mountain_range(cl, floor);
      ASSERT_EQ(mr.counts, ref) << knot.p() << "," << knot.q() << " r=" << cable.r() << " s=" << cable.s();
    }
}

TEST(Model, Invariants) {
  for (const auto& cable : testing_cables::sample_cables(150, 7)) {
    auto cl = classify(cable);
    Int bound = cabling::bennequin_bound(cable);
    Int top = 0;
    for (const auto& g : cl.generators) top = std::max(top == 0 ? g.tb : top, g.tb);
    ASSERT_EQ(top, cl.params.tb_max);
    auto mr = mountain_range(cl, cl.params.tb_max - 16);
    bool multi = false;
    for (auto [pt, n] : mr.counts) {
      auto [rot, tb] = pt;
      ASSERT_TRUE((tb + rot) % 2 != 0);
      ASSERT_LE(tb + std::abs(rot), bound);
      ASSERT_EQ(mr.at(-rot, tb), n);
      multi = multi || n > 1;
    }
    ASSERT_EQ(cl.simple, !multi);
    ASSERT_EQ(cl.simple, cl.region.region != Region::InfluenceUpper && cl.region.region != Region::InfluenceLower &&
                             !(cl.region.region == Region::TrefoilBand && cable.slope() > Slope(1, 1)));
  }
}

TEST(Model, KPlacementOnConeBoundary) {
  for (const auto& knot : testing_cables::small_knots())
    for (const auto& cable : testing_cables::all_cables(knot, 10, 10)) {
      auto cl = classify(cable);
      for (const auto& g : cl.generators) {
        if (g.kind != GeneratorKind::ProtectedK) continue;
        bool on_boundary = false;
        for (const auto& pk : cl.generators) {
          if (pk.is_branch()) continue;
          Int depth = pk.tb - g.tb;
          on_boundary = on_boundary || (depth >= 0 && std::abs(g.rot - pk.rot) == depth);
        }
        ASSERT_TRUE(on_boundary) << cable.r() << "," << cable.s();
      }
    }
}

// Where the K_+ and K_- branches overlap every point carries three classes;
// the overlap is a (c+1) x (c+1) diamond.
TEST(Model, CountThreeRegionIsBranchOverlap) {
  for (const auto& knot : {t25, t34})
    for (const auto& cable : testing_cables::all_cables(knot, 10, 10)) {
      auto cl = classify(cable);
      auto mr = mountain_range(cl, cl.params.tb_max - 40);
      Int threes = 0;
      for (auto [pt, n] : mr.counts) {
        ASSERT_LE(n, 3);
        threes += n == 3;
      }
      if (cl.simple) {
        ASSERT_EQ(threes, 0);
        continue;
      }
      const auto& k = cl.generators.back();
      Int c = *cl.params.c;
      if (k.tb - std::abs(k.rot) - 2 * c < mr.tb_floor) continue;
      ASSERT_EQ(threes, (c + 1) * (c + 1)) << cable.r() << "," << cable.s();
    }
}

TEST(Model, TrefoilPublishedCable) {
  auto cl = classify(CableSpec(trefoil, 2, 3));
  EXPECT_EQ(cl.params.tb_max, 6);
  EXPECT_EQ(cabling::peak_rotations(cl.cable), (std::vector<Int>{-1, 1}));
  auto mr = mountain_range(cl, 1);
  EXPECT_EQ(mr.at(2, 5), 2);
  EXPECT_EQ(mr.at(0, 5), 1);
  EXPECT_EQ(mr.at(1, 4), 2);
  EXPECT_EQ(mr.at(3, 4), 1);
}

}  // namespace
