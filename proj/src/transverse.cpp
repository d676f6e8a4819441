#include "cabling/transverse.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cabling/farey.hpp"

namespace cabling {

Int pushoff_sl(Int tb, Int rot, int sign) {
  if ((tb + rot) % 2 == 0) throw DomainError("tb + rot must be odd");
  if (sign != 1 && sign != -1) throw DomainError("push-off sign must be +1 or -1");
  return tb - sign * rot;
}

Int max_sl(const CableSpec& cable) { return bennequin_bound(cable); }

namespace {

class DisjointSets {
public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

struct Orbit {
  Int sl = 0;
  bool common = false;
  bool hit = false;  // meets the image of S_+
  std::optional<std::size_t> next;
  std::size_t top_member = 0;
  Int top_tb = 0;
};

}  // namespace

TransverseClassification quotient_transverse(const Classification& cl) {
  Int lowest = cl.params.tb_max;
  Int widest_bound = 0;
  for (const auto& g : cl.generators) {
    lowest = std::min(lowest, g.tb);
    if (g.bound) widest_bound = std::max(widest_bound, *g.bound);
  }
  const Int floor = lowest - 2 * (widest_bound + 2) - 2;
  // Within this many levels of the floor, S_- chains may not have met yet.
  const Int trusted = floor + widest_bound + 3;

  std::map<LegendrianClass, std::size_t> ids;
  std::vector<LegendrianClass> members;
  DisjointSets sets;
  for (Int tb = cl.params.tb_max; tb >= floor; --tb) {
    Int reach = rot_reach(cl, tb);
    for (Int rot = -reach; rot <= reach; ++rot)
      for (auto& c : classes_at(cl, rot, tb)) {
        ids.emplace(c, sets.add());
        members.push_back(c);
      }
  }
  auto id_of = [&](const LegendrianClass& c) {
    auto it = ids.find(c);
    if (it == ids.end()) throw std::logic_error("stabilization left the enumerated class model");
    return it->second;
  };

  for (std::size_t i = 0; i < members.size(); ++i)
    if (class_tb(cl, members[i]) > floor) sets.join(i, id_of(stabilize(cl, members[i], -1)));

  std::map<std::size_t, Orbit> orbits;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& c = members[i];
    Int tb = class_tb(cl, c);
    Int sl = pushoff_sl(tb, class_rot(cl, c), +1);
    auto [it, fresh] = orbits.try_emplace(sets.find(i));
    Orbit& o = it->second;
    if (fresh) {
      o.sl = sl;
      o.top_member = i;
      o.top_tb = tb;
    } else if (o.sl != sl) {
      throw std::logic_error("negative stabilization changed the self-linking number");
    }
    if (std::holds_alternative<CommonClass>(c)) o.common = true;
    if (tb > o.top_tb) {
      o.top_tb = tb;
      o.top_member = i;
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (class_tb(cl, members[i]) <= trusted) continue;
    std::size_t target = sets.find(id_of(stabilize(cl, members[i], +1)));
    orbits.at(target).hit = true;
    Orbit& src = orbits.at(sets.find(i));
    if (src.next && *src.next != target) throw std::logic_error("transverse stabilization is not well defined");
    src.next = target;
  }

  TransverseClassification tc{cl.cable, 0, {}, true, {}};
  std::optional<Int> top_sl;
  bool top_hit = false;
  for (const auto& [root, o] : orbits)
    if (o.common && (!top_sl || o.sl > *top_sl)) {
      top_sl = o.sl;
      top_hit = o.hit;
    }
  if (!top_sl) throw std::logic_error("class model has no common lineage");
  tc.max_sl = *top_sl;
  tc.branches.push_back({true, "top", *top_sl, top_hit, std::nullopt});

  for (const auto& [root, o] : orbits) {
    if (o.common || o.hit || o.top_tb <= trusted) continue;
    const auto& head = members[o.top_member];
    std::string origin = "?";
    if (auto* b = std::get_if<BranchClass>(&head)) origin = cl.generators.at(b->generator).label;
    std::size_t at = root;
    while (!orbits.at(at).common) {
      if (!orbits.at(at).next) throw std::logic_error("branch ran past the enumeration window");
      at = *orbits.at(at).next;
    }
    tc.branches.push_back({false, origin, o.sl, false, orbits.at(at).sl});
  }
  std::stable_sort(tc.branches.begin() + 1, tc.branches.end(), [](const auto& a, const auto& b) {
    if (a.sl_top != b.sl_top) return a.sl_top > b.sl_top;
    return a.origin < b.origin;
  });
  tc.simple = tc.branches.size() == 1;
  return tc;
}

TransverseClassification classify_transverse(const CableSpec& cable) {
  const TorusKnot& knot = cable.knot();
  Int w = width(knot);
  Int r = cable.r(), s = cable.s(), rs = r * s;
  Slope slope = cable.slope();
  RegionTag tag = locate(knot, slope);

  TransverseClassification tc{cable, max_sl(cable), {}, true, {}};
  tc.branches.push_back({true, "top", tc.max_sl, false, std::nullopt});

  if (tag.region == Region::TrefoilBand) {
    Int n = tag.index;
    Int merge = rs - s - r;
    for (Int j = 2; j <= n; ++j) tc.branches.push_back({false, "L^" + std::to_string(j) + "_+", rs + r - s, false, merge});
    if (slope != Slope(n, 1)) {
      Int d = std::abs((n + 1) * r - s);
      tc.branches.push_back({false, "K_+", rs + r - s - 2 * d, false, merge});
    }
  } else if (tag.region == Region::InfluenceUpper) {
    auto iv = influence_interval(knot, tag.index);
    Int top = rs + r - s * w;
    tc.branches.push_back({false, "K_+", top, false, top - 2 * intersect(slope, iv.e_a)});
  } else if (tag.region == Region::InfluenceLower) {
    Int n = tag.index;
    auto iv = influence_interval(knot, n);
    Int ia = intersect(slope, iv.e_a);
    Int ie = intersect(slope, iv.e);
    Int top = rs - ie - r * (n - 1);  // tb(K_+) - rot(K_+)
    tc.branches.push_back({false, "K_+", top, false, top - 2 * (ia - ie)});
    Int stated = rs + r - s * w;
    tc.notes.push_back("non-destabilizable branch taken at sl " + std::to_string(top) +
                       " from the K_+ data; the closed-form statement gives " + std::to_string(stated) +
                       " (difference 2*" + std::to_string(ie) + ")");
  }
  tc.simple = tc.branches.size() == 1;
  return tc;
}

Int count_transverse(const TransverseClassification& tc, Int sl) {
  if (sl % 2 == 0) return 0;
  Int count = 0;
  for (const auto& b : tc.branches) {
    if (b.top_chain) {
      count += sl <= b.sl_top;
    } else {
      Int merge = b.merge_sl.value_or(b.sl_top - 2);
      count += sl <= b.sl_top && sl > merge;
    }
  }
  return count;
}

bool QualReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.pass; });
}

QualSuite parse_suite(const std::string& name) {
  if (name == "qual1") return QualSuite::qual1;
  if (name == "qual2") return QualSuite::qual2;
  if (name == "qual4") return QualSuite::qual4;
  throw DomainError("unknown suite '" + name + "'");
}

std::string suite_name(QualSuite suite) {
  switch (suite) {
    case QualSuite::qual1: return "qual1";
    case QualSuite::qual2: return "qual2";
    case QualSuite::qual4: return "qual4";
  }
  return "?";
}

namespace {

struct Checker {
  std::vector<ClaimResult>& out;
  void operator()(std::string claim, bool pass, std::string detail = {}) {
    out.push_back({std::move(claim), pass, std::move(detail)});
  }
};

std::string str(Int v) { return std::to_string(v); }

bool destabilizes(const Classification& cl, const LegendrianClass& c) {
  Int tb = class_tb(cl, c), rot = class_rot(cl, c);
  for (int sign : {+1, -1})
    for (const auto& z : classes_at(cl, rot - sign, tb + 1))
      if (stabilize(cl, z, sign) == c) return true;
  return false;
}

std::size_t distinct(const std::vector<LegendrianClass>& v) {
  std::vector<LegendrianClass> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  return std::size_t(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Trefoil slope (kn + m(n-1)) / (k+m), strictly inside the band [n-1, n).
CableSpec band_slope_cable(const TorusKnot& knot, Int k, Int m, Int n) {
  return CableSpec(knot, k + m, k * n + m * (n - 1));
}

void verify_qual1(const TorusKnot& knot, Int k, Int m, Int n, QualReport& rep) {
  Checker check{rep.claims};
  CableSpec cable = band_slope_cable(knot, k, m, n);
  rep.cable = cable;
  auto cl = classify(cable);
  Int tbmax = cl.params.tb_max;
  Int peak_rot = cable.s() - cable.r();
  check("slope " + cable.slope().str() + " lies in band " + str(n - 1) + " off its integer point",
        cl.region == RegionTag{Region::TrefoilBand, n - 1} && !cl.integral_band);
  check("n-1 = " + str(n - 1) + " classes at the peak (rot " + str(peak_rot) + ", tb " + str(tbmax) + ")",
        count_classes(cl, peak_rot, tbmax) == n - 1, "found " + str(count_classes(cl, peak_rot, tbmax)));
  Int u = peak_rot + m, t = tbmax - m;
  auto here = classes_at(cl, u, t);
  check("n = " + str(n) + " classes at (rot " + str(u) + ", tb " + str(t) + ") = tb_max - m",
        Int(here.size()) == n, "found " + str(Int(here.size())));
  Int stuck = 0;
  for (const auto& c : here) stuck += !destabilizes(cl, c);
  check("exactly one of them does not destabilize", stuck == 1, "non-destabilizable: " + str(stuck));
  std::vector<LegendrianClass> level = here;
  bool apart = true;
  for (Int i = 1; i < k; ++i) {
    for (auto& c : level) c = stabilize(cl, c, +1);
    apart = apart && distinct(level) == here.size();
  }
  check("still " + str(n) + " distinct after each of the first k-1 = " + str(k - 1) + " positive stabilizations", apart);
  for (auto& c : level) c = stabilize(cl, c, +1);
  if (k == 0) level = here;
  check("one class after exactly k = " + str(k) + " positive stabilizations", distinct(level) == 1,
        "distinct: " + str(Int(distinct(level))));
}

void verify_qual2(const TorusKnot& knot, Int k, Int m, Int n, QualReport& rep) {
  Checker check{rep.claims};
  CableSpec cable = band_slope_cable(knot, k, m, n);
  rep.cable = cable;
  auto tc = quotient_transverse(classify(cable));
  Int p = k * (n - 1) + m * (n - 2);
  Int top = tc.max_sl;
  Int at_p = top - 2 * p;
  check("max sl " + str(top) + " (closed form " + str(max_sl(cable)) + ")", top == max_sl(cable));
  check("n-1 = " + str(n - 1) + " transverse classes at sl " + str(at_p), count_transverse(tc, at_p) == n - 1,
        "found " + str(count_transverse(tc, at_p)));
  Int heads_p = 0, heads_pm = 0;
  bool merges = true;
  Int merge_at = top - 2 * (p + m + k);
  for (const auto& b : tc.branches) {
    if (b.top_chain) continue;
    heads_p += b.sl_top == at_p && !b.destabilizable;
    heads_pm += b.sl_top == top - 2 * (p + m) && !b.destabilizable;
    merges = merges && b.merge_sl == merge_at;
  }
  check("n-2 = " + str(n - 2) + " of them are non-destabilizable", heads_p == n - 2, "found " + str(heads_p));
  check("one further non-destabilizable class at sl " + str(top - 2 * (p + m)), heads_pm == 1, "found " + str(heads_pm));
  check("every branch becomes isotopic to the stabilized top exactly at sl " + str(merge_at), merges);
  check("unique class at sl " + str(merge_at) + ", several at sl " + str(merge_at + 2),
        count_transverse(tc, merge_at) == 1 && count_transverse(tc, merge_at + 2) > 1);
}

void verify_qual4(const TorusKnot& knot, Int k, Int m, Int n, QualReport& rep) {
  Checker check{rep.claims};
  auto iv = influence_interval(knot, k);
  Slope slope = farey_combine(iv.e, iv.e_a, m, n);
  CableSpec cable(knot, slope.den(), slope.num());
  rep.cable = cable;
  auto cl = classify(cable);
  check("slope " + slope.str() + " = " + str(m) + "*e_k + " + str(n) + "*e_k^a lies in [e_k, e_k^a)",
        cl.region == RegionTag{Region::InfluenceUpper, k});
  Int i1 = intersect(slope, exceptional_slope(knot, 1));
  check("intersection with 1/w exceeds n", i1 > n, "intersection " + str(i1));
  check("intersection with e_k^a equals m", intersect(slope, iv.e_a) == m);
  auto tc = quotient_transverse(cl);
  std::vector<const TransverseBranch*> heads;
  for (const auto& b : tc.branches)
    if (!b.top_chain && !b.destabilizable) heads.push_back(&b);
  check("one non-destabilizable transverse class besides the top", heads.size() == 1, "found " + str(Int(heads.size())));
  if (heads.size() != 1) return;
  const auto& h = *heads.front();
  check("its sl " + str(h.sl_top) + " is at most max sl - 2n = " + str(tc.max_sl - 2 * n), h.sl_top <= tc.max_sl - 2 * n);
  check("it merges after exactly m = " + str(m) + " stabilizations", h.merge_sl && (h.sl_top - *h.merge_sl) / 2 == m,
        h.merge_sl ? "merge at sl " + str(*h.merge_sl) : "never merges");
  bool two = true;
  for (Int i = 0; i < m; ++i) two = two && count_transverse(tc, h.sl_top - 2 * i) == 2;
  check("two classes at each sl until then, one after", two && count_transverse(tc, h.sl_top - 2 * m) == 1);
}

}  // namespace

QualReport verify_qualitative(const TorusKnot& knot, QualSuite suite, Int k, Int m, Int n) {
  if (k < 1 || m < 1 || n < 1) throw DomainError("k, m, n must be positive");
  switch (suite) {
    case QualSuite::qual1:
    case QualSuite::qual2:
      if (!knot.is_trefoil()) throw DomainError(suite_name(suite) + " concerns the (2,3) torus knot");
      if (std::gcd(k, m) != 1) throw DomainError("needs gcd(k, m) = 1");
      if (suite == QualSuite::qual1 && n < 2) throw DomainError("qual1 needs n > 1");
      if (suite == QualSuite::qual2 && n < 3) throw DomainError("qual2 needs n > 2");
      break;
    case QualSuite::qual4:
      if (knot.is_trefoil()) throw DomainError("qual4 concerns torus knots other than (2,3)");
      if (!is_exceptional_index(knot, k)) throw DomainError("qual4 needs k > 1 with gcd(k, pq-p-q) = 1");
      if (std::gcd(m, n) != 1) throw DomainError("needs gcd(m, n) = 1");
      break;
  }
  QualReport rep{suite, CableSpec(knot, 1, 2), {}};
  switch (suite) {
    case QualSuite::qual1: verify_qual1(knot, k, m, n, rep); break;
    case QualSuite::qual2: verify_qual2(knot, k, m, n, rep); break;
    case QualSuite::qual4: verify_qual4(knot, k, m, n, rep); break;
  }
  return rep;
}

}  // namespace cabling
