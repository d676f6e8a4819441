#include "cabling/legendrian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "cabling/farey.hpp"

namespace cabling {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

bool odd(Int v) { return (v % 2) != 0; }

std::string signed_label(const std::string& base, int sign) { return base + (sign > 0 ? "_+" : "_-"); }

// Rotation numbers realised at tb = rs by the simple family outside the
// trefoil band: the stated sets for negative and intermediate slopes.
std::set<Int> family_rotations(const CableSpec& cable, const RegionTag& tag, std::optional<Int>& k_out) {
  Int w = width(cable.knot());
  Int r = cable.r(), s = cable.s();
  std::set<Int> out;
  if (tag.region == Region::LowRange) {
    out.insert(0);
    return out;
  }
  if (tag.region == Region::Negative) {
    // -k-1 < r/s < -k
    Int k = floor_div(-r, s);
    k_out = k;
    for (Int j = w + k; j >= -(w + k); j -= 2) {
      Int v = r + s * (k + j);
      out.insert(v);
      out.insert(-v);
    }
    return out;
  }
  // k-1 < r/s < k
  Int k = ceil_div(r, s);
  k_out = k;
  for (Int l = w - k; l >= -(w - k); l -= 2) {
    Int v = r + s * (-k + l);
    out.insert(v);
    out.insert(-v);
  }
  return out;
}

}  // namespace

CableSpec::CableSpec(TorusKnot knot, Int r, Int s) : knot_(knot), r_(r), s_(s) {
  if (s_ < 0) {
    r_ = -r_;
    s_ = -s_;
  }
  if (r_ == 0) throw DomainError("cable coefficient r must be nonzero");
  if (s_ == 0) throw DomainError("cable coefficient s must be nonzero");
  if (std::gcd(r_, s_) != 1) throw DomainError("cable coefficients must be coprime");
  if (s_ == 1 && r_ < width(knot_))
    throw DomainError("an (r,1)-cable is the torus knot itself; use r >= pq-p-q");
}

std::string Classification::case_name() const {
  if (region.region == Region::TrefoilBand && integral_band) return "trefoil_band_integral";
  return region_name(region.region);
}

Int bennequin_bound(const CableSpec& cable) {
  return cable.r() * cable.s() - cable.r() + cable.s() * width(cable.knot());
}

Int max_tb(const CableSpec& cable) {
  if (locate(cable.knot(), cable.slope()).region == Region::LowRange) return bennequin_bound(cable);
  return cable.r() * cable.s();
}

Classification classify(const CableSpec& cable) {
  const TorusKnot& knot = cable.knot();
  Int w = width(knot);
  Int r = cable.r(), s = cable.s();
  Slope slope = cable.slope();
  RegionTag tag = locate(knot, slope);

  Classification cl{cable, tag, false, Parameters{w, {}, {}, {}, {}, {}, {}, {}, max_tb(cable)}, {}, true};
  auto& gens = cl.generators;
  auto& P = cl.params;

  auto add_peak = [&](Int rot, int sign, std::string label) {
    gens.push_back({GeneratorKind::SimplePeak, Int(gens.size()), sign, std::move(label), P.tb_max, rot, {}, true});
  };

  if (tag.region == Region::TrefoilBand) {
    Int n = tag.index;
    P.n = n;
    auto iv = influence_interval(knot, n);
    P.e_n = iv.e;
    P.e_n_a = iv.e_a;
    P.e_n_c = iv.e_c;
    P.c = r - 1;
    Int rs = r * s;
    Int peak_rot = s - r;
    add_peak(peak_rot, +1, "L^1_+");
    add_peak(-peak_rot, -1, "L^1_-");
    for (Int j = 2; j <= n; ++j)
      for (int sign : {+1, -1})
        gens.push_back({GeneratorKind::ProtectedL, j, sign, signed_label("L^" + std::to_string(j), sign), rs,
                        sign * peak_rot, r - 1, true});
    cl.integral_band = (slope == Slope(n, 1));
    if (!cl.integral_band) {
      Int d = std::abs(r * (n + 1) - s);
      Int cp = r - d - 1;
      P.c_prime = cp;
      for (int sign : {+1, -1})
        gens.push_back({GeneratorKind::ProtectedK, 0, sign, signed_label("K", sign), rs - d,
                        sign * (s - r + d), cp, false});
    }
  } else {
    std::optional<Int> k;
    auto rots = family_rotations(cable, tag, k);
    P.k = k;
    for (Int rot : rots) add_peak(rot, 0, tag.region == Region::LowRange ? "L" : "L_" + std::to_string(rot));
    if (tag.region == Region::InfluenceUpper || tag.region == Region::InfluenceLower) {
      Int n = tag.index;
      auto iv = influence_interval(knot, n);
      P.n = n;
      P.e_n = iv.e;
      P.e_n_a = iv.e_a;
      P.e_n_c = iv.e_c;
      Int ia = intersect(slope, iv.e_a);
      if (tag.region == Region::InfluenceUpper) {
        P.c = ia - 1;
        for (int sign : {+1, -1})
          gens.push_back({GeneratorKind::ProtectedK, 0, sign, signed_label("K", sign), r * s, sign * (s * w - r),
                          ia - 1, true});
      } else {
        Int ie = intersect(slope, iv.e);
        P.c = ia - ie - 1;
        for (int sign : {+1, -1})
          gens.push_back({GeneratorKind::ProtectedK, 0, sign, signed_label("K", sign), r * s - ie,
                          sign * r * (n - 1), ia - ie - 1, false});
      }
    }
  }
  cl.simple = std::none_of(gens.begin(), gens.end(), [](const auto& g) { return g.is_branch(); });
  return cl;
}

std::vector<Int> peak_rotations(const CableSpec& cable) {
  auto cl = classify(cable);
  std::vector<Int> out;
  for (Int rot = -rot_reach(cl, cl.params.tb_max); rot <= rot_reach(cl, cl.params.tb_max); ++rot)
    for (Int i = 0; i < count_classes(cl, rot, cl.params.tb_max); ++i) out.push_back(rot);
  return out;
}

Int class_tb(const Classification& cl, const LegendrianClass& c) {
  if (auto* cc = std::get_if<CommonClass>(&c)) return cc->tb;
  const auto& b = std::get<BranchClass>(c);
  return cl.generators.at(b.generator).tb - b.x - b.y;
}

Int class_rot(const Classification& cl, const LegendrianClass& c) {
  if (auto* cc = std::get_if<CommonClass>(&c)) return cc->rot;
  const auto& b = std::get<BranchClass>(c);
  const auto& g = cl.generators.at(b.generator);
  return g.rot + g.sigma() * (b.x - b.y);
}

bool is_valid(const Classification& cl, const LegendrianClass& c) {
  if (auto* cc = std::get_if<CommonClass>(&c)) return common_reachable(cl, cc->rot, cc->tb);
  const auto& b = std::get<BranchClass>(c);
  if (b.generator >= cl.generators.size()) return false;
  const auto& g = cl.generators[b.generator];
  return g.is_branch() && b.x >= 0 && b.y >= 0 && b.x <= *g.bound;
}

LegendrianClass generator_class(const Classification& cl, std::size_t generator) {
  const auto& g = cl.generators.at(generator);
  if (!g.is_branch()) return CommonClass{g.rot, g.tb};
  return BranchClass{generator, 0, 0};
}

LegendrianClass stabilize(const Classification& cl, const LegendrianClass& c, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("stabilization sign must be +1 or -1");
  if (auto* cc = std::get_if<CommonClass>(&c)) return CommonClass{cc->rot + sign, cc->tb - 1};
  BranchClass b = std::get<BranchClass>(c);
  const auto& g = cl.generators.at(b.generator);
  if (sign == g.sigma())
    ++b.x;
  else
    ++b.y;
  if (b.x > *g.bound) return CommonClass{class_rot(cl, b), class_tb(cl, b)};
  return b;
}

bool same_class(const Classification&, const LegendrianClass& a, const LegendrianClass& b) { return a == b; }

namespace {

// The (x, y) word from generator g reaching (rot, tb), if it is a valid word.
std::optional<std::pair<Int, Int>> word_to(const LegendrianGenerator& g, Int rot, Int tb) {
  Int depth = g.tb - tb;
  if (depth < 0) return std::nullopt;
  Int twice_x = depth + g.sigma() * (rot - g.rot);
  if (odd(twice_x)) return std::nullopt;
  Int x = twice_x / 2;
  Int y = depth - x;
  if (x < 0 || y < 0) return std::nullopt;
  return std::pair{x, y};
}

}  // namespace

bool common_reachable(const Classification& cl, Int rot, Int tb) {
  for (const auto& g : cl.generators) {
    Int depth = g.tb - tb;
    if (depth < 0) continue;
    if (!g.is_branch()) {
      if (std::abs(rot - g.rot) <= depth && !odd(depth - (rot - g.rot))) return true;
      continue;
    }
    if (auto xy = word_to(g, rot, tb); xy && xy->first > *g.bound) return true;
  }
  return false;
}

std::vector<LegendrianClass> classes_at(const Classification& cl, Int rot, Int tb) {
  std::vector<LegendrianClass> out;
  if (!odd(tb + rot)) return out;
  if (common_reachable(cl, rot, tb)) out.emplace_back(CommonClass{rot, tb});
  for (std::size_t i = 0; i < cl.generators.size(); ++i) {
    const auto& g = cl.generators[i];
    if (!g.is_branch()) continue;
    if (auto xy = word_to(g, rot, tb); xy && xy->first <= *g.bound) out.emplace_back(BranchClass{i, xy->first, xy->second});
  }
  return out;
}

Int count_classes(const Classification& cl, Int rot, Int tb) { return Int(classes_at(cl, rot, tb).size()); }

Int rot_reach(const Classification& cl, Int tb) {
  Int widest = 0;
  Int top = cl.params.tb_max;
  for (const auto& g : cl.generators) widest = std::max(widest, std::abs(g.rot) + (top - g.tb));
  return widest + (top - tb);
}

Int MountainRange::at(Int rot, Int tb) const {
  auto it = counts.find({rot, tb});
  return it == counts.end() ? 0 : it->second;
}

MountainRange mountain_range(const Classification& cl, Int tb_floor) {
  Int top = cl.params.tb_max;
  if (tb_floor > top) throw DomainError("tb floor lies above the maximal Thurston-Bennequin invariant");
  MountainRange mr{tb_floor, top, {}};
  for (Int tb = top; tb >= tb_floor; --tb) {
    Int reach = rot_reach(cl, tb);
    for (Int rot = -reach; rot <= reach; ++rot)
      if (Int n = count_classes(cl, rot, tb); n > 0) mr.counts[{rot, tb}] = n;
  }
  return mr;
}

Int divide_tb(Int r, Int s) {
  if (std::gcd(r, s) != 1) throw DomainError("cable coefficients must be coprime");
  return r * s;
}

Int ruling_tb(Int r, Int s, const Slope& dividing, Int curve_pairs) {
  if (std::gcd(r, s) != 1) throw DomainError("cable coefficients must be coprime");
  Slope curve(s, r);
  if (curve == dividing) throw DomainError("a ruling curve cannot have the dividing slope");
  if (curve_pairs < 1) throw DomainError("curve_pairs must be positive");
  return r * s - curve_pairs * intersect(curve, dividing);
}

Int cable_rot(Int r, Int s, Int rot_meridian_disk, Int rot_seifert) { return r * rot_meridian_disk + s * rot_seifert; }

}  // namespace cabling
