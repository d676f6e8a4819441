#include "cabling/torus_knot.hpp"

#include <numeric>

#include "cabling/farey.hpp"

namespace cabling {

TorusKnot::TorusKnot(Int p, Int q) : p_(p), q_(q) {
  if (!(q > p && p > 1) || std::gcd(p, q) != 1)
    throw DomainError("torus knot needs q > p > 1 with gcd(p,q) = 1, got (" + std::to_string(p) + "," +
                      std::to_string(q) + ")");
}

Int width(const TorusKnot& knot) { return knot.p() * knot.q() - knot.p() - knot.q(); }

Slope exceptional_slope(const TorusKnot& knot, Int k) {
  if (k < 1) throw DomainError("exceptional slope index must be positive");
  return Slope(k, width(knot));
}

bool is_exceptional_index(const TorusKnot& knot, Int n) { return n > 1 && std::gcd(n, width(knot)) == 1; }

std::vector<Int> exceptional_indices(const TorusKnot& knot, Int bound) {
  std::vector<Int> out;
  for (Int n = 2; n <= bound; ++n)
    if (is_exceptional_index(knot, n)) out.push_back(n);
  return out;
}

bool InfluenceInterval::in_J(const Slope& x) const { return x.is_positive() && e_c < x && x < e_a; }
bool InfluenceInterval::in_I(const Slope& x) const { return x.is_positive() && e <= x && x < e_a; }

InfluenceInterval influence_interval(const TorusKnot& knot, Int n) {
  Slope e = exceptional_slope(knot, n);
  auto nb = neighbors(e);
  return {n, e, nb.upper, nb.lower};
}

std::string region_name(Region region) {
  switch (region) {
    case Region::LowRange: return "low_range";
    case Region::SimpleMid: return "simple_mid";
    case Region::Negative: return "negative";
    case Region::InfluenceUpper: return "influence_upper";
    case Region::InfluenceLower: return "influence_lower";
    case Region::TrefoilBand: return "trefoil_band";
  }
  return "unknown";
}

RegionTag locate(const TorusKnot& knot, const Slope& slope) {
  if (slope.is_zero() || slope.is_infinite()) throw DomainError("cable slope must be finite and nonzero");
  if (slope.is_negative()) return {Region::Negative};
  if (knot.is_trefoil()) {
    if (slope >= Slope(1, 1)) return {Region::TrefoilBand, slope.num() / slope.den()};
    return {Region::LowRange};
  }
  Int w = width(knot);
  if (slope <= exceptional_slope(knot, 1)) return {Region::LowRange};
  // Every J_n containing the slope has e_n - 1 < slope.
  Int last = w * (slope.num() / slope.den() + 2);
  for (Int n = 2; n <= last; ++n) {
    if (!is_exceptional_index(knot, n)) continue;
    auto iv = influence_interval(knot, n);
    if (iv.in_I(slope)) return {Region::InfluenceUpper, n};
    if (iv.in_J(slope)) return {Region::InfluenceLower, n};
  }
  return {Region::SimpleMid};
}

NonThickenableProfile nonthickenable_profile(const TorusKnot& knot, Int k) {
  if (k < 1) throw DomainError("index must be positive");
  Int nk = std::gcd(width(knot), k);
  return {nk, 2 * nk, k > 1 ? 2 : 1};
}

namespace {

// Indices k (exceptional, or any k >= 2 for the trefoil) whose I_k holds x.
std::vector<Int> covering_indices(const TorusKnot& knot, const Slope& x) {
  std::vector<Int> out;
  if (!x.is_positive()) return out;
  Int last = width(knot) * (x.num() / x.den() + 2);
  for (Int k = 2; k <= last; ++k)
    if (is_exceptional_index(knot, k) && influence_interval(knot, k).in_I(x)) out.push_back(k);
  return out;
}

}  // namespace

ThickeningOutcome thickening_outcome(const TorusKnot& knot, const Slope& dividing, Int curve_pairs,
                                     std::optional<ContainingTorus> inside) {
  if (curve_pairs < 1) throw DomainError("curve_pairs must be positive");
  if (dividing.is_zero()) throw DomainError("dividing slope 0 is the meridian");
  Slope e1 = exceptional_slope(knot, 1);
  if (dividing.is_positive() && dividing < e1) throw DomainError("no solid torus has a slope below e_1");

  if (!inside) {
    if (dividing == e1 && curve_pairs == 1) return {Thickening::NonThickenable};
    if (!covering_indices(knot, dividing).empty())
      throw DomainError("outcome depends on which N_k contains the torus; supply it");
    if (dividing.is_positive()) {
      Slope ratio(dividing.num() * width(knot), dividing.den());
      if (ratio.den() == 1) {
        Int k = ratio.num();
        if (k > 1 && curve_pairs == nonthickenable_profile(knot, k).n_k)
          throw DomainError("torus may be N_k itself; supply the containing torus");
      }
    }
    return {Thickening::ThickensToN1};
  }

  Int k = inside->k;
  if (k < 1) throw DomainError("containing index must be positive");
  if ((k == 1) != (inside->sign == 0) || (inside->sign < -1 || inside->sign > 1))
    throw DomainError("N_1 carries no sign and N_k for k > 1 needs one");
  Slope ek = exceptional_slope(knot, k);
  // Slopes inside N_k run counterclockwise from e_k toward the meridian.
  if (dividing.is_positive() && dividing < ek)
    throw DomainError("slope " + dividing.str() + " cannot sit inside N_" + std::to_string(k));
  Int nk = nonthickenable_profile(knot, k).n_k;
  if (dividing == ek) {
    if (curve_pairs >= nk) return {Thickening::NonThickenable, k};
    return {Thickening::ThickensToN1};
  }
  if (k == 1 || !is_exceptional_index(knot, k)) return {Thickening::ThickensToN1};
  if (influence_interval(knot, k).in_I(dividing)) return {Thickening::ThickensToNk, k};
  return {Thickening::ThickensToN1};
}

CensusRecord tori_census(const TorusKnot& knot, const Slope& s) {
  Int w = width(knot);
  if (s.is_zero() || s.is_infinite()) throw DomainError("census needs a finite nonzero slope");

  auto reciprocal = [&]() -> std::optional<Int> {
    if (s.num() == 1 || s.num() == -1) return s.num() * s.den();
    return std::nullopt;
  };

  if (s.is_negative()) {
    if (auto n = reciprocal()) return {w - *n + 1, w - *n + 1, 1, "negative reciprocal", *n};
    // 1/(n+1) < s < 1/n with n < 0, i.e. n = floor(1/s).
    Int n = -((s.den() + (-s.num()) - 1) / (-s.num()));
    Int tb = n + 1;
    Int count = 2 * (w - tb + 1);
    return {count, count, 1, "3", tb};
  }

  if (knot.is_trefoil()) {
    if (s <= Slope(1, 1)) throw DomainError("trefoil census covers slopes above 1 and negative slopes");
    Int n = s.num() / s.den();
    return {2 * n, 2, 1, "1", 1};
  }

  if (s < exceptional_slope(knot, 1))
    throw DomainError("census does not cover slopes in (0, e_1) that are not reciprocals of integers");
  if (auto n = reciprocal()) return {w - *n + 1, w - *n + 1, 1, "2c", *n};
  // 1/n < s < 1/(n-1): n = floor(1/s) + 1.
  Int n = s.den() / s.num() + 1;
  Int base = 2 * (w - n + 1);
  if (!covering_indices(knot, s).empty()) return {base + 2, base, 1, "2b", n};
  return {base, base, 1, "2a", n};
}

}  // namespace cabling
