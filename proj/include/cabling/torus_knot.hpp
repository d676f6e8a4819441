#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cabling/slope.hpp"

namespace cabling {

// Positive (p,q)-torus knot with q > p > 1 and gcd(p,q) = 1.
class TorusKnot {
public:
  TorusKnot(Int p, Int q);

  Int p() const { return p_; }
  Int q() const { return q_; }
  bool is_trefoil() const { return p_ == 2 && q_ == 3; }

  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;

private:
  Int p_;
  Int q_;
};

Int width(const TorusKnot& knot);
Slope exceptional_slope(const TorusKnot& knot, Int k);
bool is_exceptional_index(const TorusKnot& knot, Int n);
std::vector<Int> exceptional_indices(const TorusKnot& knot, Int bound);

struct InfluenceInterval {
  Int index;
  Slope e;
  Slope e_a;
  Slope e_c;

  bool in_J(const Slope& x) const;  // (e_c, e_a)
  bool in_I(const Slope& x) const;  // [e, e_a)
};

InfluenceInterval influence_interval(const TorusKnot& knot, Int n);

enum class Region { LowRange, SimpleMid, Negative, InfluenceUpper, InfluenceLower, TrefoilBand };

struct RegionTag {
  Region region;
  Int index = 0;  // n for the influence and band tags
  friend bool operator==(const RegionTag&, const RegionTag&) = default;
};

std::string region_name(Region region);

RegionTag locate(const TorusKnot& knot, const Slope& slope);

struct NonThickenableProfile {
  Int n_k;
  Int dividing_curves;
  Int torus_count;
};

NonThickenableProfile nonthickenable_profile(const TorusKnot& knot, Int k);

// N_k^sign; sign is +1 or -1, and 0 for N_1.
struct ContainingTorus {
  Int k;
  int sign;
};

enum class Thickening { ThickensToN1, ThickensToNk, NonThickenable };

struct ThickeningOutcome {
  Thickening kind;
  Int k = 1;  // the stopping N_k for ThickensToNk
  friend bool operator==(const ThickeningOutcome&, const ThickeningOutcome&) = default;
};

ThickeningOutcome thickening_outcome(const TorusKnot& knot, const Slope& dividing, Int curve_pairs,
                                     std::optional<ContainingTorus> inside);

struct CensusRecord {
  Int torus_count;
  Int standard_count;
  Int dividing_curve_pairs = 1;
  std::string note;         // which case of the census applies
  Int standard_tb;          // tb of the Legendrian whose neighbourhood they are or thicken to
};

CensusRecord tori_census(const TorusKnot& knot, const Slope& slope);

}  // namespace cabling
