#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cabling/slope.hpp"
#include "cabling/torus_knot.hpp"

namespace cabling {

// The (r,s)-cable of a positive torus knot. Signs are moved onto r so that
// s >= 1. An (r,1)-curve is isotopic to the torus knot itself; it is accepted
// only when r >= pq-p-q, where the cable formulas reduce to the knot's own.
class CableSpec {
public:
  CableSpec(TorusKnot knot, Int r, Int s);

  const TorusKnot& knot() const { return knot_; }
  Int r() const { return r_; }
  Int s() const { return s_; }
  Slope slope() const { return Slope(s_, r_); }

  friend bool operator==(const CableSpec&, const CableSpec&) = default;

private:
  TorusKnot knot_;
  Int r_;
  Int s_;
};

enum class GeneratorKind { SimplePeak, ProtectedL, ProtectedK };

struct LegendrianGenerator {
  GeneratorKind kind;
  Int index;             // ordinal for peaks, j for L^j
  int sign;              // +1 / -1; 0 for peaks outside the trefoil band
  std::string label;
  Int tb;
  Int rot;
  std::optional<Int> bound;
  // False only for a generator below tb_max that admits no destabilization.
  bool destabilizable;

  bool is_branch() const { return kind != GeneratorKind::SimplePeak; }
  // Direction of the protected stabilizations.
  int sigma() const { return is_branch() ? sign : 0; }
};

struct CommonClass {
  Int rot;
  Int tb;
  friend auto operator<=>(const CommonClass&, const CommonClass&) = default;
};

// S_sigma^x S_{-sigma}^y of a protected generator, x <= bound.
struct BranchClass {
  std::size_t generator;
  Int x;
  Int y;
  friend auto operator<=>(const BranchClass&, const BranchClass&) = default;
};

using LegendrianClass = std::variant<CommonClass, BranchClass>;

struct Parameters {
  Int w;
  std::optional<Int> n;
  std::optional<Int> k;
  std::optional<Slope> e_n;
  std::optional<Slope> e_n_a;
  std::optional<Slope> e_n_c;
  std::optional<Int> c;
  std::optional<Int> c_prime;
  Int tb_max;
};

struct Classification {
  CableSpec cable;
  RegionTag region;
  bool integral_band = false;  // trefoil band with s/r = n, no K generators
  Parameters params;
  std::vector<LegendrianGenerator> generators;
  bool simple;

  std::string case_name() const;
};

Int max_tb(const CableSpec& cable);
Int bennequin_bound(const CableSpec& cable);
Classification classify(const CableSpec& cable);
std::vector<Int> peak_rotations(const CableSpec& cable);

Int class_tb(const Classification& cl, const LegendrianClass& c);
Int class_rot(const Classification& cl, const LegendrianClass& c);
bool is_valid(const Classification& cl, const LegendrianClass& c);

LegendrianClass generator_class(const Classification& cl, std::size_t generator);
LegendrianClass stabilize(const Classification& cl, const LegendrianClass& c, int sign);
bool same_class(const Classification& cl, const LegendrianClass& a, const LegendrianClass& b);

bool common_reachable(const Classification& cl, Int rot, Int tb);
std::vector<LegendrianClass> classes_at(const Classification& cl, Int rot, Int tb);
Int count_classes(const Classification& cl, Int rot, Int tb);

// Every class has |rot| within this distance of tb_max - tb plus the widest generator.
Int rot_reach(const Classification& cl, Int tb);

struct MountainRange {
  Int tb_floor;
  Int tb_max;
  std::map<std::pair<Int, Int>, Int> counts;  // (rot, tb) -> count, nonzero only

  Int at(Int rot, Int tb) const;
};

MountainRange mountain_range(const Classification& cl, Int tb_floor);

Int divide_tb(Int r, Int s);
Int ruling_tb(Int r, Int s, const Slope& dividing, Int curve_pairs);
Int cable_rot(Int r, Int s, Int rot_meridian_disk, Int rot_seifert);

}  // namespace cabling
