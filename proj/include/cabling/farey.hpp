#pragma once

#include <utility>
#include <vector>

#include "cabling/slope.hpp"

namespace cabling {

// Minus-sign continued fraction a0 - 1/(a1 - 1/(... - 1/an)).
struct ContinuedFraction {
  std::vector<Int> coeffs;
  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

ContinuedFraction cf_expand(const Slope& u);
Slope cf_eval(const ContinuedFraction& cf);

struct FareyNeighbors {
  Slope upper;  // u^a
  Slope lower;  // u^c
  friend bool operator==(const FareyNeighbors&, const FareyNeighbors&) = default;
};

FareyNeighbors neighbors(const Slope& u);
FareyNeighbors neighbors_oracle(const Slope& u, Int den_bound);

Slope mediant(const Slope& a, const Slope& b);
Slope farey_combine(const Slope& a, const Slope& b, Int m, Int n);

Int intersect(const Slope& a, const Slope& b);
bool is_edge(const Slope& a, const Slope& b);

}  // namespace cabling
