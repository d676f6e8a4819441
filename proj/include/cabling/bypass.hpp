#pragma once

#include "cabling/slope.hpp"

namespace cabling {

enum class BypassSide { front, back };

// Standard convex torus: dividing slope, ruling slope, and half the number
// of dividing curves.
struct TorusState {
  Slope dividing;
  Slope ruling;
  Int curve_pairs = 1;
};

// Dividing slope after attaching a bypass along a ruling curve. The ruling
// slope itself is never returned, even when it shares an edge with the
// dividing slope.
Slope attach_bypass(const TorusState& state, BypassSide side);

// Same answer by scanning every slope with |num|, den <= den_bound.
Slope attach_bypass_oracle(const TorusState& state, BypassSide side, Int den_bound);

}  // namespace cabling
