#include "cabling/bypass.hpp"

#include <cstdlib>
#include <optional>

namespace cabling {

namespace {

struct Vec {
  Int num;
  Int den;
};

Int det(Vec a, Vec b) { return a.num * b.den - b.num * a.den; }

Int floor_div(Int a, Int b) {
  Int q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// x, y with a*x + b*y = gcd(a, b).
void ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = floor_div(a, b);
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (a < 0) {
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
}

void check(const TorusState& state) {
  if (state.curve_pairs != 1) throw DomainError("bypass slope rule needs exactly two dividing curves");
  if (state.ruling == state.dividing) throw DomainError("ruling slope equals dividing slope");
}

// Of two candidates, the one reached first going ccw (front) or cw (back) from r.
bool preferred(const Slope& r, BypassSide side, const Slope& x, const Slope& y) {
  return side == BypassSide::front ? ccw_before(r, x, y) : ccw_before(r, y, x);
}

bool on_side_arc(const TorusState& st, BypassSide side, const Slope& x) {
  return side == BypassSide::front ? on_ccw_arc(st.ruling, x, st.dividing)
                                   : on_ccw_arc(st.dividing, x, st.ruling);
}

}  // namespace

Slope attach_bypass(const TorusState& state, BypassSide side) {
  check(state);
  Vec s{state.dividing.num(), state.dividing.den()};
  Vec r{state.ruling.num(), state.ruling.den()};
  // w0 with det(s, w0) = 1; the neighbours of s are w0 + t s, monotone in t
  // around the circle.
  Int x = 0, y = 0;
  ext_gcd(s.num, s.den, x, y);
  Vec w0{-y, x};
  Int alpha = det(s, r);
  Int beta = det(r, w0);
  // r sits at parameter beta / alpha.
  if (alpha < 0) {
    alpha = -alpha;
    beta = -beta;
  }
  Int lo = floor_div(beta, alpha);
  Int hi = lo + 1;
  if (lo * alpha == beta) {
    lo -= 1;
    hi = lo + 2;
  }
  auto at = [&](Int t) { return Slope(w0.num + t * s.num, w0.den + t * s.den); };
  Slope a = at(lo);
  Slope b = at(hi);
  Slope best = preferred(state.ruling, side, a, b) ? a : b;
  if (!on_side_arc(state, side, best)) throw DomainError("bypass target left the attachment arc");
  return best;
}

Slope attach_bypass_oracle(const TorusState& state, BypassSide side, Int den_bound) {
  check(state);
  const Slope& s = state.dividing;
  const Slope& r = state.ruling;
  std::optional<Slope> best;
  auto consider = [&](const Slope& x) {
    if (x == r || x == s) return;
    if (std::abs(x.num() * s.den() - s.num() * x.den()) != 1) return;
    if (!on_side_arc(state, side, x)) return;
    if (!best || preferred(r, side, x, *best)) best = x;
  };
  consider(Slope::infinity());
  for (Int d = 1; d <= den_bound; ++d)
    for (Int c = -den_bound; c <= den_bound; ++c)
      if (std::abs(c * s.den() - s.num() * d) == 1) consider(Slope(c, d));
  if (!best) throw DomainError("no bypass target within the search bound");
  return *best;
}

}  // namespace cabling
