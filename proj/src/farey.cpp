#include "cabling/farey.hpp"

#include <cstdlib>
#include <optional>

namespace cabling {

namespace {

Int cross(const Slope& a, const Slope& b) { return a.num() * b.den() - b.num() * a.den(); }

void require_positive_finite(const Slope& u, const char* what) {
  if (!u.is_positive()) throw DomainError(std::string(what) + " needs a finite positive slope, got " + u.str());
}

Int ceil_div(Int a, Int b) {
  Int q = a / b;
  return (a % b != 0 && ((a < 0) == (b < 0))) ? q + 1 : q;
}

}  // namespace

ContinuedFraction cf_expand(const Slope& u) {
  require_positive_finite(u, "cf_expand");
  ContinuedFraction cf;
  Int p = u.num();
  Int q = u.den();
  while (true) {
    Int a = ceil_div(p, q);
    cf.coeffs.push_back(a);
    Int rem = a * q - p;  // a - p/q = rem/q
    if (rem == 0) break;
    p = q;
    q = rem;
  }
  return cf;
}

Slope cf_eval(const ContinuedFraction& cf) {
  const auto& a = cf.coeffs;
  if (a.empty()) throw DomainError("empty continued fraction");
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if ((i == 0 && a[i] < 1) || (i > 0 && a[i] < 2))
      throw DomainError("continued fraction coefficient out of range");
  }
  if (a.back() < 0)
    throw DomainError("continued fraction coefficient out of range");
  // Projective evaluation so that a transient trailing 0 passes through infinity.
  Int num = a.back();
  Int den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    Int next_num = a[i] * num - den;
    den = num;
    num = next_num;
  }
  return Slope(num, den);
}

FareyNeighbors neighbors(const Slope& u) {
  require_positive_finite(u, "neighbors");
  auto cf = cf_expand(u);
  Slope upper = Slope::infinity();
  if (cf.coeffs.size() > 1) {
    cf.coeffs.pop_back();
    upper = cf_eval(cf);
  }
  Slope lower(u.num() - upper.num(), u.den() - upper.den());
  return {upper, lower};
}

FareyNeighbors neighbors_oracle(const Slope& u, Int den_bound) {
  require_positive_finite(u, "neighbors_oracle");
  if (den_bound < u.den()) throw DomainError("den_bound below the denominator of u");
  std::optional<Slope> above;
  std::optional<Slope> below;
  auto consider = [&](const Slope& x) {
    if (std::abs(cross(u, x)) != 1) return;
    if (x > u && (!above || x > *above)) above = x;
    if (x < u && (!below || x < *below)) below = x;
  };
  consider(Slope::infinity());
  for (Int d = 1; d <= den_bound; ++d) {
    // Any slope sharing an edge with u is within distance 1 of it.
    Int centre = (u.num() * d) / u.den();
    // An edge with u forces gcd(c, d) = 1, so test it before building a slope.
    for (Int c = centre - d - 1; c <= centre + d + 1; ++c)
      if (std::abs(c * u.den() - u.num() * d) == 1) consider(Slope(c, d));
  }
  if (!above || !below) throw DomainError("no Farey neighbors within the bound");
  return {*above, *below};
}

Slope mediant(const Slope& a, const Slope& b) {
  Int num = a.num() + b.num();
  Int den = a.den() + b.den();
  if (num == 0 && den == 0) throw DomainError("mediant of opposite slopes is undefined");
  return Slope(num, den);
}

Slope farey_combine(const Slope& a, const Slope& b, Int m, Int n) {
  if (m < 1 || n < 1) throw DomainError("farey_combine weights must be positive");
  if (!is_edge(a, b)) throw DomainError(a.str() + " and " + b.str() + " do not share a Farey edge");
  return Slope(m * a.num() + n * b.num(), m * a.den() + n * b.den());
}

Int intersect(const Slope& a, const Slope& b) { return std::abs(cross(a, b)); }

bool is_edge(const Slope& a, const Slope& b) { return intersect(a, b) == 1; }

}  // namespace cabling
