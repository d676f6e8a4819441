#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cabling {

using Int = std::int64_t;

// Raised for inputs outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A slope s/r on a torus: the class s[λ] + r[μ], written num/den.
// Canonical form: gcd 1, den >= 0, sign on num, infinity stored as 1/0.
class Slope {
public:
  Slope(Int num, Int den);

  static Slope infinity() { return Slope(1, 0); }
  static Slope parse(std::string_view text);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_infinite() const { return den_ == 0; }
  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return den_ != 0 && num_ > 0; }
  bool is_negative() const { return den_ != 0 && num_ < 0; }

  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  // Extended-real order, infinity on top.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

private:
  Int num_;
  Int den_;
};

Slope normalize(Int num, Int den);

// Position on the boundary of the Farey disk: 0 at angle 0, positive slopes
// counterclockwise up to infinity at angle pi, then negatives back to 0.
std::strong_ordering circular_compare(const Slope& a, const Slope& b);

// x lies on the closed counterclockwise arc from `from` to `to`.
bool on_ccw_arc(const Slope& from, const Slope& x, const Slope& to);

// x is met strictly before y when travelling counterclockwise from origin
// (origin itself counts as the start).
bool ccw_before(const Slope& origin, const Slope& x, const Slope& y);

}  // namespace cabling
