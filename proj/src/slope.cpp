#include "cabling/slope.hpp"

#include <charconv>
#include <numeric>

namespace cabling {

namespace {

__extension__ typedef __int128 Wide;

int sector(const Slope& s) {
  if (s.is_infinite()) return 1;
  return s.num() < 0 ? 2 : 0;
}

Int parse_int(std::string_view text, std::string_view whole) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw DomainError("malformed slope '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Slope::Slope(Int num, Int den) {
  if (num == 0 && den == 0) throw DomainError("slope 0/0 is undefined");
  Int g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0 || (den == 0 && num < 0)) {
    num = -num;
    den = -den;
  }
  num_ = num;
  den_ = den;
}

Slope normalize(Int num, Int den) { return Slope(num, den); }

Slope Slope::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(text, text), 1);
  return Slope(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string Slope::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (a.den_ == 0 && b.den_ == 0) return std::strong_ordering::equal;
  return lhs <=> rhs;
}

std::strong_ordering circular_compare(const Slope& a, const Slope& b) {
  if (auto c = sector(a) <=> sector(b); c != 0) return c;
  return a <=> b;
}

bool ccw_before(const Slope& origin, const Slope& x, const Slope& y) {
  auto lap = [&](const Slope& z) { return circular_compare(z, origin) < 0 ? 1 : 0; };
  if (int lx = lap(x), ly = lap(y); lx != ly) return lx < ly;
  return circular_compare(x, y) < 0;
}

bool on_ccw_arc(const Slope& from, const Slope& x, const Slope& to) {
  return x == to || ccw_before(from, x, to);
}

}  // namespace cabling
