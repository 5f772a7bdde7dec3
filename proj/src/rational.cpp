#include "modcount/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "modcount/error.hpp"

namespace modcount {

namespace {

using i128 = __int128;

Rational from_wide(i128 num, i128 den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr i128 lo = std::numeric_limits<std::int64_t>::min() + 1;
  constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw Error(ErrorCode::InvalidArgument, "rational overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw Error(ErrorCode::InvalidArgument, "reciprocal of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  i128 lhs = i128(a.num_) * b.den_;
  i128 rhs = i128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::InvalidArgument, "cannot parse rational '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> std::int64_t {
    if (s.empty()) throw fail();
    if (!allow_sign && (s.front() == '-' || s.front() == '+')) throw fail();
    if (s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw fail();
    return v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash), true);
    std::int64_t den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw fail();
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (frac.empty() || frac.size() > 18) throw fail();
    std::int64_t w = whole.empty() ? 0 : parse_int(whole, false);
    std::int64_t f = parse_int(frac, false);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = Rational(w) + Rational(f, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text, true));
}

}  // namespace modcount
