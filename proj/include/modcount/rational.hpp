#ifndef MODCOUNT_RATIONAL_HPP
#define MODCOUNT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace modcount {

/// Exact rational with 64-bit numerator/denominator, always reduced and with a
/// positive denominator. Comparisons cross-multiply in 128 bits, so they never
/// round. Arithmetic throws InvalidArgument on overflow rather than wrapping.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  /// "num/den", denominator always printed ("1/1", "-2/3").
  std::string to_string() const;

  /// Accepts "a", "a/b" and finite decimals ("0.8" -> 4/5, "-1.25" -> -5/4).
  static Rational parse(std::string_view text);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace modcount

#endif
