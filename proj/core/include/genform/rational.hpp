#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

namespace genform {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits are stored inline;
/// larger ones fall back to a shared immutable GMP rational. The representation
/// is canonical: a value that fits inline is never stored in GMP form.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      if (static_cast<long long>(n) != std::numeric_limits<long long>::min()) {
        num_ = static_cast<std::int64_t>(n);
        return;
      }
      set(mpq_class(static_cast<long>(n)));
    } else {
      if (static_cast<unsigned long long>(n) <= static_cast<unsigned long long>(kMax)) {
        num_ = static_cast<std::int64_t>(n);
        return;
      }
      set(mpq_class(static_cast<unsigned long>(n)));
    }
  }

  Rational(long numerator, long denominator);

  explicit Rational(const mpq_class& value);

  /// Accepts `int` or `int/posint`, optional leading sign, surrounding blanks.
  static Rational parse(std::string_view text);

  mpq_class to_mpq() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  int sign() const;
  bool is_integer() const;
  double to_double() const;
  std::string str() const;

  Rational inverse() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return cmp(*a.big_, *b.big_) == 0;
    return false;  // canonical representation: inline and GMP values never coincide
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

  friend struct RationalOps;
  void set(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace genform
