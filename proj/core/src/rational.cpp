#include "genform/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "genform/error.hpp"

namespace genform {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

u128 abs128(i128 x) { return x < 0 ? -static_cast<u128>(x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t abs64(std::int64_t x) { return x < 0 ? -static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x); }

mpz_class mpz_from(i128 x) {
  const u128 a = abs128(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(a >> 64)));
  mpz_class out = hi << 64;
  out += mpz_class(static_cast<unsigned long>(static_cast<std::uint64_t>(a)));
  return x < 0 ? mpz_class(-out) : out;
}

bool fits(i128 x) { return x <= std::numeric_limits<std::int64_t>::max() && x >= -std::numeric_limits<std::int64_t>::max(); }

}  // namespace

struct RationalOps {
  /// Stores n / d, given in lowest terms with d > 0, inline when both fit.
  static void set(Rational& r, i128 n, i128 d) {
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      r.big_.reset();
      return;
    }
    mpq_class q;
    q.get_num() = mpz_from(n);
    q.get_den() = mpz_from(d);
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
  }
};

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  i128 n = numerator, d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const u128 g = gcd128(abs128(n), static_cast<u128>(d));
  RationalOps::set(*this, n / static_cast<i128>(g), d / static_cast<i128>(g));
}

Rational::Rational(const mpq_class& value) {
  mpq_class v(value);
  v.canonicalize();
  set(std::move(v));
}

void Rational::set(mpq_class value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(value));
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : trim(text.substr(slash + 1));
  if (!is_integer_literal(num, true) || (slash != std::string_view::npos && !is_integer_literal(den, false))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string num_s(num);
  if (num_s.front() == '+') num_s.erase(0, 1);
  mpz_class n(num_s, 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(n, d));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

double Rational::to_double() const {
  return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str(10);
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (big_) return Rational(mpq_class(1 / *big_));
  Rational out;
  out.num_ = num_ < 0 ? -den_ : den_;
  out.den_ = num_ < 0 ? -num_ : num_;
  return out;
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  if (big_ || o.big_) {
    set(mpq_class(to_mpq() + o.to_mpq()));
    return *this;
  }
  if (den_ == 1 && o.den_ == 1) {
    RationalOps::set(*this, static_cast<i128>(num_) + o.num_, 1);
    return *this;
  }
  const std::uint64_t g = gcd64(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(o.den_));
  const i128 b = den_ / static_cast<std::int64_t>(g);
  const i128 d = o.den_ / static_cast<std::int64_t>(g);
  const i128 n = static_cast<i128>(num_) * d + static_cast<i128>(o.num_) * b;
  const i128 den = b * o.den_;
  const u128 h = gcd128(abs128(n), static_cast<u128>(den));
  if (h == 0) {
    RationalOps::set(*this, 0, 1);
  } else {
    RationalOps::set(*this, n / static_cast<i128>(h), den / static_cast<i128>(h));
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (big_ || o.big_) {
    set(mpq_class(to_mpq() * o.to_mpq()));
    return *this;
  }
  if (num_ == 0 || o.num_ == 0) {
    RationalOps::set(*this, 0, 1);
    return *this;
  }
  const std::uint64_t g1 = gcd64(abs64(num_), static_cast<std::uint64_t>(o.den_));
  const std::uint64_t g2 = gcd64(abs64(o.num_), static_cast<std::uint64_t>(den_));
  const i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (o.num_ / static_cast<std::int64_t>(g2));
  const i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (o.den_ / static_cast<std::int64_t>(g1));
  RationalOps::set(*this, n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = 0;
  if (!a.big_ && !b.big_) {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    c = (lhs > rhs) - (lhs < rhs);
  } else {
    c = cmp(a.to_mpq(), b.to_mpq());
  }
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace genform
