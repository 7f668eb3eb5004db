#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genform/rational.hpp"

namespace genform {

inline constexpr std::size_t kMaxDim = 8;
inline constexpr unsigned kMaxExponent = 127;

/// Exponent vector packed one byte per variable. Axis 0 is x1.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial variable(std::size_t axis, unsigned power = 1);

  unsigned exponent(std::size_t axis) const { return static_cast<unsigned>((bits_ >> (8 * axis)) & 0xffU); }
  unsigned total_degree() const;
  bool is_one() const { return bits_ == 0; }
  Monomial with_exponent(std::size_t axis, unsigned power) const;
  std::uint64_t packed() const { return bits_; }

  friend Monomial operator*(Monomial a, Monomial b);
  friend auto operator<=>(Monomial, Monomial) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Multivariate polynomial over the rationals in `dim` commuting variables.
///
/// Terms are kept sorted by monomial with no zero coefficients, so structural
/// equality is mathematical equality.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(std::size_t dim);

  static Polynomial constant(std::size_t dim, const Rational& c);
  static Polynomial variable(std::size_t dim, std::size_t axis);
  static Polynomial monomial(std::size_t dim, Monomial m, const Rational& c);
  static Polynomial from_terms(std::size_t dim, std::vector<Term> terms);

  /// Parses `3/2*x1^2*x2 + -1*x3`. Also accepts binary `-`, bare `x1`, and
  /// a leading sign on any term. Variables must satisfy 1 <= index <= dim.
  static Polynomial parse(std::string_view text, std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned total_degree() const;

  /// Formal partial derivative along `axis` (zero-based).
  Polynomial partial(std::size_t axis) const;

  /// Substitutes x_i -> substitution[i]; the result lives in the dimension of
  /// the substituted polynomials.
  Polynomial compose(std::span<const Polynomial> substitution) const;

  double eval(std::span<const double> point) const;
  Rational eval(std::span<const Rational> point) const;

  std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

 private:
  void check_same_dim(const Polynomial& o, const char* op) const;

  std::size_t dim_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace genform
