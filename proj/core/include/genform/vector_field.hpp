#pragma once

#include <cstddef>
#include <vector>

#include "genform/polynomial.hpp"

namespace genform {

/// v = v^a d/dx^a with polynomial components.
class VectorField {
 public:
  explicit VectorField(std::size_t dim);
  explicit VectorField(std::vector<Polynomial> components);

  /// The coordinate field d/dx^{axis+1}.
  static VectorField coordinate(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return components_.size(); }
  const Polynomial& operator[](std::size_t a) const { return components_[a]; }
  Polynomial& operator[](std::size_t a) { return components_[a]; }
  const std::vector<Polynomial>& components() const { return components_; }
  bool is_zero() const;

  /// v(f) = v^a df/dx^a
  Polynomial apply(const Polynomial& f) const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator*=(const Rational& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b);
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }
  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  std::vector<Polynomial> components_;
};

/// (1,1) tensor t^r_s d/dx^r (x) dx^s, stored row r, column s.
class Tensor11 {
 public:
  explicit Tensor11(std::size_t dim);
  explicit Tensor11(std::vector<std::vector<Polynomial>> rows);

  static Tensor11 identity(std::size_t dim, const Polynomial& scale);

  std::size_t dim() const { return rows_.size(); }
  const Polynomial& operator()(std::size_t r, std::size_t s) const { return rows_[r][s]; }
  Polynomial& operator()(std::size_t r, std::size_t s) { return rows_[r][s]; }
  bool is_zero() const;

  Tensor11& operator+=(const Tensor11& o);
  Tensor11& operator*=(const Rational& c);
  friend Tensor11 operator+(Tensor11 a, const Tensor11& b) { return a += b; }
  friend Tensor11 operator-(Tensor11 a, const Tensor11& b);
  friend Tensor11 operator*(const Rational& c, Tensor11 a) { return a *= c; }
  /// Matrix product (a b)^r_s = a^r_t b^t_s.
  friend Tensor11 operator*(const Tensor11& a, const Tensor11& b);
  friend bool operator==(const Tensor11&, const Tensor11&) = default;

 private:
  std::vector<std::vector<Polynomial>> rows_;
};

/// Lie bracket [v,w]^c = v^b d_b w^c - w^b d_b v^c.
VectorField bracket(const VectorField& v, const VectorField& w);

}  // namespace genform
