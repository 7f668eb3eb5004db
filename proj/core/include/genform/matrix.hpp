#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "genform/error.hpp"
#include "genform/gen_form.hpp"
#include "genform/polynomial.hpp"

namespace genform {

/// Dense row-major matrix over any value type with +, - and *. Entries are
/// always explicit, so a matrix of generalized forms carries its own zeros.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const T& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_, f(data_.front()));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_, data_.front());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] + o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] - o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix out(*this);
    for (T& e : out.data_) e = -e;
    return out;
  }
  friend Matrix operator*(const Rational& c, Matrix a) {
    for (T& e : a.data_) e = c * e;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.cols_ == 0) throw DimensionError("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_, a(0, 0) * b(0, 0));
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t c = 0; c < b.cols_; ++c) {
        T acc = a(r, 0) * b(0, c);
        for (std::size_t k = 1; k < a.cols_; ++k) acc = acc + a(r, k) * b(k, c);
        out(r, c) = std::move(acc);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix: shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<Polynomial>;
using GenFormMatrix = Matrix<GenForm>;

inline PolyMatrix poly_identity(std::size_t n, std::size_t dim) {
  PolyMatrix out(n, n, Polynomial(dim));
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Polynomial::constant(dim, Rational(1));
  return out;
}

inline bool is_identity(const PolyMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Polynomial& e = m(r, c);
      if (r == c ? !(e.is_constant() && e.constant_term() == Rational(1)) : !e.is_zero()) return false;
    }
  }
  return true;
}

/// Entrywise embedding of functions as generalized 0-forms.
inline GenFormMatrix as_gen_forms(const PolyMatrix& m, const Rational& epsilon) {
  return m.map([&](const Polynomial& p) { return GenForm::scalar(p, epsilon); });
}

inline bool is_zero(const GenFormMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace genform
