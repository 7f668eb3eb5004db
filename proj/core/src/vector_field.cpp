#include "genform/vector_field.hpp"

#include <algorithm>

#include "genform/error.hpp"

namespace genform {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

}  // namespace

VectorField::VectorField(std::size_t dim) : components_(dim, Polynomial(dim)) {}

VectorField::VectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
  for (const auto& c : components_) require_same(c.dim(), components_.size(), "VectorField");
}

VectorField VectorField::coordinate(std::size_t dim, std::size_t axis) {
  VectorField v(dim);
  v[axis] = Polynomial::constant(dim, Rational(1));
  return v;
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial VectorField::apply(const Polynomial& f) const {
  require_same(f.dim(), dim(), "VectorField::apply");
  Polynomial out(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (!components_[a].is_zero()) out += components_[a] * f.partial(a);
  }
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same(dim(), o.dim(), "VectorField +");
  for (std::size_t a = 0; a < dim(); ++a) components_[a] += o.components_[a];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& p : components_) p *= c;
  return *this;
}

VectorField operator-(VectorField a, const VectorField& b) { return a += Rational(-1) * b; }

Tensor11::Tensor11(std::size_t dim) : rows_(dim, std::vector<Polynomial>(dim, Polynomial(dim))) {}

Tensor11::Tensor11(std::vector<std::vector<Polynomial>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    require_same(row.size(), rows_.size(), "Tensor11 (not square)");
    for (const auto& p : row) require_same(p.dim(), rows_.size(), "Tensor11");
  }
}

Tensor11 Tensor11::identity(std::size_t dim, const Polynomial& scale) {
  Tensor11 t(dim);
  for (std::size_t i = 0; i < dim; ++i) t(i, i) = scale;
  return t;
}

bool Tensor11::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const Polynomial& p) { return p.is_zero(); });
  });
}

Tensor11& Tensor11::operator+=(const Tensor11& o) {
  require_same(dim(), o.dim(), "Tensor11 +");
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t s = 0; s < dim(); ++s) rows_[r][s] += o.rows_[r][s];
  }
  return *this;
}

Tensor11& Tensor11::operator*=(const Rational& c) {
  for (auto& row : rows_) {
    for (auto& p : row) p *= c;
  }
  return *this;
}

Tensor11 operator-(Tensor11 a, const Tensor11& b) { return a += Rational(-1) * b; }

Tensor11 operator*(const Tensor11& a, const Tensor11& b) {
  require_same(a.dim(), b.dim(), "Tensor11 *");
  const std::size_t n = a.dim();
  Tensor11 out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (!a(r, t).is_zero() && !b(t, s).is_zero()) out(r, s) += a(r, t) * b(t, s);
      }
    }
  }
  return out;
}

VectorField bracket(const VectorField& v, const VectorField& w) {
  require_same(v.dim(), w.dim(), "bracket");
  VectorField out(v.dim());
  for (std::size_t c = 0; c < v.dim(); ++c) out[c] = v.apply(w[c]) - w.apply(v[c]);
  return out;
}

}  // namespace genform
