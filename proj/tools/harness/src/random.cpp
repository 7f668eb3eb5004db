#include "genform/harness/random.hpp"

#include <array>
#include <vector>

namespace genform::harness {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// All exponent vectors of total degree <= max_degree, in a fixed order.
void monomials(std::size_t dim, unsigned max_degree, std::size_t axis, Monomial current, unsigned used,
               std::vector<Monomial>& out) {
  if (axis == dim) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e + used <= max_degree; ++e) {
    monomials(dim, max_degree, axis + 1, current.with_exponent(axis, e), used + e, out);
  }
}

// (1 + N)^-1 = sum_k (-N)^k for nilpotent N.
PolyMatrix unipotent_inverse(const PolyMatrix& u) {
  const std::size_t n = u.rows();
  const std::size_t dim = u(0, 0).dim();
  const PolyMatrix minus_n = poly_identity(n, dim) - u;
  PolyMatrix out = poly_identity(n, dim);
  PolyMatrix power = poly_identity(n, dim);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * minus_n;
    out += power;
  }
  return out;
}

}  // namespace

RandomSource RandomSource::for_trial(std::uint64_t seed, std::uint64_t index) {
  return RandomSource(splitmix64(splitmix64(seed) ^ index));
}

Rational RandomSource::coefficient() {
  static const std::array<Rational, 7> kValues = {Rational(0),     Rational(1),      Rational(-1), Rational(2),
                                                  Rational(-2),    Rational(1, 2),   Rational(-1, 2)};
  return kValues[below(kValues.size())];
}

Rational RandomSource::epsilon() {
  static const std::array<Rational, 6> kValues = {Rational(0),  Rational(1),  Rational(-1),
                                                  Rational(2),  Rational(-2), Rational(1, 2)};
  return kValues[below(kValues.size())];
}

Rational RandomSource::nonzero_coefficient() {
  static const std::array<Rational, 6> kValues = {Rational(1),  Rational(-1),   Rational(2),
                                                  Rational(-2), Rational(1, 2), Rational(-1, 2)};
  return kValues[below(kValues.size())];
}

Polynomial RandomSource::polynomial(std::size_t dim, unsigned max_degree) {
  std::vector<Monomial> basis;
  monomials(dim, max_degree, 0, Monomial{}, 0, basis);
  Polynomial out(dim);
  for (const Monomial& m : basis) {
    if (!coin()) continue;
    out += Polynomial::monomial(dim, m, coefficient());
  }
  return out;
}

OrdinaryForm RandomSource::form(std::size_t dim, int degree, unsigned max_degree) {
  OrdinaryForm out(dim, degree);
  if (degree < 0 || degree > static_cast<int>(dim)) return out;
  for (Mask m = 0; m < (Mask{1} << dim); ++m) {
    if (grade(m) == degree) out.add_term(m, polynomial(dim, max_degree));
  }
  return out;
}

GenForm RandomSource::gen_form(std::size_t dim, int degree, const Rational& epsilon, unsigned max_degree) {
  OrdinaryForm body = form(dim, degree, max_degree);
  OrdinaryForm soul = form(dim, degree + 1, max_degree);
  return GenForm(std::move(body), std::move(soul), epsilon);
}

GenForm RandomSource::gen_form(std::size_t dim, const Rational& epsilon, unsigned max_degree) {
  const int degree = static_cast<int>(below(dim + 2)) - 1;
  return gen_form(dim, degree, epsilon, max_degree);
}

VectorField RandomSource::vector_field(std::size_t dim, unsigned max_degree) {
  VectorField out(dim);
  for (std::size_t a = 0; a < dim; ++a) out[a] = polynomial(dim, max_degree);
  return out;
}

Tensor11 RandomSource::tensor(std::size_t dim, unsigned max_degree) {
  Tensor11 out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = 0; s < dim; ++s) out(r, s) = polynomial(dim, max_degree);
  }
  return out;
}

GenVectorField RandomSource::gen_vector_field(std::size_t dim, const Rational& epsilon, unsigned max_degree) {
  VectorField v = vector_field(dim, max_degree);
  Tensor11 t = tensor(dim, max_degree);
  return GenVectorField(std::move(v), std::move(t), epsilon);
}

FormMatrix RandomSource::form_matrix(std::size_t dim, int degree, unsigned max_degree) {
  FormMatrix out = zero_form_matrix(dim, dim, degree);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = form(dim, degree, max_degree);
  }
  return out;
}

FormMatrix RandomSource::symmetric_form_matrix(std::size_t dim, int degree, unsigned max_degree) {
  FormMatrix out = zero_form_matrix(dim, dim, degree);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r; c < dim; ++c) {
      out(r, c) = form(dim, degree, max_degree);
      out(c, r) = out(r, c);
    }
  }
  return out;
}

GenConnection RandomSource::connection(std::size_t dim, const Rational& epsilon, unsigned max_degree) {
  FormMatrix alpha = form_matrix(dim, 1, max_degree);
  FormMatrix beta = form_matrix(dim, 2, max_degree);
  return GenConnection::from_parts(alpha, beta, epsilon);
}

std::pair<PolyMatrix, PolyMatrix> RandomSource::gauge(std::size_t dim, unsigned max_degree) {
  PolyMatrix lower = poly_identity(dim, dim);
  PolyMatrix upper = poly_identity(dim, dim);
  PolyMatrix diag = poly_identity(dim, dim);
  PolyMatrix diag_inv = poly_identity(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const Rational d = nonzero_coefficient();
    diag(r, r) = Polynomial::constant(dim, d);
    diag_inv(r, r) = Polynomial::constant(dim, Rational(1) / d);
    for (std::size_t c = r + 1; c < dim; ++c) {
      lower(c, r) = polynomial(dim, max_degree);
      upper(r, c) = polynomial(dim, max_degree);
    }
  }
  return {lower * diag * upper, unipotent_inverse(upper) * diag_inv * unipotent_inverse(lower)};
}

std::pair<PolyMatrix, PolyMatrix> RandomSource::low_degree_gauge(std::size_t dim) {
  PolyMatrix lower = poly_identity(dim, dim);
  PolyMatrix upper = poly_identity(dim, dim);
  PolyMatrix diag = poly_identity(dim, dim);
  PolyMatrix diag_inv = poly_identity(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const Rational d = nonzero_coefficient();
    diag(r, r) = Polynomial::constant(dim, d);
    diag_inv(r, r) = Polynomial::constant(dim, Rational(1) / d);
    for (std::size_t c = r + 1; c < dim; ++c) {
      lower(c, r) = polynomial(dim, 0);
      upper(r, c) = polynomial(dim, 0);
    }
  }
  if (dim > 1) {
    // One linear entry per factor: any path through the strictly triangular
    // part uses it at most once, so the inverses stay linear.
    const std::size_t r = below(dim - 1);
    const std::size_t c = r + 1 + below(dim - 1 - r);
    lower(c, r) = polynomial(dim, 1);
    const std::size_t r2 = below(dim - 1);
    const std::size_t c2 = r2 + 1 + below(dim - 1 - r2);
    upper(r2, c2) = polynomial(dim, 1);
  }
  return {lower * diag * upper, unipotent_inverse(upper) * diag_inv * unipotent_inverse(lower)};
}

std::pair<PolyMatrix, PolyMatrix> RandomSource::metric(std::size_t dim, unsigned max_degree) {
  PolyMatrix j = poly_identity(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r + 1; c < dim; ++c) j(r, c) = polynomial(dim, max_degree);
  }
  const PolyMatrix j_inv = unipotent_inverse(j);
  return {j.transpose() * j, j_inv * j_inv.transpose()};
}

}  // namespace genform::harness
