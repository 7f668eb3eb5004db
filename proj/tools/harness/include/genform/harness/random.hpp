#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "genform/connection.hpp"
#include "genform/gen_form.hpp"
#include "genform/gen_vector.hpp"

namespace genform::harness {

/// Deterministic generator of test values. Only raw mt19937_64 output is
/// consumed (reduced by modulo), so streams are identical across standard
/// library implementations.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for trial `index` of a run seeded with `seed`.
  static RandomSource for_trial(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() >> 63) != 0; }

  /// Drawn from {0, 1, -1, 2, -2, 1/2, -1/2}.
  Rational coefficient();
  /// Drawn from {0, 1, -1, 2, -2, 1/2}.
  Rational epsilon();
  /// Nonzero drawn from {1, -1, 2, -2, 1/2, -1/2}.
  Rational nonzero_coefficient();

  /// Each monomial of total degree <= max_degree is kept with probability
  /// 1/2 and given a coefficient from coefficient().
  Polynomial polynomial(std::size_t dim, unsigned max_degree = 2);
  OrdinaryForm form(std::size_t dim, int degree, unsigned max_degree = 2);
  GenForm gen_form(std::size_t dim, int degree, const Rational& epsilon, unsigned max_degree = 2);
  /// Degree drawn uniformly from -1..dim.
  GenForm gen_form(std::size_t dim, const Rational& epsilon, unsigned max_degree = 2);
  VectorField vector_field(std::size_t dim, unsigned max_degree = 2);
  Tensor11 tensor(std::size_t dim, unsigned max_degree = 2);
  GenVectorField gen_vector_field(std::size_t dim, const Rational& epsilon, unsigned max_degree = 2);

  FormMatrix form_matrix(std::size_t dim, int degree, unsigned max_degree = 1);
  /// Entries (r, c) and (c, r) are equal.
  FormMatrix symmetric_form_matrix(std::size_t dim, int degree, unsigned max_degree = 1);
  GenConnection connection(std::size_t dim, const Rational& epsilon, unsigned max_degree = 1);
  /// G = L D U with unipotent triangular L, U and a constant invertible
  /// diagonal D, returned with its exact inverse. Constant when max_degree = 0.
  std::pair<PolyMatrix, PolyMatrix> gauge(std::size_t dim, unsigned max_degree = 1);
  /// As gauge(), but the triangular factors are constant apart from one
  /// linear entry each, so G and its inverse have degree at most 2.
  std::pair<PolyMatrix, PolyMatrix> low_degree_gauge(std::size_t dim);
  /// gamma = J^T J for a random unipotent J, returned with its exact inverse.
  std::pair<PolyMatrix, PolyMatrix> metric(std::size_t dim, unsigned max_degree = 1);

 private:
  std::mt19937_64 engine_;
};

}  // namespace genform::harness
