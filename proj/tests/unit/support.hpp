#pragma once

#include <string_view>

#include "genform/gen_form.hpp"
#include "genform/matrix.hpp"
#include "genform/harness/random.hpp"

namespace genform::testing {

inline Polynomial P(std::string_view text, std::size_t dim) { return Polynomial::parse(text, dim); }

inline OrdinaryForm form_of(std::size_t dim, Mask m, std::string_view coeff) {
  return OrdinaryForm::monomial(dim, m, P(coeff, dim));
}

inline PolyMatrix matrix_of(std::size_t dim, std::initializer_list<std::initializer_list<const char*>> rows) {
  PolyMatrix out(rows.size(), rows.size(), Polynomial(dim));
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const char* e : row) out(r, c++) = P(e, dim);
    ++r;
  }
  return out;
}

inline Mask idx(std::initializer_list<unsigned> one_based) {
  Mask m = 0;
  for (unsigned i : one_based) m |= bit(i - 1);
  return m;
}

constexpr std::uint64_t kSeed = 20260101;

}  // namespace genform::testing
