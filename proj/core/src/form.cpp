#include "genform/form.hpp"

#include <sstream>

namespace genform {

OrdinaryForm homotopy(const OrdinaryForm& a) {
  const std::size_t n = a.dim();
  OrdinaryForm out(n, a.degree() - 1);
  if (a.degree() < 1) return out;
  for (const auto& [m, c] : a.components()) {
    for (const auto& [mono, coeff] : c.terms()) {
      // t-integral of t^{|mono| + p - 1} gives 1 / (|mono| + p).
      const Rational weight = coeff / Rational(static_cast<long>(mono.total_degree()) + a.degree());
      for (Mask rest = m; rest != 0; rest &= rest - 1) {
        const unsigned i = static_cast<unsigned>(std::countr_zero(rest));
        const Monomial lifted = mono * Monomial::variable(i);
        const Rational w = left_derivative_sign(m, i) > 0 ? weight : -weight;
        out.add_term(m & ~bit(i), Polynomial::monomial(n, lifted, w));
      }
    }
  }
  return out;
}

OrdinaryForm pullback(std::span<const Polynomial> phi, const OrdinaryForm& a) {
  if (phi.size() != a.dim()) {
    throw DimensionError("pullback: map has " + std::to_string(phi.size()) + " components, form lives in dim " +
                         std::to_string(a.dim()));
  }
  if (phi.empty()) throw DimensionError("pullback: empty map");
  const std::size_t source = phi[0].dim();
  std::vector<OrdinaryForm> dphi;
  dphi.reserve(phi.size());
  for (const auto& p : phi) {
    if (p.dim() != source) throw DimensionError("pullback: map components disagree on source dimension");
    dphi.push_back(exterior_derivative(OrdinaryForm::scalar(p)));
  }
  OrdinaryForm out(source, a.degree());
  if (a.degree() < 0) return out;
  for (const auto& [m, c] : a.components()) {
    OrdinaryForm term = OrdinaryForm::scalar(c.compose(phi));
    for (Mask rest = m; rest != 0; rest &= rest - 1) term = wedge(term, dphi[std::countr_zero(rest)]);
    out += term;
  }
  return out;
}

std::string to_string(const OrdinaryForm& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.components()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ')';
    for (int i : mask_indices(m)) os << " dx" << i;
  }
  return os.str();
}

}  // namespace genform
