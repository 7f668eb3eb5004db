#include "genform/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "genform/error.hpp"

namespace genform {

ExpPoly::ExpPoly(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxDim) throw DimensionError("ExpPoly: bad dimension");
}

ExpPoly::ExpPoly(const Polynomial& p) : dim_(p.dim()) {
  if (!p.is_zero()) terms_.emplace_back(Polynomial(p.dim()), p);
}

ExpPoly ExpPoly::exp(const Polynomial& q, const Rational& c) {
  ExpPoly e(q.dim());
  if (!c.is_zero()) e.terms_.emplace_back(q, Polynomial::constant(q.dim(), c));
  return e;
}

ExpPoly ExpPoly::constant(std::size_t dim, const Rational& r, const Rational& s) {
  return exp(Polynomial::constant(dim, s), r);
}

std::vector<ExpPoly::Term> ExpPoly::canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
  return out;
}

bool ExpPoly::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.is_constant() && t.second.is_constant(); });
}

std::pair<Rational, Rational> ExpPoly::as_scaled_exponential() const {
  if (terms_.empty()) return {Rational(0), Rational(0)};
  if (terms_.size() != 1 || !is_constant()) {
    throw ValidationError("ExpPoly '" + str() + "' is not a single constant r*e^s");
  }
  return {terms_[0].second.constant_term(), terms_[0].first.constant_term()};
}

ExpPoly ExpPoly::inverse() const {
  if (terms_.size() != 1 || !terms_[0].second.is_constant()) {
    throw ValidationError("ExpPoly::inverse: only c*exp(q) with constant c is invertible here, got '" + str() + "'");
  }
  return exp(-terms_[0].first, terms_[0].second.constant_term().inverse());
}

ExpPoly ExpPoly::partial(std::size_t axis) const {
  // d(p e^q) = (dp + p dq) e^q
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [q, p] : terms_) out.emplace_back(q, p.partial(axis) + p * q.partial(axis));
  ExpPoly e(dim_);
  e.terms_ = canonicalize(std::move(out));
  return e;
}

double ExpPoly::eval(std::span<const double> point) const {
  double s = 0.0;
  for (const auto& [q, p] : terms_) s += p.eval(point) * std::exp(q.eval(point));
  return s;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  if (dim_ != o.dim_) throw DimensionError("ExpPoly +: dimension mismatch");
  std::vector<Term> all = std::move(terms_);
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  terms_ = canonicalize(std::move(all));
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) { return *this += -o; }

ExpPoly ExpPoly::operator-() const {
  ExpPoly e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  if (a.dim_ != b.dim_) throw DimensionError("ExpPoly *: dimension mismatch");
  std::vector<ExpPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [qa, pa] : a.terms_) {
    for (const auto& [qb, pb] : b.terms_) out.emplace_back(qa + qb, pa * pb);
  }
  ExpPoly e(a.dim_);
  e.terms_ = ExpPoly::canonicalize(std::move(out));
  return e;
}

ExpPoly operator*(ExpPoly a, const Rational& c) {
  for (auto& t : a.terms_) t.second *= c;
  std::erase_if(a.terms_, [](const ExpPoly::Term& t) { return t.second.is_zero(); });
  return a;
}

std::string ExpPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (q.is_zero()) {
      os << p.str();
    } else {
      os << '(' << p.str() << ")*exp(" << q.str() << ')';
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExpPoly& e) { return os << e.str(); }

}  // namespace genform
