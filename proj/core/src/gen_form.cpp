#include "genform/gen_form.hpp"

namespace genform {

GenForm::GenForm(OrdinaryForm body, OrdinaryForm soul, Rational epsilon)
    : body_(std::move(body)), soul_(std::move(soul)), epsilon_(std::move(epsilon)) {
  if (body_.dim() != soul_.dim()) throw DimensionError("GenForm: body and soul dimensions differ");
  if (soul_.degree() != body_.degree() + 1) throw DegreeError("GenForm: soul degree must be body degree + 1");
  const int p = body_.degree();
  if ((p < -1 || p > static_cast<int>(body_.dim())) && !(body_.is_zero() && soul_.is_zero())) {
    throw DegreeError("GenForm: nonzero form of degree " + std::to_string(p) + " outside [-1, n]");
  }
}

GenForm GenForm::zero(std::size_t dim, int degree, const Rational& epsilon) {
  return GenForm(OrdinaryForm(dim, degree), OrdinaryForm(dim, degree + 1), epsilon);
}

GenForm GenForm::one(std::size_t dim, const Rational& epsilon) {
  return scalar(Polynomial::constant(dim, Rational(1)), epsilon);
}

GenForm GenForm::m(std::size_t dim, const Rational& epsilon) {
  return from_soul(OrdinaryForm::scalar(Polynomial::constant(dim, Rational(1))), epsilon);
}

GenForm GenForm::from_body(const OrdinaryForm& body, const Rational& epsilon) {
  return GenForm(body, OrdinaryForm(body.dim(), body.degree() + 1), epsilon);
}

GenForm GenForm::from_soul(const OrdinaryForm& soul, const Rational& epsilon) {
  return GenForm(OrdinaryForm(soul.dim(), soul.degree() - 1), soul, epsilon);
}

GenForm GenForm::scalar(const Polynomial& f, const Rational& epsilon) {
  return from_body(OrdinaryForm::scalar(f), epsilon);
}

void GenForm::check_compatible(const GenForm& o, const char* op) const {
  if (dim() != o.dim()) throw DimensionError(std::string("GenForm ") + op + ": dimension mismatch");
  if (epsilon_ != o.epsilon_) {
    throw EpsilonMismatch(std::string("GenForm ") + op + ": epsilon mismatch (" + epsilon_.str() + " vs " +
                          o.epsilon_.str() + ")");
  }
}

GenForm& GenForm::operator+=(const GenForm& o) {
  check_compatible(o, "+");
  body_ += o.body_;
  soul_ += o.soul_;
  return *this;
}

GenForm& GenForm::operator-=(const GenForm& o) {
  check_compatible(o, "-");
  body_ -= o.body_;
  soul_ -= o.soul_;
  return *this;
}

GenForm operator*(const GenForm& a, const GenForm& b) {
  a.check_compatible(b, "*");
  OrdinaryForm body = wedge(a.body_, b.body_);
  OrdinaryForm soul = wedge(a.body_, b.soul_);
  OrdinaryForm mixed = wedge(a.soul_, b.body_);
  if (b.degree() % 2 == 0) {
    soul += mixed;
  } else {
    soul -= mixed;
  }
  return GenForm(std::move(body), std::move(soul), a.epsilon_);
}

GenForm wedge(const GenForm& a, const GenForm& b) { return a * b; }

GenForm exterior_derivative(const GenForm& a) {
  const int p = a.degree();
  OrdinaryForm body = exterior_derivative(a.body());
  const Rational s = (p + 1) % 2 == 0 ? a.epsilon() : -a.epsilon();
  body += s * a.soul();
  return GenForm(std::move(body), exterior_derivative(a.soul()), a.epsilon());
}

GenForm pullback(std::span<const Polynomial> phi, const GenForm& a) {
  return GenForm(pullback(phi, a.body()), pullback(phi, a.soul()), a.epsilon());
}

GenForm interior(const VectorField& v, const GenForm& a) {
  return GenForm(interior(v, a.body()), interior(v, a.soul()), a.epsilon());
}

GenForm lie_derivative(const VectorField& v, const GenForm& a) {
  return GenForm(lie_derivative(v, a.body()), lie_derivative(v, a.soul()), a.epsilon());
}

GenForm partial(const GenForm& a, std::size_t axis) {
  auto componentwise = [axis](const OrdinaryForm& f) {
    OrdinaryForm out(f.dim(), f.degree());
    for (const auto& [m, c] : f.components()) out.add_term(m, c.partial(axis));
    return out;
  };
  return GenForm(componentwise(a.body()), componentwise(a.soul()), a.epsilon());
}

std::string to_string(const GenForm& a) {
  return "[" + to_string(a.body()) + "] + [" + to_string(a.soul()) + "] m";
}

}  // namespace genform
