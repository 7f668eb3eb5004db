#include "genform/superspace.hpp"

#include <sstream>

#include "genform/error.hpp"

namespace genform {

SuperFunction::SuperFunction(std::size_t dim, Rational epsilon) : dim_(dim), epsilon_(std::move(epsilon)) {
  if (dim == 0 || dim > kMaxDim) throw DimensionError("SuperFunction: bad dimension");
}

SuperFunction SuperFunction::constant(std::size_t dim, const Rational& epsilon, const Polynomial& c) {
  SuperFunction out(dim, epsilon);
  out.add_term(0, c);
  return out;
}

SuperFunction SuperFunction::generator(std::size_t dim, const Rational& epsilon, unsigned g) {
  if (g > dim) throw std::out_of_range("SuperFunction::generator: index out of range");
  SuperFunction out(dim, epsilon);
  out.add_term(bit(g), Polynomial::constant(dim, Rational(1)));
  return out;
}

void SuperFunction::add_term(Mask m, const Polynomial& c) {
  if (m >> (dim_ + 1)) throw DimensionError("SuperFunction: generator beyond dimension");
  if (c.dim() != dim_) throw DimensionError("SuperFunction: coefficient dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SuperFunction::check_compatible(const SuperFunction& o) const {
  if (dim_ != o.dim_) throw DimensionError("SuperFunction: dimension mismatch");
  if (epsilon_ != o.epsilon_) throw EpsilonMismatch("SuperFunction: epsilon mismatch");
}

SuperFunction SuperFunction::odd_derivative(unsigned g) const {
  SuperFunction out(dim_, epsilon_);
  for (const auto& [m, c] : terms_) {
    if (!(m & bit(g))) continue;
    out.add_term(m & ~bit(g), left_derivative_sign(m, g) > 0 ? c : -c);
  }
  return out;
}

SuperFunction SuperFunction::partial(std::size_t axis) const {
  SuperFunction out(dim_, epsilon_);
  for (const auto& [m, c] : terms_) out.add_term(m, c.partial(axis));
  return out;
}

SuperFunction& SuperFunction::operator+=(const SuperFunction& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperFunction& SuperFunction::operator-=(const SuperFunction& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperFunction SuperFunction::operator-() const { return Rational(-1) * *this; }

SuperFunction operator*(const SuperFunction& a, const SuperFunction& b) {
  a.check_compatible(b);
  SuperFunction out(a.dim_, a.epsilon_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const int s = product_sign(ma, mb);
      if (s == 0) continue;
      out.add_term(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

SuperFunction operator*(const Polynomial& c, const SuperFunction& a) {
  SuperFunction out(a.dim_, a.epsilon_);
  for (const auto& [m, t] : a.terms_) out.add_term(m, c * t);
  return out;
}

SuperFunction operator*(const Rational& c, const SuperFunction& a) {
  SuperFunction out(a.dim_, a.epsilon_);
  for (const auto& [m, t] : a.terms_) out.add_term(m, c * t);
  return out;
}

std::string SuperFunction::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (m == 0) continue;
    os << " *";
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const auto g = static_cast<std::size_t>(std::countr_zero(rest));
      if (g == dim_) {
        os << " mu";
      } else {
        os << " z" << g + 1;
      }
    }
  }
  return os.str();
}

SuperFunction to_super(const GenForm& a) {
  SuperFunction out(a.dim(), a.epsilon());
  const Mask mu = out.mu_bit();
  for (const auto& [m, c] : a.body().components()) out.add_term(m, c);
  for (const auto& [m, c] : a.soul().components()) out.add_term(m | mu, c);
  return out;
}

GenForm from_super(const SuperFunction& f, std::optional<int> degree) {
  const Mask mu = f.mu_bit();
  std::optional<int> p = degree;
  for (const auto& [m, c] : f.terms()) {
    const int d = (m & mu) ? grade(m) - 2 : grade(m);
    if (!p) {
      p = d;
    } else if (*p != d) {
      throw DegreeError("from_super: terms of generalized degree " + std::to_string(*p) + " and " +
                        std::to_string(d));
    }
  }
  const int deg = p.value_or(0);
  OrdinaryForm body(f.dim(), deg), soul(f.dim(), deg + 1);
  for (const auto& [m, c] : f.terms()) {
    if (m & mu) {
      soul.add_term(m & ~mu, c);
    } else {
      body.add_term(m, c);
    }
  }
  return GenForm(std::move(body), std::move(soul), f.epsilon());
}

SuperFunction super_d(const SuperFunction& f) {
  const std::size_t n = f.dim();
  SuperFunction out = f.epsilon() * f.odd_derivative(static_cast<unsigned>(n));
  for (std::size_t a = 0; a < n; ++a) {
    out += SuperFunction::generator(n, f.epsilon(), static_cast<unsigned>(a)) * f.partial(a);
  }
  return out;
}

SuperFunction super_interior(const VectorField& v, const SuperFunction& f) {
  if (v.dim() != f.dim()) throw DimensionError("super_interior: dimension mismatch");
  SuperFunction out(f.dim(), f.epsilon());
  for (std::size_t r = 0; r < f.dim(); ++r) {
    if (!v[r].is_zero()) out += v[r] * f.odd_derivative(static_cast<unsigned>(r));
  }
  return out;
}

namespace {

// v^r + v^r_s z^s mu
SuperFunction super_component(const GenVectorField& V, std::size_t r) {
  const std::size_t n = V.dim();
  SuperFunction out = SuperFunction::constant(n, V.epsilon(), V.v()[r]);
  const Mask mu = out.mu_bit();
  for (std::size_t s = 0; s < n; ++s) out.add_term(bit(static_cast<unsigned>(s)) | mu, V.vt()(r, s));
  return out;
}

void check_field(const GenVectorField& V, const SuperFunction& f, const char* op) {
  if (V.dim() != f.dim()) throw DimensionError(std::string(op) + ": dimension mismatch");
  if (V.epsilon() != f.epsilon()) throw EpsilonMismatch(std::string(op) + ": epsilon mismatch");
}

}  // namespace

SuperFunction super_interior(const GenVectorField& V, const SuperFunction& f) {
  check_field(V, f, "super_interior");
  SuperFunction out(f.dim(), f.epsilon());
  for (std::size_t r = 0; r < f.dim(); ++r) {
    out += super_component(V, r) * f.odd_derivative(static_cast<unsigned>(r));
  }
  return out;
}

SuperFunction super_lie(const VectorField& v, const SuperFunction& f) {
  if (v.dim() != f.dim()) throw DimensionError("super_lie: dimension mismatch");
  const std::size_t n = f.dim();
  SuperFunction out(n, f.epsilon());
  for (std::size_t a = 0; a < n; ++a) {
    if (!v[a].is_zero()) out += v[a] * f.partial(a);
    const SuperFunction da = f.odd_derivative(static_cast<unsigned>(a));
    for (std::size_t b = 0; b < n; ++b) {
      const Polynomial c = v[a].partial(b);
      if (c.is_zero()) continue;
      out += c * (SuperFunction::generator(n, f.epsilon(), static_cast<unsigned>(b)) * da);
    }
  }
  return out;
}

SuperFunction super_lie(const GenVectorField& V, const SuperFunction& f) {
  check_field(V, f, "super_lie");
  const std::size_t n = f.dim();
  const Rational& eps = f.epsilon();
  const Tensor11& vt = V.vt();
  const SuperFunction mu = SuperFunction::generator(n, eps, static_cast<unsigned>(n));
  auto z = [&](std::size_t g) { return SuperFunction::generator(n, eps, static_cast<unsigned>(g)); };

  SuperFunction out = super_lie(V.v(), f);
  for (std::size_t a = 0; a < n; ++a) {
    const SuperFunction dz = f.odd_derivative(static_cast<unsigned>(a));
    const SuperFunction dx = f.partial(a);
    for (std::size_t b = 0; b < n; ++b) {
      const Polynomial& t = vt(a, b);
      if (!t.is_zero()) {
        out -= (eps * t) * (z(b) * dz);
        out += t * (z(b) * mu * dx);
      }
      for (std::size_t c = 0; c < n; ++c) {
        const Polynomial dt = t.partial(c);
        if (dt.is_zero()) continue;
        out += dt * (z(c) * z(b) * mu * dz);
      }
    }
  }
  return out;
}

SuperFunction super_lie_commutator(const GenVectorField& V, const SuperFunction& f) {
  return super_d(super_interior(V, f)) + super_interior(V, super_d(f));
}

}  // namespace genform
