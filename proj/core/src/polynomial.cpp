#include "genform/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include "genform/error.hpp"

namespace genform {

namespace {

constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw DimensionError("polynomial dimension must be in [1, " + std::to_string(kMaxDim) + "], got " +
                         std::to_string(dim));
  }
}

// Sorts by monomial and merges equal monomials, dropping zeros.
std::vector<Polynomial::Term> canonicalize(std::vector<Polynomial::Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Polynomial::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

}  // namespace

Monomial Monomial::variable(std::size_t axis, unsigned power) {
  if (axis >= kMaxDim) throw std::out_of_range("Monomial: axis out of range");
  if (power > kMaxExponent) throw std::overflow_error("Monomial: exponent too large");
  Monomial m;
  m.bits_ = static_cast<std::uint64_t>(power) << (8 * axis);
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxDim; ++i) d += exponent(i);
  return d;
}

Monomial Monomial::with_exponent(std::size_t axis, unsigned power) const {
  if (power > kMaxExponent) throw std::overflow_error("Monomial: exponent too large");
  Monomial m = *this;
  m.bits_ &= ~(0xffULL << (8 * axis));
  m.bits_ |= static_cast<std::uint64_t>(power) << (8 * axis);
  return m;
}

Monomial operator*(Monomial a, Monomial b) {
  Monomial m;
  m.bits_ = a.bits_ + b.bits_;
  if (m.bits_ & kHighBits) throw std::overflow_error("Monomial: exponent overflow");
  return m;
}

Polynomial::Polynomial(std::size_t dim) : dim_(dim) { check_dim(dim); }

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  Polynomial p(dim);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::out_of_range("Polynomial::variable: axis out of range");
  return monomial(dim, Monomial::variable(axis), Rational(1));
}

Polynomial Polynomial::monomial(std::size_t dim, Monomial m, const Rational& c) {
  Polynomial p(dim);
  for (std::size_t i = dim; i < kMaxDim; ++i) {
    if (m.exponent(i) != 0) throw DimensionError("Polynomial::monomial: variable beyond dim");
  }
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(std::size_t dim, std::vector<Term> terms) {
  Polynomial p(dim);
  for (const auto& t : terms) {
    for (std::size_t i = dim; i < kMaxDim; ++i) {
      if (t.first.exponent(i) != 0) throw DimensionError("Polynomial::from_terms: variable beyond dim");
    }
  }
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
  return Rational(0);
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

void Polynomial::check_same_dim(const Polynomial& o, const char* op) const {
  if (dim_ != o.dim_) {
    throw DimensionError(std::string("Polynomial ") + op + ": dimension mismatch (" + std::to_string(dim_) +
                         " vs " + std::to_string(o.dim_) + ")");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_dim(o, "+");
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_dim(b, "*");
  Polynomial p(a.dim_);
  if (a.terms_.empty() || b.terms_.empty()) return p;
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  }
  p.terms_ = canonicalize(std::move(prod));
  return p;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
    if (auto c = a.terms_[i].second <=> b.terms_[i].second; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Polynomial Polynomial::partial(std::size_t axis) const {
  if (axis >= dim_) {
    throw std::out_of_range("Polynomial::partial: axis " + std::to_string(axis) + " out of range for dim " +
                            std::to_string(dim_));
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(axis);
    if (e == 0) continue;
    out.emplace_back(m.with_exponent(axis, e - 1), c * Rational(static_cast<long>(e)));
  }
  // Lowering one exponent keeps distinct monomials distinct but may reorder.
  Polynomial p(dim_);
  p.terms_ = canonicalize(std::move(out));
  return p;
}

Polynomial Polynomial::compose(std::span<const Polynomial> substitution) const {
  if (substitution.size() != dim_) {
    throw DimensionError("Polynomial::compose: need " + std::to_string(dim_) + " substitutions, got " +
                         std::to_string(substitution.size()));
  }
  std::size_t target = 0;
  for (const auto& s : substitution) {
    if (target == 0) target = s.dim();
    if (s.dim() != target) throw DimensionError("Polynomial::compose: substitutions disagree on dimension");
  }
  if (target == 0) throw DimensionError("Polynomial::compose: empty substitution");
  // powers[i][e] = substitution[i]^e, grown on demand.
  std::vector<std::vector<Polynomial>> powers(dim_);
  for (std::size_t i = 0; i < dim_; ++i) powers[i].push_back(Polynomial::constant(target, Rational(1)));
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * substitution[i]);
    return powers[i][e];
  };
  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (const unsigned e = m.exponent(i); e != 0) t = t * power(i, e);
    }
    result += t;
  }
  return result;
}

double Polynomial::eval(std::span<const double> point) const {
  if (point.size() != dim_) throw DimensionError("Polynomial::eval: point length does not match dim");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = c.to_double();
    for (std::size_t i = 0; i < dim_; ++i) {
      for (unsigned e = m.exponent(i); e > 0; --e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != dim_) throw DimensionError("Polynomial::eval: point length does not match dim");
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (unsigned e = m.exponent(i); e > 0; --e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // Print highest total degree first; ties broken by the storage order.
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    return a->first.total_degree() > b->first.total_degree();
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    if (!first) os << " + ";
    first = false;
    os << t->second.str();
    for (std::size_t i = 0; i < dim_; ++i) {
      const unsigned e = t->first.exponent(i);
      if (e == 0) continue;
      os << "*x" << (i + 1);
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  Polynomial parse() {
    Polynomial result(dim_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    for (;;) {
      Polynomial term = parse_term();
      result += negate ? -term : term;
      skip_ws();
      if (at_end()) break;
      if (peek() == '+') {
        negate = false;
      } else if (peek() == '-') {
        negate = true;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
      skip_ws();
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Rational coeff(1);
    Monomial mono;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (at_end()) fail("unexpected end of input");
      const char c = peek();
      if (c == 'x') {
        ++pos_;
        const unsigned long idx = parse_nat();
        if (idx < 1 || idx > dim_) fail("variable index out of range");
        unsigned long power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          power = parse_nat();
          if (power > kMaxExponent) fail("exponent too large");
        }
        mono = mono * Monomial::variable(idx - 1, static_cast<unsigned>(power));
      } else if ((c == '-' || c == '+') && next_non_ws_is('x')) {
        if (c == '-') coeff = -coeff;
        ++pos_;
        continue;
      } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_rational();
      } else {
        fail("expected rational or variable");
      }
      skip_ws();
      expect_factor = !at_end() && peek() == '*';
      if (expect_factor) ++pos_;
    }
    return Polynomial::monomial(dim_, mono, coeff);
  }

  Rational parse_rational() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    skip_ws();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError&) {
      fail("malformed rational");
    }
  }

  unsigned long parse_nat() {
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long>(peek() - '0');
      if (v > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected natural number");
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool next_non_ws_is(char want) const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == want;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t dim) {
  check_dim(dim);
  return PolyParser(text, dim).parse();
}

}  // namespace genform
