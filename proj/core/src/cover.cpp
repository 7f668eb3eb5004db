#include "genform/cover.hpp"

#include <deque>
#include <set>

#include "genform/error.hpp"

namespace genform {

namespace {

ExpPoly e_to(std::size_t dim, const Rational& s) { return ExpPoly::constant(dim, Rational(1), s); }

ExpForm scale(const ExpPoly& f, const ExpForm& a) { return f * a; }

}  // namespace

ExpForm lift(const OrdinaryForm& a) {
  ExpForm out(a.dim(), a.degree());
  for (const auto& [m, c] : a.components()) out.add_term(m, ExpPoly(c));
  return out;
}

ExpGenForm::ExpGenForm(ExpForm body, ExpForm soul) : body_(std::move(body)), soul_(std::move(soul)) {
  if (body_.dim() != soul_.dim()) throw DimensionError("ExpGenForm: body and soul dimensions differ");
  if (soul_.degree() != body_.degree() + 1) throw DegreeError("ExpGenForm: soul degree must be body degree + 1");
}

ExpGenForm ExpGenForm::zero(std::size_t dim, int degree) { return ExpGenForm(ExpForm(dim, degree), ExpForm(dim, degree + 1)); }

ExpGenForm ExpGenForm::lift(const GenForm& a) { return ExpGenForm(genform::lift(a.body()), genform::lift(a.soul())); }

ExpGenForm ExpGenForm::times_m(const ExpPoly& f) { return ExpGenForm(ExpForm(f.dim(), -1), ExpForm::scalar(f)); }

IdealResidual ideal_residual(const ExpPoly& theta, const ExpForm& phi) {
  if (phi.degree() != 1) throw DegreeError("ideal_residual: phi must be a 1-form");
  if (phi.dim() != theta.dim()) throw DimensionError("ideal_residual: dimension mismatch");
  return IdealResidual{exterior_derivative(ExpForm::scalar(theta)) + scale(theta, phi), exterior_derivative(phi)};
}

ExpGenForm general_gd(const ExpGenForm& a, const ExpPoly& theta, const ExpForm& phi) {
  if (!ideal_residual(theta, phi).ok()) throw ValidationError("general_gd: (theta, phi) does not satisfy the ideal");
  if (a.dim() != theta.dim()) throw DimensionError("general_gd: dimension mismatch");
  const int p = a.degree();
  ExpForm body = exterior_derivative(a.body());
  const ExpForm theta_soul = scale(theta, a.soul());
  if (p % 2 == 0) {
    body -= theta_soul;
  } else {
    body += theta_soul;
  }
  ExpForm soul = exterior_derivative(a.soul()) - wedge(phi, a.soul());
  return ExpGenForm(std::move(body), std::move(soul));
}

ExpPoly ChartData::theta() const { return ExpPoly::exp(Polynomial::constant(xi.dim(), tau_s) - xi, tau_r); }

ExpForm ChartData::phi() const { return lift(exterior_derivative(OrdinaryForm::scalar(xi))); }

const ChartData& CoverData::chart(const std::string& id) const {
  for (const ChartData& c : charts) {
    if (c.id == id) return c;
  }
  throw ValidationError("cover: unknown chart '" + id + "'");
}

std::optional<Rational> CoverData::tau_between(const std::string& i, const std::string& j) const {
  for (const OverlapData& o : overlaps) {
    if (o.i == i && o.j == j) return o.tau_ij;
    if (o.i == j && o.j == i) return -o.tau_ij;
  }
  return std::nullopt;
}

void CoverData::check_structure() const {
  if (charts.empty()) throw ValidationError("cover: no charts");
  std::set<std::string> ids;
  for (const ChartData& c : charts) {
    if (!ids.insert(c.id).second) throw ValidationError("cover: duplicate chart id '" + c.id + "'");
    if (c.xi.dim() != dim) throw DimensionError("cover: chart '" + c.id + "' has the wrong dimension");
  }
  for (const OverlapData& o : overlaps) {
    if (!ids.count(o.i) || !ids.count(o.j)) {
      throw ValidationError("cover: overlap (" + o.i + ", " + o.j + ") references an unknown chart");
    }
    if (o.i == o.j) throw ValidationError("cover: overlap of chart '" + o.i + "' with itself");
    if (tau_between(o.i, o.j) != o.tau_ij) {
      throw ValidationError("cover: overlap (" + o.i + ", " + o.j + ") is listed twice with inconsistent constants");
    }
  }
  for (const auto& t : triples) {
    for (const std::string& id : t) {
      if (!ids.count(id)) throw ValidationError("cover: triple references unknown chart '" + id + "'");
    }
  }
}

GlueReport glue_validate(const CoverData& cover) {
  cover.check_structure();
  const std::size_t n = cover.dim;
  GlueReport report;

  for (const ChartData& c : cover.charts) {
    if (!ideal_residual(c.theta(), c.phi()).ok()) {
      report.ideal_failures.push_back(c.id);
      report.problems.push_back("chart " + c.id + ": theta, phi fail the ideal");
    }
  }

  for (const OverlapData& o : cover.overlaps) {
    const ChartData& ci = cover.chart(o.i);
    const ChartData& cj = cover.chart(o.j);
    OverlapCheck check{.i = o.i, .j = o.j};
    check.xi_difference_ok = ci.xi - cj.xi == Polynomial::constant(n, o.tau_ij);
    check.tau_ok = ci.tau() == cj.tau() * e_to(n, o.tau_ij);
    check.theta_ok = ci.theta() == cj.theta();
    if (!check.xi_difference_ok) report.problems.push_back("overlap " + o.i + "," + o.j + ": xi_I - xi_J != tau_IJ");
    if (!check.tau_ok) report.problems.push_back("overlap " + o.i + "," + o.j + ": tau_I != tau_J exp(tau_IJ)");
    if (!check.theta_ok) report.problems.push_back("overlap " + o.i + "," + o.j + ": theta differs");
    report.overlaps.push_back(check);
  }

  for (const auto& t : cover.triples) {
    const auto ij = cover.tau_between(t[0], t[1]);
    const auto jk = cover.tau_between(t[1], t[2]);
    const auto ki = cover.tau_between(t[2], t[0]);
    const std::string label = t[0] + "," + t[1] + "," + t[2];
    if (!ij || !jk || !ki) {
      report.problems.push_back("triple " + label + ": an overlap constant is missing");
      continue;
    }
    TripleCheck check{.ids = t, .sum = *ij + *jk + *ki};
    if (!check.ok()) report.problems.push_back("triple " + label + ": cocycle sum is " + check.sum.str());
    report.triples.push_back(check);
  }

  bool any_zero = false;
  bool any_nonzero = false;
  for (const ChartData& c : cover.charts) (c.tau_r.is_zero() ? any_zero : any_nonzero) = true;
  if (any_zero && any_nonzero) {
    std::string where;
    for (const OverlapData& o : cover.overlaps) {
      if (cover.chart(o.i).tau_r.is_zero() != cover.chart(o.j).tau_r.is_zero()) {
        where = "overlap " + o.i + "," + o.j;
        break;
      }
    }
    if (where.empty()) where = "charts in disconnected parts of the overlap graph";
    report.problems.push_back("mixed zero and nonzero tau: " + where);
  } else {
    report.cover_case = any_zero ? CoverCase::zero_theta : CoverCase::nonzero_theta;
  }
  return report;
}

const CanonicalChart& CanonicalCover::chart(const std::string& id) const {
  for (const CanonicalChart& c : charts) {
    if (c.id == id) return c;
  }
  throw ValidationError("canonical cover: unknown chart '" + id + "'");
}

CanonicalCover canonicalize(const CoverData& cover, const std::optional<Rational>& epsilon) {
  const GlueReport report = glue_validate(cover);
  if (!report.valid()) throw ValidationError("canonicalize: cover is invalid: " + report.problems.front());
  const std::size_t n = cover.dim;
  const CoverCase kind = *report.cover_case;

  std::map<std::string, ExpPoly> c;
  if (kind == CoverCase::nonzero_theta) {
    if (!epsilon || epsilon->is_zero()) throw ValidationError("canonicalize: case (ii) needs a nonzero epsilon");
    for (const ChartData& chart : cover.charts) c.emplace(chart.id, chart.tau() * (Rational(1) / *epsilon));
  } else {
    // c_I = c_J exp(tau_IJ), so c_J = c_I exp(-tau_IJ) along the tree.
    for (const ChartData& root : cover.charts) {
      if (c.count(root.id)) continue;
      c.emplace(root.id, ExpPoly::constant(n, Rational(1)));
      std::deque<std::string> queue{root.id};
      while (!queue.empty()) {
        const std::string cur = queue.front();
        queue.pop_front();
        for (const ChartData& next : cover.charts) {
          if (c.count(next.id)) continue;
          const auto tau = cover.tau_between(cur, next.id);
          if (!tau) continue;
          c.emplace(next.id, c.at(cur) * e_to(n, -*tau));
          queue.push_back(next.id);
        }
      }
    }
  }

  CanonicalCover out{.cover_case = kind, .charts = {}, .glued = true, .dm_tilde = Rational(0)};
  std::optional<Rational> dm;
  for (const ChartData& chart : cover.charts) {
    const ExpPoly& ci = c.at(chart.id);
    CanonicalChart cc{.id = chart.id, .c = ci, .m_scale = ci.inverse() * ExpPoly::exp(chart.xi), .dm_tilde = ExpPoly(n)};
    const ExpGenForm dm_i = general_gd(ExpGenForm::times_m(cc.m_scale), chart.theta(), chart.phi());
    if (!dm_i.soul().is_zero()) throw ValidationError("canonicalize: d m~ has an m component on chart " + chart.id);
    cc.dm_tilde = dm_i.body().component(0);
    const auto [r, s] = cc.dm_tilde.as_scaled_exponential();
    if (!cc.dm_tilde.is_constant() || !s.is_zero()) {
      throw ValidationError("canonicalize: d m~ is not a rational constant on chart " + chart.id);
    }
    if (dm && *dm != r) throw ValidationError("canonicalize: d m~ differs between charts");
    dm = r;
    out.charts.push_back(std::move(cc));
  }
  out.dm_tilde = dm.value_or(Rational(0));

  for (const OverlapData& o : cover.overlaps) {
    const bool scale_ok = c.at(o.i) == c.at(o.j) * e_to(n, o.tau_ij);
    const bool m_ok = out.chart(o.i).m_scale == out.chart(o.j).m_scale;
    if (!scale_ok || !m_ok) out.glued = false;
  }
  if (!out.glued) throw ValidationError("canonicalize: rescaled m does not glue");
  return out;
}

bool rescaled_derivative_agrees(const CoverData& cover, const CanonicalCover& canonical, const std::string& id,
                                const ExpGenForm& a) {
  const ChartData& chart = cover.chart(id);
  const CanonicalChart& cc = canonical.chart(id);
  const ExpPoly to_tilde = cc.m_scale.inverse();  // c_I exp(-xi_I)

  const ExpGenForm direct = general_gd(a, chart.theta(), chart.phi());
  const ExpForm direct_soul = scale(to_tilde, direct.soul());

  const ExpForm soul_tilde = scale(to_tilde, a.soul());
  ExpForm body = exterior_derivative(a.body());
  const ExpForm dm_term = scale(cc.dm_tilde, soul_tilde);
  if (a.degree() % 2 == 0) {
    body -= dm_term;
  } else {
    body += dm_term;
  }
  return direct.body() == body && direct_soul == exterior_derivative(soul_tilde);
}

CoverData gauge_shift(const CoverData& cover, const std::string& id, const Rational& chi) {
  CoverData out = cover;
  bool found = false;
  for (ChartData& c : out.charts) {
    if (c.id != id) continue;
    c.xi += Polynomial::constant(cover.dim, chi);
    c.tau_s += chi;
    found = true;
  }
  if (!found) throw ValidationError("gauge_shift: unknown chart '" + id + "'");
  for (OverlapData& o : out.overlaps) {
    if (o.i == id) o.tau_ij += chi;
    if (o.j == id) o.tau_ij -= chi;
  }
  return out;
}

std::string to_string(CoverCase c) { return c == CoverCase::zero_theta ? "i" : "ii"; }

}  // namespace genform
