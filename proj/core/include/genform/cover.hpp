#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genform/exp_poly.hpp"
#include "genform/form.hpp"
#include "genform/gen_form.hpp"

namespace genform {

/// Ordinary form with polynomial coefficients viewed over ExpPoly.
ExpForm lift(const OrdinaryForm& a);

/// body + soul m over ExpPoly coefficients, for an exterior derivative with
/// dm = theta - phi m. Degree p ranges over -1..n like GenForm.
class ExpGenForm {
 public:
  ExpGenForm(ExpForm body, ExpForm soul);
  static ExpGenForm zero(std::size_t dim, int degree);
  static ExpGenForm lift(const GenForm& a);
  /// f m for a function f.
  static ExpGenForm times_m(const ExpPoly& f);

  std::size_t dim() const { return body_.dim(); }
  int degree() const { return body_.degree(); }
  const ExpForm& body() const { return body_; }
  const ExpForm& soul() const { return soul_; }
  bool is_zero() const { return body_.is_zero() && soul_.is_zero(); }

  friend bool operator==(const ExpGenForm&, const ExpGenForm&) = default;

 private:
  ExpForm body_;
  ExpForm soul_;
};

struct IdealResidual {
  /// d theta + theta phi
  ExpForm theta_part;
  /// d phi
  ExpForm phi_part;
  bool ok() const { return theta_part.is_zero() && phi_part.is_zero(); }
};

/// Residuals of the conditions under which dm = theta - phi m squares to zero.
IdealResidual ideal_residual(const ExpPoly& theta, const ExpForm& phi);

/// d a = [d alpha + (-1)^{p+1} theta alpha'] + [d alpha' - phi alpha'] m.
/// Throws ValidationError if (theta, phi) fails the ideal.
ExpGenForm general_gd(const ExpGenForm& a, const ExpPoly& theta, const ExpForm& phi);

/// One chart: phi = d xi, theta = tau exp(-xi), with tau = tau_r e^{tau_s}.
struct ChartData {
  std::string id;
  Polynomial xi;
  Rational tau_r;
  Rational tau_s;

  ExpPoly tau() const { return ExpPoly::constant(xi.dim(), tau_r, tau_s); }
  ExpPoly theta() const;
  ExpForm phi() const;
};

struct OverlapData {
  std::string i;
  std::string j;
  Rational tau_ij;
};

/// Charts share one global coordinate system, so every listed overlap is
/// everywhere and the constants are checked as exact identities.
struct CoverData {
  std::size_t dim = 0;
  std::vector<ChartData> charts;
  std::vector<OverlapData> overlaps;
  std::vector<std::array<std::string, 3>> triples;

  const ChartData& chart(const std::string& id) const;
  /// tau_IJ from the listed overlaps, using tau_JI = -tau_IJ.
  std::optional<Rational> tau_between(const std::string& i, const std::string& j) const;
  /// Checks ids are distinct, overlaps and triples reference known charts and
  /// antisymmetric duplicates agree. Throws ValidationError.
  void check_structure() const;
};

enum class CoverCase { zero_theta, nonzero_theta };

struct OverlapCheck {
  std::string i;
  std::string j;
  bool xi_difference_ok = false;  // xi_I - xi_J == tau_IJ
  bool tau_ok = false;            // tau_I == tau_J exp(tau_IJ)
  bool theta_ok = false;          // tau_I e^{-xi_I} == tau_J e^{-xi_J}
  bool ok() const { return xi_difference_ok && tau_ok && theta_ok; }
};

struct TripleCheck {
  std::array<std::string, 3> ids;
  Rational sum;  // tau_IJ + tau_JK + tau_KI
  bool ok() const { return sum.is_zero(); }
};

struct GlueReport {
  std::vector<std::string> ideal_failures;  // chart ids whose (theta, phi) fail the ideal
  std::vector<OverlapCheck> overlaps;
  std::vector<TripleCheck> triples;
  std::optional<CoverCase> cover_case;
  std::vector<std::string> problems;
  bool valid() const { return problems.empty(); }
};

GlueReport glue_validate(const CoverData& cover);

struct CanonicalChart {
  std::string id;
  ExpPoly c;         // rescaling constant c_I
  ExpPoly m_scale;   // c_I^-1 exp(xi_I), so that m~_I = m_scale m
  ExpPoly dm_tilde;  // tau_I / c_I, computed through general_gd
};

struct CanonicalCover {
  CoverCase cover_case;
  std::vector<CanonicalChart> charts;
  bool glued = false;  // m_scale agrees on every overlap
  Rational dm_tilde;

  const CanonicalChart& chart(const std::string& id) const;
};

/// Rescales m chart by chart. Case nonzero_theta uses c_I = tau_I / epsilon
/// (epsilon != 0 required); case zero_theta propagates c from 1 along a
/// spanning tree of the overlap graph. Throws ValidationError if the cover
/// fails glue_validate or the rescaled m does not glue.
CanonicalCover canonicalize(const CoverData& cover, const std::optional<Rational>& epsilon);

/// Differentiates `a` on chart `id` with dm = theta_I - phi_I m, then moves
/// the result into the rescaled basis; compares with differentiating the
/// rescaled form by d a = [d alpha + (-1)^{p+1} dm~ alpha~'] + d alpha~' m~.
bool rescaled_derivative_agrees(const CoverData& cover, const CanonicalCover& canonical, const std::string& id,
                                const ExpGenForm& a);

/// tau_I -> tau_I exp(chi), xi_I -> xi_I + chi for the chart `id`, with the
/// listed overlap constants adjusted to match.
CoverData gauge_shift(const CoverData& cover, const std::string& id, const Rational& chi);

std::string to_string(CoverCase c);

}  // namespace genform
