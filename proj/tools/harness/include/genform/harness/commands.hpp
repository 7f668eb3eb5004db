#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "genform/harness/json_io.hpp"

namespace genform::harness {

inline constexpr double kOscillatorTolerance = 1e-6;
inline constexpr double kMinimumOrder = 3.8;

struct OscillatorOptions {
  Rational epsilon;
  Rational v0;
  std::size_t l = 1;
  double t_end = 5.0;
  double dt = 1e-3;
  /// CSV trajectory destination; nothing is written when empty.
  std::filesystem::path out;
};

/// Integrates the damped oscillator from q = 1, p = 0 in every degree of
/// freedom and compares with the closed form. "pass" requires max_err below
/// kOscillatorTolerance and an observed order of at least kMinimumOrder.
json run_oscillator(const OscillatorOptions& options);

/// Hamiltonian fixture:
///   {"s": <GenForm>, "omega_inv": [[poly]],
///    "hamiltonians": [{"name": str, "H": <GenForm>, "gauge": poly?}]}
/// For each H: builds V_H, checks i_V s + dH = 0 and L_V s = 0, and with a
/// gauge function l checks that H + d(l m) has the same field. Consecutive
/// pairs are checked for bracket closure.
json run_hamiltonian(const json& fixture);

/// Connection fixture:
///   {"dim": n, "gamma": [[poly]], "gamma_inv": [[poly]],
///    "alpha": [[<form>]]?, "chi": [[<form>]]?, "beta_tilde": [[<form>]]?, "epsilon": r?}
/// `alpha` defaults to the Levi-Civita connection of gamma; `chi` (case i)
/// defaults to zero; `epsilon` is required for case ii.
json run_connection_theorem(const json& fixture, const std::string& which_case);

/// Cover validation and canonicalization; epsilon is needed for case ii.
json run_cover(const json& fixture, const std::optional<Rational>& epsilon);

}  // namespace genform::harness
