#include "genform/harness/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "genform/connection.hpp"
#include "genform/gen_vector.hpp"
#include "genform/harness/random.hpp"
#include "genform/superspace.hpp"

namespace genform::harness {

namespace {

struct Trial {
  std::size_t n;
  Rational eps;
  int degree;  // degree of the primary form
};

// Empty when the identity holds; otherwise (inputs, residual).
using Outcome = std::optional<std::pair<json, json>>;
using Check = std::function<Outcome(RandomSource&, const Trial&)>;

struct Identity {
  const char* name;
  Check check;
};

Rational sign(int p) { return p % 2 == 0 ? Rational(1) : Rational(-1); }

Outcome holds() { return std::nullopt; }
Outcome fails(json inputs, json residual) { return std::make_pair(std::move(inputs), std::move(residual)); }

Outcome expect_equal(const GenForm& lhs, const GenForm& rhs, const std::function<json()>& inputs) {
  if (lhs == rhs) return holds();
  if (lhs.degree() == rhs.degree() && lhs.epsilon() == rhs.epsilon()) return fails(inputs(), to_json(lhs - rhs));
  return fails(inputs(), json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
}

Outcome expect_zero(const GenForm& r, const std::function<json()>& inputs) {
  return r.is_zero() ? holds() : fails(inputs(), to_json(r));
}

Outcome expect_equal(const GenFormMatrix& lhs, const GenFormMatrix& rhs, const std::function<json()>& inputs) {
  if (lhs == rhs) return holds();
  return fails(inputs(), to_json(lhs - rhs));
}

json field_json(const VectorField& v) {
  json out = json::array();
  for (const Polynomial& c : v.components()) out.push_back(c.str());
  return out;
}

json connection_json(const GenConnection& A) { return to_json(A.matrix()); }

const std::vector<Identity>& gform_identities() {
  static const std::vector<Identity> ids = {
      {"d_squared",
       [](RandomSource& rng, const Trial& t) {
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_zero(exterior_derivative(exterior_derivative(a)), [&] { return json{{"a", to_json(a)}}; });
       }},
      {"anti_derivation",
       [](RandomSource& rng, const Trial& t) {
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps), b = rng.gen_form(t.n, t.eps);
         return expect_equal(exterior_derivative(a * b),
                             exterior_derivative(a) * b + sign(a.degree()) * (a * exterior_derivative(b)),
                             [&] { return json{{"a", to_json(a)}, {"b", to_json(b)}}; });
       }},
      {"graded_commutativity",
       [](RandomSource& rng, const Trial& t) {
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps), b = rng.gen_form(t.n, t.eps);
         return expect_equal(a * b, sign(a.degree() * b.degree()) * (b * a),
                             [&] { return json{{"a", to_json(a)}, {"b", to_json(b)}}; });
       }},
      {"associativity",
       [](RandomSource& rng, const Trial& t) {
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps), b = rng.gen_form(t.n, t.eps),
                       c = rng.gen_form(t.n, t.eps);
         return expect_equal((a * b) * c, a * (b * c),
                             [&] { return json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}; });
       }},
  };
  return ids;
}

const std::vector<Identity>& cartan_identities() {
  static const std::vector<Identity> ids = {
      {"interior_anticommute",
       [](RandomSource& rng, const Trial& t) {
         const VectorField v = rng.vector_field(t.n), w = rng.vector_field(t.n);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_zero(interior(v, interior(w, a)) + interior(w, interior(v, a)), [&] {
           return json{{"v", field_json(v)}, {"w", field_json(w)}, {"a", to_json(a)}};
         });
       }},
      {"lie_is_d_i_plus_i_d",
       [](RandomSource& rng, const Trial& t) {
         const VectorField v = rng.vector_field(t.n);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(lie_derivative(v, a),
                             exterior_derivative(interior(v, a)) + interior(v, exterior_derivative(a)),
                             [&] { return json{{"v", field_json(v)}, {"a", to_json(a)}}; });
       }},
      {"d_commutes_with_lie",
       [](RandomSource& rng, const Trial& t) {
         const VectorField v = rng.vector_field(t.n);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(exterior_derivative(lie_derivative(v, a)), lie_derivative(v, exterior_derivative(a)),
                             [&] { return json{{"v", field_json(v)}, {"a", to_json(a)}}; });
       }},
      {"lie_commutator",
       [](RandomSource& rng, const Trial& t) {
         const VectorField v = rng.vector_field(t.n), w = rng.vector_field(t.n);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(lie_derivative(v, lie_derivative(w, a)) - lie_derivative(w, lie_derivative(v, a)),
                             lie_derivative(bracket(v, w), a), [&] {
                               return json{{"v", field_json(v)}, {"w", field_json(w)}, {"a", to_json(a)}};
                             });
       }},
      {"lie_interior_commutator",
       [](RandomSource& rng, const Trial& t) {
         const VectorField v = rng.vector_field(t.n), w = rng.vector_field(t.n);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(lie_derivative(v, interior(w, a)) - interior(w, lie_derivative(v, a)),
                             interior(bracket(v, w), a), [&] {
                               return json{{"v", field_json(v)}, {"w", field_json(w)}, {"a", to_json(a)}};
                             });
       }},
  };
  return ids;
}

// Pure parts v^a_b = v^c Xi^a_{cb} with Xi antisymmetric in its lower indices.
std::pair<GenVectorField, GenVectorField> xi_pair(RandomSource& rng, std::size_t n, const Rational& eps) {
  std::vector<std::vector<std::vector<Polynomial>>> xi(
      n, std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n, Polynomial(n))));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t b = c + 1; b < n; ++b) {
        xi[a][c][b] = rng.polynomial(n, 1);
        xi[a][b][c] = -xi[a][c][b];
      }
    }
  }
  auto make = [&](const VectorField& v) {
    Tensor11 t(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) t(a, b) += v[c] * xi[a][c][b];
      }
    }
    return GenVectorField(v, t, eps);
  };
  const VectorField v = rng.vector_field(n, 1);
  const VectorField w = rng.vector_field(n, 1);
  return {make(v), make(w)};
}

const std::vector<Identity>& gvector_identities() {
  static const std::vector<Identity> ids = {
      {"leibniz",
       [](RandomSource& rng, const Trial& t) -> Outcome {
         const GenVectorField V = rng.gen_vector_field(t.n, t.eps);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps), b = rng.gen_form(t.n, t.eps);
         auto inputs = [&] { return json{{"V", to_json(V)}, {"a", to_json(a)}, {"b", to_json(b)}}; };
         if (auto o = expect_equal(interior(V, a * b), interior(V, a) * b + sign(a.degree()) * (a * interior(V, b)),
                                   inputs)) {
           return o;
         }
         return expect_equal(lie_derivative(V, a * b), lie_derivative(V, a) * b + a * lie_derivative(V, b), inputs);
       }},
      {"anticommutator_closed_form",
       [](RandomSource& rng, const Trial& t) {
         const GenVectorField V = rng.gen_vector_field(t.n, t.eps), W = rng.gen_vector_field(t.n, t.eps);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(interior_anticommutator(V, W, a), interior_anticommutator_closed_form(V, W, a),
                             [&] { return json{{"V", to_json(V)}, {"W", to_json(W)}, {"a", to_json(a)}}; });
       }},
      {"xi_type_anticommute",
       [](RandomSource& rng, const Trial& t) {
         const auto [V, W] = xi_pair(rng, t.n, t.eps);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_zero(interior_anticommutator(V, W, a),
                            [&] { return json{{"V", to_json(V)}, {"W", to_json(W)}, {"a", to_json(a)}}; });
       }},
      {"bracket_defining_relation",
       [](RandomSource& rng, const Trial& t) {
         const GenVectorField V = rng.gen_vector_field(t.n, t.eps), W = rng.gen_vector_field(t.n, t.eps);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(lie_derivative(V, lie_derivative(W, a)) - lie_derivative(W, lie_derivative(V, a)),
                             lie_derivative(bracket(V, W), a),
                             [&] { return json{{"V", to_json(V)}, {"W", to_json(W)}, {"a", to_json(a)}}; });
       }},
      {"jacobi",
       [](RandomSource& rng, const Trial& t) -> Outcome {
         const GenVectorField U = rng.gen_vector_field(t.n, t.eps, 1), V = rng.gen_vector_field(t.n, t.eps),
                              W = rng.gen_vector_field(t.n, t.eps);
         const GenVectorField sum =
             bracket(U, bracket(V, W)) + bracket(V, bracket(W, U)) + bracket(W, bracket(U, V));
         if (sum == GenVectorField::zero(t.n, t.eps)) return holds();
         return fails(json{{"U", to_json(U)}, {"V", to_json(V)}, {"W", to_json(W)}}, to_json(sum));
       }},
  };
  return ids;
}

const std::vector<Identity>& super_identities() {
  static const std::vector<Identity> ids = {
      {"product",
       [](RandomSource& rng, const Trial& t) {
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps), b = rng.gen_form(t.n, t.eps);
         return expect_equal(from_super(to_super(a) * to_super(b), a.degree() + b.degree()), a * b,
                             [&] { return json{{"a", to_json(a)}, {"b", to_json(b)}}; });
       }},
      {"exterior_derivative",
       [](RandomSource& rng, const Trial& t) {
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(from_super(super_d(to_super(a)), a.degree() + 1), exterior_derivative(a),
                             [&] { return json{{"a", to_json(a)}}; });
       }},
      {"interior_ordinary",
       [](RandomSource& rng, const Trial& t) {
         const VectorField v = rng.vector_field(t.n);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(from_super(super_interior(v, to_super(a)), a.degree() - 1), interior(v, a),
                             [&] { return json{{"v", field_json(v)}, {"a", to_json(a)}}; });
       }},
      {"lie_ordinary",
       [](RandomSource& rng, const Trial& t) {
         const VectorField v = rng.vector_field(t.n);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(from_super(super_lie(v, to_super(a)), a.degree()), lie_derivative(v, a),
                             [&] { return json{{"v", field_json(v)}, {"a", to_json(a)}}; });
       }},
      {"interior_generalized",
       [](RandomSource& rng, const Trial& t) {
         const GenVectorField V = rng.gen_vector_field(t.n, t.eps);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(from_super(super_interior(V, to_super(a)), a.degree() - 1), interior(V, a),
                             [&] { return json{{"V", to_json(V)}, {"a", to_json(a)}}; });
       }},
      {"lie_generalized",
       [](RandomSource& rng, const Trial& t) {
         const GenVectorField V = rng.gen_vector_field(t.n, t.eps);
         const GenForm a = rng.gen_form(t.n, t.degree, t.eps);
         return expect_equal(from_super(super_lie(V, to_super(a)), a.degree()), lie_derivative(V, a),
                             [&] { return json{{"V", to_json(V)}, {"a", to_json(a)}}; });
       }},
  };
  return ids;
}

const std::vector<Identity>& connection_identities() {
  static const std::vector<Identity> ids = {
      {"bianchi",
       [](RandomSource& rng, const Trial& t) -> Outcome {
         const GenConnection A = rng.connection(t.n, t.eps);
         const GenFormMatrix r = bianchi_residual(A);
         if (is_zero(r)) return holds();
         return fails(json{{"A", connection_json(A)}}, to_json(r));
       }},
      {"curvature_conjugation",
       [](RandomSource& rng, const Trial& t) {
         const GenConnection A = rng.connection(t.n, t.eps);
         const auto [G, G_inv] = t.n > 2 ? rng.low_degree_gauge(t.n) : rng.gauge(t.n);
         return expect_equal(curvature(transform_connection(A, G, G_inv)), conjugate(curvature(A), G, G_inv), [&] {
           return json{{"A", connection_json(A)}, {"G", to_json(G)}, {"G_inv", to_json(G_inv)}};
         });
       }},
      {"curvature_expansion",
       [](RandomSource& rng, const Trial& t) {
         const GenConnection A = rng.connection(t.n, t.eps);
         return expect_equal(curvature(A), curvature_expanded(A), [&] { return json{{"A", connection_json(A)}}; });
       }},
      {"cov_deriv_expansion",
       [](RandomSource& rng, const Trial& t) -> Outcome {
         const GenConnection A = rng.connection(t.n, t.eps);
         const GenVectorField V = rng.gen_vector_field(t.n, t.eps, 1);
         const std::vector<GenForm> lhs = cov_deriv_vf(A, V), rhs = cov_deriv_vf_expanded(A, V);
         if (lhs == rhs) return holds();
         json residual = json::array();
         for (std::size_t i = 0; i < lhs.size(); ++i) residual.push_back(to_json(lhs[i] - rhs[i]));
         return fails(json{{"A", connection_json(A)}, {"V", to_json(V)}}, residual);
       }},
      {"nonmetricity_expansion",
       [](RandomSource& rng, const Trial& t) {
         const auto [gamma, gamma_inv] = rng.metric(t.n);
         const GenMetric g = GenMetric::from_parts(gamma, rng.symmetric_form_matrix(t.n, 1), gamma_inv, t.eps);
         const GenConnection A = rng.connection(t.n, t.eps);
         return expect_equal(nonmetricity(A, g), nonmetricity_expanded(A, g), [&] {
           return json{{"A", connection_json(A)}, {"g", to_json(g.matrix())}, {"gamma_inv", to_json(gamma_inv)}};
         });
       }},
  };
  return ids;
}

struct SuiteDef {
  const char* name;
  const std::vector<Identity>& (*identities)();
};

const std::vector<SuiteDef>& suite_defs() {
  static const std::vector<SuiteDef> defs = {{"cartan", cartan_identities},
                                             {"gform", gform_identities},
                                             {"gvector", gvector_identities},
                                             {"super", super_identities},
                                             {"connection", connection_identities}};
  return defs;
}

Rational cycled_epsilon(std::size_t t) {
  static const Rational kCycle[] = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2)};
  return kCycle[t % std::size(kCycle)];
}

SuiteReport run_def(std::size_t suite_index, const SuiteDef& def, const SuiteOptions& options) {
  if (options.dim < 1 || options.dim > kMaxDim) {
    throw std::invalid_argument("dimension must be in 1.." + std::to_string(kMaxDim));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Identity>& ids = def.identities();
  const std::size_t n = options.dim;
  const std::size_t total = ids.size() * options.trials;

  auto trial_of = [&](std::size_t t) {
    return Trial{n, options.epsilon.value_or(cycled_epsilon(t)),
                 -1 + static_cast<int>(t % (n + 2))};
  };

  std::vector<std::optional<SuiteFailure>> results(total);
  std::vector<double> seconds(total, 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      const std::size_t i = k / options.trials;
      const std::size_t t = k % options.trials;
      const Trial trial = trial_of(t);
      const std::uint64_t index = (std::uint64_t{suite_index} << 40) | (std::uint64_t{i} << 32) | t;
      RandomSource rng = RandomSource::for_trial(options.seed, index);
      const std::string case_id = std::string(def.name) + "/" + ids[i].name + "/" + std::to_string(t);
      Outcome outcome;
      const auto trial_start = std::chrono::steady_clock::now();
      try {
        outcome = ids[i].check(rng, trial);
      } catch (const std::exception& e) {
        outcome = fails(json::object(), json{{"exception", e.what()}});
      }
      seconds[k] = std::chrono::duration<double>(std::chrono::steady_clock::now() - trial_start).count();
      if (outcome) {
        outcome->first["epsilon"] = trial.eps.str();
        results[k] = SuiteFailure{case_id, std::move(outcome->first), std::move(outcome->second)};
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  SuiteReport report;
  report.suite = def.name;
  report.trials = options.trials;
  json per_identity = json::array();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::size_t failed = 0;
    double busy = 0.0;
    for (std::size_t t = 0; t < options.trials; ++t) {
      busy += seconds[i * options.trials + t];
      auto& r = results[i * options.trials + t];
      if (!r) continue;
      ++failed;
      report.failures.push_back(std::move(*r));
    }
    per_identity.push_back({{"name", ids[i].name}, {"trials", options.trials}, {"failures", failed}, {"wall_time_s", busy}});
  }
  std::set<std::string> eps_seen;
  std::set<int> degrees_seen;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const Trial trial = trial_of(t);
    eps_seen.insert(trial.eps.str());
    degrees_seen.insert(trial.degree);
  }
  report.extra = json{{"dim", n},
                      {"seed", options.seed},
                      {"epsilon", options.epsilon ? json(options.epsilon->str()) : json("cycle")},
                      {"identities", per_identity},
                      {"epsilons_covered", eps_seen},
                      {"degrees_covered", degrees_seen}};
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

json SuiteReport::to_json() const {
  json failures_json = json::array();
  for (const SuiteFailure& f : failures) {
    failures_json.push_back({{"case_id", f.case_id}, {"inputs", f.inputs}, {"residual", f.residual}});
  }
  json out{{"schema", kReportSchema}, {"suite", suite},  {"trials", trials},
           {"failures", failures_json}, {"pass", pass()}, {"wall_time_s", wall_time_s}};
  for (const auto& [k, v] : extra.items()) out[k] = v;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteDef& d : suite_defs()) out.emplace_back(d.name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const std::vector<SuiteDef>& defs = suite_defs();
  for (std::size_t i = 0; i < defs.size(); ++i) {
    if (name == defs[i].name) return run_def(i, defs[i], options);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteReport run_all_suites(const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport all;
  all.suite = "all";
  all.trials = options.trials;
  json suites = json::array();
  for (const std::string& name : suite_names()) {
    SuiteReport r = run_suite(name, options);
    suites.push_back(r.to_json());
    for (SuiteFailure& f : r.failures) all.failures.push_back(std::move(f));
  }
  all.extra = json{{"dim", options.dim},
                   {"seed", options.seed},
                   {"epsilon", options.epsilon ? json(options.epsilon->str()) : json("cycle")},
                   {"suites", suites}};
  all.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return all;
}

json strip_timing(json report) {
  if (report.is_object()) {
    report.erase("wall_time_s");
    for (auto& [k, v] : report.items()) v = strip_timing(v);
  } else if (report.is_array()) {
    for (json& v : report) v = strip_timing(v);
  }
  return report;
}

}  // namespace genform::harness
