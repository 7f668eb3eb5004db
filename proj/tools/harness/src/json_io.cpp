#include "genform/harness/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "genform/error.hpp"

namespace genform::harness {

namespace {

std::string child(const std::string& at, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return at + "/" + escaped;
}

std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const std::string& as_string(const json& j, const std::string& at) {
  if (!j.is_string()) throw FixtureError(at, "expected a string");
  return j.get_ref<const std::string&>();
}

const json& as_array(const json& j, const std::string& at, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) throw FixtureError(at, "expected an array");
  if (size && j.size() != *size) {
    throw FixtureError(at, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  }
  return j;
}

int int_from_json(const json& j, const std::string& at) {
  if (!j.is_number_integer()) throw FixtureError(at, "expected an integer");
  return j.get<int>();
}

std::string mask_key(Mask m) {
  std::string out = "[";
  bool first = true;
  for (int i : mask_indices(m)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "]";
}

Mask mask_from_key(const std::string& key, std::size_t dim, const std::string& at) {
  json parsed;
  try {
    parsed = json::parse(key);
  } catch (const json::parse_error&) {
    throw FixtureError(at, "component key is not a JSON index list");
  }
  if (!parsed.is_array()) throw FixtureError(at, "component key must be an index list like [1,3]");
  Mask m = 0;
  int previous = 0;
  for (const json& e : parsed) {
    if (!e.is_number_integer()) throw FixtureError(at, "component key entries must be integers");
    const int i = e.get<int>();
    if (i < 1 || static_cast<std::size_t>(i) > dim) throw FixtureError(at, "component index out of range 1.." + std::to_string(dim));
    if (i <= previous) throw FixtureError(at, "component indices must be strictly increasing");
    previous = i;
    m |= bit(static_cast<unsigned>(i - 1));
  }
  return m;
}

}  // namespace

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FixtureError("", path.string() + " is not valid JSON: " + e.what());
  }
}

const json& member(const json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) throw FixtureError(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FixtureError(child(at, key), "required member is missing");
  return *it;
}

std::size_t dim_from_json(const json& j, const std::string& at) {
  const int n = int_from_json(j, at);
  if (n < 1 || static_cast<std::size_t>(n) > kMaxDim) throw FixtureError(at, "dimension must be in 1.." + std::to_string(kMaxDim));
  return static_cast<std::size_t>(n);
}

json to_json(const Polynomial& p) { return p.str(); }
json to_json(const Rational& r) { return r.str(); }
json to_json(const ExpPoly& e) { return e.str(); }

json to_json(const OrdinaryForm& a) {
  json components = json::object();
  for (const auto& [m, c] : a.components()) components[mask_key(m)] = c.str();
  return json{{"dim", a.dim()}, {"degree", a.degree()}, {"components", components}};
}

json to_json(const GenForm& a) {
  return json{{"dim", a.dim()},
              {"epsilon", a.epsilon().str()},
              {"degree", a.degree()},
              {"body", to_json(a.body())},
              {"soul", to_json(a.soul())}};
}

json to_json(const GenVectorField& V) {
  json v = json::array();
  json vt = json::array();
  for (std::size_t r = 0; r < V.dim(); ++r) {
    v.push_back(V.v()[r].str());
    json row = json::array();
    for (std::size_t s = 0; s < V.dim(); ++s) row.push_back(V.vt()(r, s).str());
    vt.push_back(row);
  }
  return json{{"dim", V.dim()}, {"epsilon", V.epsilon().str()}, {"v", v}, {"vt", vt}};
}

namespace {

template <class T>
json matrix_json(const Matrix<T>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

json to_json(const PolyMatrix& m) { return matrix_json(m); }
json to_json(const FormMatrix& m) { return matrix_json(m); }
json to_json(const GenFormMatrix& m) { return matrix_json(m); }

Rational rational_from_json(const json& j, const std::string& at) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return Rational::parse(as_string(j, at));
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    throw FixtureError(at, std::string("bad rational: ") + e.what());
  }
}

Polynomial polynomial_from_json(const json& j, std::size_t dim, const std::string& at) {
  if (j.is_number_integer()) return Polynomial::constant(dim, Rational(j.get<long>()));
  try {
    return Polynomial::parse(as_string(j, at), dim);
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    throw FixtureError(at, std::string("bad polynomial: ") + e.what());
  }
}

OrdinaryForm form_from_json(const json& j, const std::string& at) {
  const std::size_t dim = dim_from_json(member(j, "dim", at), child(at, "dim"));
  const int degree = int_from_json(member(j, "degree", at), child(at, "degree"));
  OrdinaryForm out(dim, degree);
  const std::string comp_at = child(at, "components");
  const json& components = member(j, "components", at);
  if (!components.is_object()) throw FixtureError(comp_at, "expected an object");
  std::set<Mask> seen;
  for (const auto& [key, value] : components.items()) {
    const std::string key_at = child(comp_at, key);
    const Mask m = mask_from_key(key, dim, key_at);
    if (grade(m) != degree) throw FixtureError(key_at, "component has " + std::to_string(grade(m)) + " indices, degree is " + std::to_string(degree));
    if (!seen.insert(m).second) throw FixtureError(key_at, "component listed twice");
    out.add_term(m, polynomial_from_json(value, dim, key_at));
  }
  return out;
}

GenForm gen_form_from_json(const json& j, const std::string& at) {
  const std::size_t dim = dim_from_json(member(j, "dim", at), child(at, "dim"));
  const Rational eps = rational_from_json(member(j, "epsilon", at), child(at, "epsilon"));
  const int degree = int_from_json(member(j, "degree", at), child(at, "degree"));
  if (degree < -1 || degree > static_cast<int>(dim)) throw FixtureError(child(at, "degree"), "degree must be in -1..dim");
  const OrdinaryForm body = form_from_json(member(j, "body", at), child(at, "body"));
  const OrdinaryForm soul = form_from_json(member(j, "soul", at), child(at, "soul"));
  if (body.dim() != dim) throw FixtureError(child(child(at, "body"), "dim"), "does not match the outer dim");
  if (soul.dim() != dim) throw FixtureError(child(child(at, "soul"), "dim"), "does not match the outer dim");
  if (body.degree() != degree) throw FixtureError(child(child(at, "body"), "degree"), "body degree must equal degree");
  if (soul.degree() != degree + 1) throw FixtureError(child(child(at, "soul"), "degree"), "soul degree must equal degree + 1");
  return GenForm(body, soul, eps);
}

GenVectorField gen_vector_field_from_json(const json& j, const std::string& at) {
  const std::size_t dim = dim_from_json(member(j, "dim", at), child(at, "dim"));
  const Rational eps = rational_from_json(member(j, "epsilon", at), child(at, "epsilon"));
  const std::string v_at = child(at, "v");
  const json& v = as_array(member(j, "v", at), v_at, dim);
  VectorField field(dim);
  for (std::size_t r = 0; r < dim; ++r) field[r] = polynomial_from_json(v[r], dim, child(v_at, r));
  Tensor11 vt(dim);
  if (j.contains("vt")) {
    const PolyMatrix m = poly_matrix_from_json(j.at("vt"), dim, child(at, "vt"));
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t s = 0; s < dim; ++s) vt(r, s) = m(r, s);
    }
  }
  return GenVectorField(field, vt, eps);
}

PolyMatrix poly_matrix_from_json(const json& j, std::size_t dim, const std::string& at) {
  const json& rows = as_array(j, at);
  if (rows.empty()) throw FixtureError(at, "matrix has no rows");
  const std::size_t n = rows.size();
  PolyMatrix out(n, n, Polynomial(dim));
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row_at = child(at, r);
    const json& row = as_array(rows[r], row_at, n);
    for (std::size_t c = 0; c < n; ++c) out(r, c) = polynomial_from_json(row[c], dim, child(row_at, c));
  }
  return out;
}

FormMatrix form_matrix_from_json(const json& j, std::size_t dim, int degree, const std::string& at) {
  const json& rows = as_array(j, at, dim);
  FormMatrix out(dim, dim, OrdinaryForm(dim, degree));
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string row_at = child(at, r);
    const json& row = as_array(rows[r], row_at, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      const std::string e_at = child(row_at, c);
      OrdinaryForm e = form_from_json(row[c], e_at);
      if (e.dim() != dim) throw FixtureError(child(e_at, "dim"), "expected dim " + std::to_string(dim));
      if (e.degree() != degree) throw FixtureError(child(e_at, "degree"), "expected degree " + std::to_string(degree));
      out(r, c) = std::move(e);
    }
  }
  return out;
}

CoverData cover_from_json(const json& j) {
  CoverData cover;
  cover.dim = dim_from_json(member(j, "dim", ""), "/dim");
  const json& charts = as_array(member(j, "charts", ""), "/charts");
  for (std::size_t i = 0; i < charts.size(); ++i) {
    const std::string at = child("/charts", i);
    const json& c = charts[i];
    const std::string tau_at = child(at, "tau");
    const json& tau = member(c, "tau", at);
    const Rational r = rational_from_json(member(tau, "r", tau_at), child(tau_at, "r"));
    const Rational s = tau.contains("s") ? rational_from_json(tau.at("s"), child(tau_at, "s")) : Rational(0);
    cover.charts.push_back(ChartData{.id = as_string(member(c, "id", at), child(at, "id")),
                                     .xi = polynomial_from_json(member(c, "xi", at), cover.dim, child(at, "xi")),
                                     .tau_r = r,
                                     .tau_s = s});
  }
  if (j.contains("overlaps")) {
    const json& overlaps = as_array(j.at("overlaps"), "/overlaps");
    for (std::size_t i = 0; i < overlaps.size(); ++i) {
      const std::string at = child("/overlaps", i);
      const json& o = as_array(overlaps[i], at, 3);
      cover.overlaps.push_back(OverlapData{as_string(o[0], child(at, 0)), as_string(o[1], child(at, 1)),
                                           rational_from_json(o[2], child(at, 2))});
    }
  }
  if (j.contains("triples")) {
    const json& triples = as_array(j.at("triples"), "/triples");
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const std::string at = child("/triples", i);
      const json& t = as_array(triples[i], at, 3);
      cover.triples.push_back({as_string(t[0], child(at, 0)), as_string(t[1], child(at, 1)), as_string(t[2], child(at, 2))});
    }
  }
  return cover;
}

std::size_t term_count(const OrdinaryForm& a) {
  std::size_t n = 0;
  for (const auto& [m, c] : a.components()) n += c.terms().size();
  return n;
}

std::size_t term_count(const GenForm& a) { return term_count(a.body()) + term_count(a.soul()); }

std::size_t term_count(const GenFormMatrix& m) {
  std::size_t n = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) n += term_count(m(r, c));
  }
  return n;
}

}  // namespace genform::harness
