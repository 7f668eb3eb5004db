#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "genform/connection.hpp"
#include "genform/cover.hpp"
#include "genform/gen_form.hpp"
#include "genform/gen_vector.hpp"
#include "genform/matrix.hpp"

namespace genform::harness {

using nlohmann::json;

/// Version of every JSON report the harness emits.
inline constexpr int kReportSchema = 1;

/// Malformed fixture. `pointer` is the RFC 6901 JSON pointer of the offending
/// value, and what() includes it.
class FixtureError : public std::runtime_error {
 public:
  FixtureError(const std::string& pointer, const std::string& message)
      : std::runtime_error(pointer + ": " + message), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

json load_json_file(const std::filesystem::path& path);

json to_json(const Polynomial& p);
json to_json(const Rational& r);
json to_json(const OrdinaryForm& a);
json to_json(const GenForm& a);
json to_json(const GenVectorField& V);
json to_json(const PolyMatrix& m);
json to_json(const FormMatrix& m);
json to_json(const GenFormMatrix& m);
json to_json(const ExpPoly& e);

/// Decoders. `at` is the JSON pointer of `j` inside its document.
Rational rational_from_json(const json& j, const std::string& at);
Polynomial polynomial_from_json(const json& j, std::size_t dim, const std::string& at);
OrdinaryForm form_from_json(const json& j, const std::string& at);
GenForm gen_form_from_json(const json& j, const std::string& at);
GenVectorField gen_vector_field_from_json(const json& j, const std::string& at);
PolyMatrix poly_matrix_from_json(const json& j, std::size_t dim, const std::string& at);
FormMatrix form_matrix_from_json(const json& j, std::size_t dim, int degree, const std::string& at);
CoverData cover_from_json(const json& j);

/// Required member of an object, or FixtureError naming it.
const json& member(const json& j, const std::string& key, const std::string& at);
std::size_t dim_from_json(const json& j, const std::string& at);

/// Total number of nonzero coefficient terms; zero iff the value is zero.
std::size_t term_count(const OrdinaryForm& a);
std::size_t term_count(const GenForm& a);
std::size_t term_count(const GenFormMatrix& m);

}  // namespace genform::harness
