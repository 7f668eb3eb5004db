#include <gtest/gtest.h>

#include <functional>

#include "genform/harness/json_io.hpp"
#include "support.hpp"

namespace genform {
namespace {

using harness::FixtureError;
using harness::json;

std::string pointer_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const FixtureError& e) {
    return e.pointer();
  }
  return "<no error>";
}

TEST(JsonIo, GenFormRoundTrip) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      auto rng = harness::RandomSource::for_trial(testing::kSeed + 40, n * 100 + t);
      const Rational eps = rng.epsilon();
      const GenForm a = rng.gen_form(n, eps);
      const json j = json::parse(harness::to_json(a).dump());
      EXPECT_EQ(harness::gen_form_from_json(j, ""), a);
    }
  }
}

TEST(JsonIo, VectorFieldRoundTrip) {
  for (int t = 0; t < 20; ++t) {
    auto rng = harness::RandomSource::for_trial(testing::kSeed + 41, t);
    const GenVectorField V = rng.gen_vector_field(3, Rational(t % 3));
    EXPECT_EQ(harness::gen_vector_field_from_json(harness::to_json(V), ""), V);
  }
}

TEST(JsonIo, ScalarsAcceptIntegersAndStrings) {
  EXPECT_EQ(harness::rational_from_json(json(-4), ""), Rational(-4));
  EXPECT_EQ(harness::rational_from_json(json("6/4"), ""), Rational(3, 2));
  EXPECT_EQ(harness::polynomial_from_json(json(3), 2, ""), testing::P("3", 2));
  EXPECT_EQ(harness::polynomial_from_json(json("x1*x2 - 1"), 2, ""), testing::P("x1*x2 - 1", 2));
}

TEST(JsonIo, ComponentKeysAreOneBasedAndIncreasing) {
  const json good = json::parse(R"({"dim": 3, "degree": 2, "components": {"[1,3]": "x2"}})");
  EXPECT_EQ(harness::form_from_json(good, ""), testing::form_of(3, testing::idx({1, 3}), "x2"));

  const json zero_based = json::parse(R"({"dim": 3, "degree": 1, "components": {"[0]": "1"}})");
  EXPECT_EQ(pointer_of([&] { harness::form_from_json(zero_based, "/a"); }), "/a/components/[0]");
  const json unordered = json::parse(R"({"dim": 3, "degree": 2, "components": {"[3,1]": "1"}})");
  EXPECT_EQ(pointer_of([&] { harness::form_from_json(unordered, "/a"); }), "/a/components/[3,1]");
  const json wrong_grade = json::parse(R"({"dim": 3, "degree": 2, "components": {"[1]": "1"}})");
  EXPECT_EQ(pointer_of([&] { harness::form_from_json(wrong_grade, "/a"); }), "/a/components/[1]");
}

TEST(JsonIo, ErrorsCarryPointers) {
  EXPECT_EQ(pointer_of([] { harness::cover_from_json(json::parse(R"({"charts": []})")); }), "/dim");
  const json bad_tau = json::parse(R"({"dim": 1, "charts": [{"id": "1", "xi": "x1", "tau": {"r": "1/0"}}]})");
  EXPECT_EQ(pointer_of([&] { harness::cover_from_json(bad_tau); }), "/charts/0/tau/r");
  const json bad_xi = json::parse(R"({"dim": 1, "charts": [{"id": "1", "xi": "x2", "tau": {"r": 0}}]})");
  EXPECT_EQ(pointer_of([&] { harness::cover_from_json(bad_xi); }), "/charts/0/xi");
  const json missing_id = json::parse(R"({"dim": 1, "charts": [{"xi": "x1", "tau": {"r": 0}}]})");
  EXPECT_EQ(pointer_of([&] { harness::cover_from_json(missing_id); }), "/charts/0/id");
  EXPECT_EQ(pointer_of([] { harness::poly_matrix_from_json(json::parse(R"([["1", "0"], ["0"]])"), 2, "/g"); }),
            "/g/1");
  EXPECT_EQ(pointer_of([] { harness::dim_from_json(json(9), "/dim"); }), "/dim");
}

TEST(JsonIo, BundledMalformedFixtureIsRejected) {
  const json j = harness::load_json_file(std::string(GENFORM_FIXTURE_DIR) + "/malformed_cover.json");
  EXPECT_EQ(pointer_of([&] { harness::cover_from_json(j); }), "/charts/0/tau/r");
}

}  // namespace
}  // namespace genform
