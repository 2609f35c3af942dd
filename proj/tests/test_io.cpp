#include <cstdio>
#include <filesystem>
#include <random>

#include "catch_amalgamated.hpp"
#include "qtwist/io.hpp"
#include "qtwist/random.hpp"
#include "qtwist/twist.hpp"

using namespace qtwist;
using io::json;

namespace {

std::string field_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const FormatError& e) {
    return e.field();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("R-matrix documents round-trip") {
  auto R = classical_rq(3, RatFunc::q());
  json doc = io::r_matrix_to_json(R);
  CHECK(doc["n"] == 3);
  CHECK(doc["entries"].size() == R.nonzero_count());
  CHECK(io::r_matrix_from_json<RatFunc>(doc) == R);
  CHECK(io::r_matrix_from_json<RatFunc>(io::parse_document(doc.dump())) == R);

  auto R2 = classical_rq(2, RatFunc::q());
  auto text = io::r_matrix_to_json(R2).dump();
  CHECK(text.find("\"q - q^-1\"") != std::string::npos);
}

TEST_CASE("R-matrix entries accept integers and strings") {
  json doc = json::parse(R"({"n": 2, "entries": [{"i": 1, "j": 1, "k": 1, "l": 1, "value": 3},
                                                  {"i": 1, "j": 2, "k": 2, "l": 1, "value": "-1/2"}]})");
  auto R = io::r_matrix_from_json<Rational>(doc);
  CHECK(R.get({1, 1, 1, 1}) == Rational(3));
  CHECK(R.get({1, 2, 2, 1}) == Rational(-1, 2));
  CHECK(R.nonzero_count() == 2);
}

TEST_CASE("R-matrix format errors name the field") {
  auto bad = [](const char* text) {
    return field_of([&] { io::r_matrix_from_json<RatFunc>(json::parse(text)); });
  };
  CHECK(bad(R"({"entries": []})") == "n");
  CHECK(bad(R"({"n": 9, "entries": []})") == "n");
  CHECK(bad(R"({"n": 2})") == "entries");
  CHECK(bad(R"({"n": 2, "entries": [{"i": 1, "j": 1, "k": 1, "l": 3, "value": "1"}]})") == "entries[0].l");
  CHECK(bad(R"({"n": 2, "entries": [{"i": 1, "j": 1, "k": 1, "value": "1"}]})") == "entries[0].l");
  CHECK(bad(R"({"n": 2, "entries": [{"i": 1, "j": 1, "k": 1, "l": 1, "value": "q^"}]})") == "entries[0].value");
  CHECK(bad(R"({"n": 2, "entries": [{"i": 1, "j": 1, "k": 1, "l": 1, "value": "0"}]})") == "entries[0].value");
  CHECK(bad(R"({"n": 2, "entries": [{"i": 1, "j": 1, "k": 1, "l": 1, "value": 1.5}]})") == "entries[0].value");
  CHECK(bad(R"({"n": 2, "entries": [{"i": 1, "j": 1, "k": 1, "l": 1, "value": "1"},
                                    {"i": 1, "j": 1, "k": 1, "l": 1, "value": "2"}]})") == "entries[1]");
  CHECK(bad(R"({"n": "2", "entries": []})") == "n");
}

TEST_CASE("malformed JSON reports the line") {
  try {
    io::parse_document("{\n  \"n\": 2,\n  \"entries\": [\n}\n", "r.json");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.field() == "r.json:4");
  }
  CHECK_THROWS_AS(io::read_file("/nonexistent/r.json"), FormatError);
}

TEST_CASE("algebra documents round-trip") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    auto A = random_quadratic_algebra<Rational>(2 + t % 3, rng);
    auto B = io::algebra_from_json<Rational>(io::algebra_to_json(A));
    CHECK(B.labels() == A.labels());
    CHECK(B.relations() == A.relations());
  }
  auto O = oq_matrix_relations(2, RatFunc::q());
  auto doc = io::algebra_to_json(O);
  CHECK(doc["gens"] == json({"x11", "x12", "x21", "x22"}));
  CHECK(doc["relations"].size() == 6);
  CHECK(relation_span_equal(io::algebra_from_json<RatFunc>(doc), O));
}

TEST_CASE("algebra format errors") {
  auto bad = [](const char* text) {
    return field_of([&] { io::algebra_from_json<Rational>(json::parse(text)); });
  };
  CHECK(bad(R"({"relations": []})") == "gens");
  CHECK(bad(R"({"gens": [], "relations": []})") == "gens");
  CHECK(bad(R"({"gens": ["x", 2], "relations": []})") == "gens[1]");
  CHECK(bad(R"({"gens": ["x"], "relations": [[{"a": 1, "b": 2, "value": "1"}]]})") == "relations[0][0].b");
  CHECK(bad(R"({"gens": ["x"], "relations": [{"a": 1}]})") == "relations[0]");
  CHECK(bad(R"({"gens": ["x"], "relations": [[{"a": 1, "b": 1}]]})") == "relations[0][0].value");
}

TEST_CASE("matrix documents") {
  Matrix<RatFunc> M{{RatFunc(2), RatFunc::q()}, {RatFunc(), RatFunc(Rational(-1, 3))}};
  json doc = {{"alpha", io::matrix_to_json(M)}};
  CHECK(doc["alpha"][0][1] == "q");
  CHECK(io::matrix_from_json<RatFunc>(doc, "alpha") == M);
  CHECK(field_of([] { io::matrix_from_json<Rational>(json::parse(R"({"alpha": [["1", "0"], ["1"]]})"), "alpha"); }) ==
        "alpha[1]");
  CHECK(field_of([] { io::matrix_from_json<Rational>(json::parse(R"({"alpha": [["1", "x"], ["0", "1"]]})"), "alpha"); }) ==
        "alpha[0][1]");
  CHECK(field_of([] { io::matrix_from_json<Rational>(json::parse(R"({"matrix": []})"), "alpha"); }) == "alpha");
}

TEST_CASE("files round-trip") {
  const auto path = (std::filesystem::temp_directory_path() / "qtwist_io_test.json").string();
  auto R = classical_rq(2, Rational(5, 2));
  io::write_file(path, io::r_matrix_to_json(R));
  CHECK(io::r_matrix_from_json<Rational>(io::read_file(path)) == R);
  std::remove(path.c_str());
}

TEST_CASE("polynomials serialise as words") {
  auto g = q_determinant(2, RatFunc::q());
  json doc = io::polynomial_to_json(g, matrix_labels(2, "x"));
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["word"] == json({"x11", "x22"}));
  CHECK(doc[0]["value"] == "1");
  CHECK(doc[1]["word"] == json({"x21", "x12"}));
  CHECK(doc[1]["value"] == "-q^-1");
}
