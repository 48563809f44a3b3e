#include "doctest.h"

#include "qkcf/algebra_io.hpp"
#include "qkcf/error.hpp"
#include "qkcf/random.hpp"

#include "json.hpp"

#include <functional>

using namespace qkcf;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInconsistency;
}

ErrorCode parse_code(const std::string &text) {
  return code_of([&] { parse_algebra(text); });
}

} // namespace

TEST_CASE("parse a small file") {
  const LoadedAlgebra a = parse_algebra(R"({
    "dim": 3, "field": "Q",
    "brackets": [ {"i": 1, "j": 2, "out": [ {"k": 3, "coeff": "1/2"} ]} ]
  })");
  CHECK(a.pair.algebra.dim() == 3);
  CHECK(a.pair.algebra.constant(0, 1, 2) == Scalar(Rational(1, 2)));
  CHECK(a.pair.algebra.constant(1, 0, 2) == Scalar(Rational(-1, 2)));
  CHECK(!a.pair.j);
  CHECK(!a.advertised);
  // integer coefficients are accepted too
  const LoadedAlgebra b = parse_algebra(
      R"({"dim": 3, "brackets": [{"i": 1, "j": 3, "out": [{"k": 2, "coeff": -4}]}]})");
  CHECK(b.pair.algebra.constant(0, 2, 1) == Scalar(-4));
}

TEST_CASE("round trip through the writer") {
  for (const std::string &name : catalog_names()) {
    CAPTURE(name);
    const CatalogEntry e = catalog(name);
    const std::string text = write_algebra(e.pair.algebra, e.pair.j);
    const LoadedAlgebra back = parse_algebra(text);
    CHECK(back.pair.algebra == e.pair.algebra);
    CHECK(back.pair.j.has_value() == e.pair.j.has_value());
    if (e.pair.j)
      CHECK(*back.pair.j == *e.pair.j);
    CHECK(write_algebra(back.pair.algebra, back.pair.j) == text);
    CHECK(nlohmann::json::parse(text).is_object());
  }
  RandomSource rng(71);
  for (int t = 0; t < 10; ++t) {
    const LieAlgebra g = rng.two_step_algebra(rng.integer(2, 6));
    CHECK(parse_algebra(write_algebra(g, std::nullopt)).pair.algebra == g);
  }
}

TEST_CASE("catalog references") {
  const LoadedAlgebra a = parse_algebra(R"("@iwasawa_j3")");
  CHECK(a.source == "@iwasawa_j3");
  CHECK(a.advertised);
  CHECK(a.pair.j);
  CHECK(load_algebra("@abelian(4)").pair.algebra.dim() == 4);
  CHECK(parse_code(R"("iwasawa_j3")") == ErrorCode::Parse);
  CHECK(code_of([] { load_algebra("@nope"); }) ==
        ErrorCode::UnknownCatalogName);
  CHECK(code_of([] { load_algebra("/nonexistent/file.json"); }) ==
        ErrorCode::Parse);
}

TEST_CASE("distinct error codes") {
  CHECK(parse_code("{") == ErrorCode::Parse);
  CHECK(parse_code("[]") == ErrorCode::Parse);
  CHECK(parse_code(R"({"brackets": []})") == ErrorCode::Parse);
  CHECK(parse_code(R"({"dim": 2, "field": "R"})") == ErrorCode::Parse);
  CHECK(parse_code(
            R"({"dim": 3, "brackets": [{"i": 2, "j": 1, "out": []}]})") ==
        ErrorCode::IndexOrder);
  CHECK(parse_code(
            R"({"dim": 3, "brackets": [{"i": 1, "j": 1, "out": []}]})") ==
        ErrorCode::IndexOrder);
  CHECK(parse_code(
            R"({"dim": 3, "brackets": [{"i": 1, "j": 4, "out": []}]})") ==
        ErrorCode::IndexRange);
  CHECK(parse_code(
            R"({"dim": 3, "brackets": [{"i": 0, "j": 2, "out": []}]})") ==
        ErrorCode::IndexRange);
  CHECK(parse_code(R"({"dim": 3, "brackets": [
          {"i": 1, "j": 2, "out": [{"k": 5, "coeff": "1"}]}]})") ==
        ErrorCode::IndexRange);
  CHECK(parse_code(R"({"dim": 3, "brackets": [
          {"i": 1, "j": 2, "out": [{"k": 3, "coeff": "1"}]},
          {"i": 1, "j": 2, "out": [{"k": 3, "coeff": "1"}]}]})") ==
        ErrorCode::DuplicatePair);
  // [e1,e2] = e2 and [e1,e3] = e1 fail Jacobi on (e1,e2,e3)
  CHECK(parse_code(R"({"dim": 3, "brackets": [
          {"i": 1, "j": 2, "out": [{"k": 2, "coeff": "1"}]},
          {"i": 1, "j": 3, "out": [{"k": 1, "coeff": "1"}]},
          {"i": 2, "j": 3, "out": [{"k": 1, "coeff": "1"}]}]})") ==
        ErrorCode::JacobiFailure);
  CHECK(parse_code(R"({"dim": 2, "field": "Q", "brackets": [
          {"i": 1, "j": 2, "out": [{"k": 1, "coeff": "i"}]}]})") ==
        ErrorCode::ComplexCoefficientInRealAlgebra);
  CHECK(parse_code(R"({"dim": 2, "brackets": [
          {"i": 1, "j": 2, "out": [{"k": 1, "coeff": "1/0"}]}]})") ==
        ErrorCode::Parse);
}

TEST_CASE("J validation") {
  CHECK(parse_code(R"({"dim": 3, "J": [["0","0","0"],["0","0","0"],["0","0","0"]]})") ==
        ErrorCode::OddDimension);
  CHECK(parse_code(R"({"dim": 2, "J": [["1","0"],["0","1"]]})") ==
        ErrorCode::NotAlmostComplex);
  CHECK(parse_code(R"({"dim": 2, "J": [["0","-1","0"],["1","0","0"]]})") ==
        ErrorCode::DimensionMismatch);
  CHECK(parse_code(R"({"dim": 4, "J": [["0","-1"],["1","0"]]})") ==
        ErrorCode::DimensionMismatch);
  const LoadedAlgebra ok =
      parse_algebra(R"({"dim": 2, "J": [["0","-1"],["1","0"]]})");
  CHECK(ok.pair.j);
  CHECK(*ok.pair.j == AlmostComplexStructure::standard(2));
}

TEST_CASE("metric parsing") {
  const HermitianMetric h = parse_metric(R"([["2","i"],["-i","2"]])");
  CHECK(h.matrix()(0, 1) == Scalar::i());
  const HermitianMetric w = parse_metric(R"({"metric": [["1","0"],["0","1"]]})");
  CHECK(w.matrix() == Matrix::identity(2));
  CHECK_THROWS_AS(parse_metric(R"([["1","2"],["3","1"]])"), Error);
  CHECK_THROWS_AS(parse_metric("nonsense"), Error);
}

TEST_CASE("matrix json") {
  const Matrix m{{1, Scalar(0, 1)}, {Rational(-1, 2), 0}};
  const auto j = nlohmann::json::parse(matrix_json(m));
  REQUIRE(j.size() == 2);
  CHECK(j[0][1] == "1*i");
  CHECK(j[1][0] == "-1/2");
}
