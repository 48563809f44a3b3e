#include "doctest.h"

#include "oracles.hpp"
#include "qkcf/error.hpp"
#include "qkcf/linalg.hpp"
#include "qkcf/random.hpp"

using namespace qkcf;

TEST_CASE("rational canonical form and text round trip") {
  const Rational q = parse_rational("-6/4");
  CHECK(q == Rational(-3, 2));
  CHECK(q.get_den() > 0);
  CHECK(to_string(q) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("6/-4"), Error);
}

TEST_CASE("gaussian rational text format") {
  for (const char *s : {"3/4", "-2", "5/7*i", "-1/2*i", "1/2+3/4*i",
                        "-1/2-3/4*i", "0"}) {
    CAPTURE(s);
    CHECK(Scalar::parse(s).str() == s);
  }
  CHECK(Scalar::parse("i") == Scalar::i());
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("2+i") == Scalar(2, 1));
  CHECK_THROWS_AS(Scalar::parse("1+2"), Error);
}

TEST_CASE("gaussian rational invariants") {
  RandomSource rng(7);
  for (int t = 0; t < 200; ++t) {
    const Scalar z = rng.gaussian(9);
    CHECK(z.conj().conj() == z);
    const Scalar n = z * z.conj();
    CHECK(n.im() == 0);
    CHECK(n.re() >= 0);
    if (!z.is_zero())
      CHECK(z * z.inverse() == Scalar(1));
    CHECK(Scalar::parse(z.str()) == z);
  }
  CHECK_THROWS_AS(Scalar().inverse(), Error);
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(rank(Matrix::zero(3, 5)) == 0);
  CHECK(rank(Matrix{{1, 1}, {2, 2}}) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(5)).empty());
  CHECK(kernel_basis(Matrix::zero(2, 3)).size() == 3);
  const Matrix m{{1, 1, 0}, {0, 0, 1}};
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  // proportional to (1, -1, 0)
  CHECK(k[0][2].is_zero());
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!k[0][0].is_zero());
}

TEST_CASE("solve examples") {
  const Matrix b{{2}, {Scalar(1, 3)}, {-5}};
  CHECK(*solve(Matrix::identity(3), b) == b);

  const Matrix row{{1, 1}};
  const auto x = solve(row, Matrix{{3}});
  REQUIRE(x);
  CHECK(row * *x == Matrix{{3}});

  CHECK(!solve(Matrix{{1}, {1}}, Matrix{{1}, {2}}));
  CHECK_THROWS_AS(solve(Matrix{{1}, {1}}, Matrix{{1}}), Error);
}

TEST_CASE("inverse examples") {
  CHECK(inverse(Matrix::identity(4)) == Matrix::identity(4));
  const Scalar d[] = {2, Rational(1, 3)};
  const Scalar di[] = {Rational(1, 2), 3};
  CHECK(inverse(Matrix::diagonal(d)) == Matrix::diagonal(di));
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), Error);

  RandomSource rng(11);
  for (int t = 0; t < 10; ++t) {
    const Matrix m = rng.invertible(6, true);
    CHECK(m * inverse(m) == Matrix::identity(6));
    CHECK(inverse(m) * m == Matrix::identity(6));
  }
}

TEST_CASE("rank plus nullity, two elimination routes and an oracle") {
  RandomSource rng(3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = rng.integer(1, 7), cols = rng.integer(1, 7);
    Matrix m = rng.matrix(rows, cols, t % 2 == 0, 3);
    // force some rank deficiency
    if (rows > 1 && t % 3 == 0)
      for (std::size_t c = 0; c < cols; ++c)
        m(rows - 1, c) = m(0, c) * Scalar(2, -1);
    const std::size_t r = rank(m);
    CHECK(r == reduce(m).rank());
    CHECK(r == oracle::rank(m));
    const auto k = kernel_basis(m);
    CHECK(r + k.size() == cols);
    for (const Vector &v : k)
      CHECK(is_zero(m * v));
    if (!k.empty())
      CHECK(rank(Matrix::from_columns(k, cols)) == k.size());
  }
}

TEST_CASE("invertible systems: solve agrees with inverse") {
  RandomSource rng(5);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = rng.integer(1, 6);
    const Matrix m = rng.invertible(n, true);
    const Matrix b = rng.matrix(n, 2, true);
    const auto x = solve(m, b);
    REQUIRE(x);
    CHECK(*x == inverse(m) * b);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(Matrix{{1, 2}, {3, 4}}) == Scalar(-2));
  CHECK(determinant(Matrix{{Scalar(0, 1), 0}, {0, Scalar(0, 1)}}) ==
        Scalar(-1));
  CHECK(determinant(Matrix{{1, 2}, {2, 4}}).is_zero());
  RandomSource rng(9);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = rng.matrix(4, 4, true, 3), b = rng.matrix(4, 4, true, 3);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}
