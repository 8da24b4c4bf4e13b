#include "doctest.h"

#include "frobcf/census.hpp"
#include "frobcf/matrix.hpp"

#include <random>

using namespace frobcf;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int dim, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntMatrix m(dim);
  for (auto& x : m.entries()) x = d(rng);
  return m;
}

// det(M - xE) by cofactor expansion at a concrete x.
Int shifted_det(const IntMatrix& m, const Int& x) {
  IntMatrix s = m;
  for (int i = 0; i < m.dim(); ++i) s(i, i) -= x;
  return det(s);
}

// Rational roots of a monic integer polynomial are integers bounded by
// 1 + max |coefficient|.
bool has_integer_root(const std::vector<Int>& monic) {
  Int bound = 0;
  for (const auto& c : monic)
    if (abs(c) > bound) bound = abs(c);
  for (Int r = -bound - 1; r <= bound + 1; ++r) {
    Int v = 0;
    for (auto it = monic.rbegin(); it != monic.rend(); ++it) v = v * r + *it;
    if (sgn(v) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("char_cubic matches det(M - xE) at four points") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
      const IntMatrix m = random_matrix(rng, 3, 5);
      const CharCubic chi = char_cubic(m);
      CHECK(chi.a1 == trace(m));
      CHECK(chi.a3 == det(m));
      for (int x = -2; x <= 1; ++x) CHECK(chi.eval(x) == shifted_det(m, x));
    }
  }

  TEST_CASE("examples of the characteristic cubic") {
    CHECK(char_cubic(IntMatrix::identity(3)) == CharCubic{3, 3, 1});
    const IntMatrix f{3, {0, 1, 0, 0, 0, 1, 1, 2, -1}};
    CHECK(char_cubic(f) == CharCubic{-1, -2, 1});
    const IntMatrix a{3, {1, 2, 0, 0, 1, 2, -7, 0, 29}};
    CHECK(char_cubic(a) == CharCubic{31, 59, 1});
    CHECK(matrix_norm(a) == 42);
  }

  TEST_CASE("adjugate satisfies M adj M = det M E") {
    std::mt19937_64 rng(12);
    for (int dim : {2, 3})
      for (int t = 0; t < 200; ++t) {
        const IntMatrix m = random_matrix(rng, dim, 6);
        CHECK(m * adjugate(m) == det(m) * IntMatrix::identity(dim));
        CHECK(adjugate(m) * m == det(m) * IntMatrix::identity(dim));
      }
    const IntMatrix m{3, {1, 2, 0, 0, 1, 2, -7, 0, 29}};
    const IntMatrix adj = adjugate(m);
    CHECK(adj(0, 1) == -(m(0, 1) * m(2, 2) - m(0, 2) * m(2, 1)));
  }

  TEST_CASE("unimodular inverse") {
    const IntMatrix p{3, {1, 1, 0, 0, 1, 1, 1, 0, 2}};
    REQUIRE(det(p) == 3);
    CHECK_THROWS_AS(unimodular_inverse(p), InputError);
    const IntMatrix q{3, {2, 1, 0, 1, 1, 0, 0, 3, 1}};
    REQUIRE(det(q) == 1);
    CHECK(q * unimodular_inverse(q) == IntMatrix::identity(3));
  }

  TEST_CASE("irreducibility against a brute-force root scan") {
    std::mt19937_64 rng(13);
    for (int dim : {2, 3})
      for (int t = 0; t < 400; ++t) {
        const IntMatrix m = random_matrix(rng, dim, 3);
        CHECK(is_irreducible(m) == !has_integer_root(monic_char_poly(m)));
      }
  }

  TEST_CASE("hyperbolicity") {
    CHECK(is_hyperbolic(IntMatrix{3, {0, 1, 0, 0, 0, 1, 1, 2, -1}}));
    CHECK(is_hyperbolic(IntMatrix{3, {1, 2, 0, 0, 1, 2, -7, 0, 29}}));
    // x^3 - 2 has two complex roots
    CHECK_FALSE(is_hyperbolic(IntMatrix{3, {0, 1, 0, 0, 0, 1, 2, 0, 0}}));
    CHECK(is_irreducible(IntMatrix{3, {0, 1, 0, 0, 0, 1, 2, 0, 0}}));
    CHECK_FALSE(is_irreducible(IntMatrix::identity(3)));
    CHECK(classify_matrix(IntMatrix{3, {0, 1, 0, 0, 0, 1, 2, 0, 0}}) == MatrixClass::Elliptic);
  }

  TEST_CASE("parse and format round trip") {
    const IntMatrix m = parse_matrix("1,2,0;0,1,2;-7,0,29");
    CHECK(m == IntMatrix{3, {1, 2, 0, 0, 1, 2, -7, 0, 29}});
    CHECK(parse_matrix(format_matrix(m)) == m);
    CHECK(parse_matrix(" 0, 1 ; 1 ,1") == IntMatrix{2, {0, 1, 1, 1}});
    CHECK_THROWS_AS(parse_matrix("1,2;3"), InputError);
    CHECK_THROWS_AS(parse_matrix("1"), InputError);
    CHECK_THROWS_AS(parse_matrix("1,2,3,4;1,2,3,4;1,2,3,4;1,2,3,4"), InputError);
    CHECK_THROWS_AS(parse_matrix("a,b;c,d"), InputError);
  }

  TEST_CASE("parse_rational") {
    CHECK(parse_rational("29/2") == Rat(29, 2));
    CHECK(parse_rational("-4/6") == Rat(-2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
  }
}
