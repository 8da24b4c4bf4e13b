#include "doctest.h"

#include "frobcf/census.hpp"
#include "frobcf/forms.hpp"

#include <random>

using namespace frobcf;

namespace {

IntMatrix rows3(const std::array<Int, 3>& u, const std::array<Int, 3>& v, const std::array<Int, 3>& w) {
  IntMatrix m(3);
  for (int j = 0; j < 3; ++j) {
    m(0, j) = u[j];
    m(1, j) = v[j];
    m(2, j) = w[j];
  }
  return m;
}

std::array<Int, 3> times(const std::array<Int, 3>& u, const IntMatrix& a) {
  std::array<Int, 3> r;
  for (int j = 0; j < 3; ++j) r[j] = u[0] * a(0, j) + u[1] * a(1, j) + u[2] * a(2, j);
  return r;
}

// Independent reading of a bracket straight from its definition.
Int bracket_oracle(const IntMatrix& a, const IntMatrix& b, int i, int j, int k, int l) {
  return a(i - 1, j - 1) * b(k - 1, l - 1) - a(k - 1, l - 1) * b(i - 1, j - 1);
}

IntMatrix random_matrix(std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntMatrix m(3);
  for (auto& x : m.entries()) x = d(rng);
  return m;
}

const IntMatrix kCounter{3, {1, 2, 0, 0, 1, 2, -7, 0, 29}};

}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("q2 with gcd normalization") {
    CHECK(q2(IntMatrix{2, {0, 1, 1, 1}}) == BinaryQuadraticForm{1, 1, -1});
    CHECK(q2(IntMatrix{2, {0, 2, 1, 0}}) == BinaryQuadraticForm{2, 0, -1});
    CHECK(q2(IntMatrix{2, {1, 2, 4, 1}}) == BinaryQuadraticForm{1, 0, -2});
    CHECK_THROWS_AS(q2(IntMatrix{2, {1, 0, 0, 2}}), InputError);
  }

  TEST_CASE("q2 equals det(u; uF) for the primitive generator F") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 200; ++t) {
      IntMatrix a(2);
      for (auto& x : a.entries()) x = d(rng);
      if (!is_irreducible(a)) continue;
      const BinaryQuadraticForm f = q2(a);
      const Int g = gcd(gcd(a(0, 1), a(1, 0)), a(1, 1) - a(0, 0));
      for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y) {
          // u (A - a11 E) / g
          const Int v0 = (y * a(1, 0)) / g;
          const Int v1 = (x * a(0, 1) + y * (a(1, 1) - a(0, 0))) / g;
          CHECK(f.eval(x, y) == x * v1 - y * v0);
        }
    }
  }

  TEST_CASE("bracket table spot-checked against the definition") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
      const IntMatrix a = random_matrix(rng, 5), b = random_matrix(rng, 5);
      for (const auto& row : p_tilde_table())
        for (const auto& term : row)
          CHECK(bracket(a, b, term.ij, term.kl) ==
                bracket_oracle(a, b, term.ij / 10, term.ij % 10, term.kl / 10, term.kl % 10));
    }
    CHECK(p_tilde_table()[9].back().coefficient == 3);
    CHECK_THROWS_AS(bracket(kCounter, kCounter, 14, 11), InputError);
  }

  TEST_CASE("Ptilde equals det(u; uA; uB) for commuting A, B") {
    std::mt19937_64 rng(6);
    int tested = 0;
    while (tested < 80) {
      const IntMatrix a = random_matrix(rng, 3);
      if (!is_irreducible(a)) continue;
      ++tested;
      std::uniform_int_distribution<int> d(-3, 3);
      const IntMatrix b = Int(d(rng)) * (a * a) + Int(d(rng)) * a + Int(d(rng)) * IntMatrix::identity(3);
      const TernaryCubicForm f = p_tilde(a, b);
      for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y)
          for (int z = -2; z <= 2; ++z) {
            const std::array<Int, 3> u{x, y, z};
            CHECK(f.eval(x, y, z) == det(rows3(u, times(u, a), times(u, b))));
          }
    }
  }

  TEST_CASE("Ptilde linearity and antisymmetry") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
      const IntMatrix a = random_matrix(rng, 4), b1 = random_matrix(rng, 4), b2 = random_matrix(rng, 4);
      CHECK(p_tilde(a, a) == TernaryCubicForm{});
      const TernaryCubicForm s = p_tilde(a, b1 + b2), f1 = p_tilde(a, b1), f2 = p_tilde(a, b2);
      const TernaryCubicForm scaled = p_tilde(a, Int(-3) * b1);
      for (int k = 0; k < 10; ++k) {
        CHECK(s.c[k] == f1.c[k] + f2.c[k]);
        CHECK(scaled.c[k] == -3 * f1.c[k]);
      }
    }
    // B = E, A diagonal: pure cubes vanish
    const TernaryCubicForm d = p_tilde(IntMatrix{3, {2, 0, 0, 0, 3, 0, 0, 0, 5}}, IntMatrix::identity(3));
    CHECK(d.c[0] == 0);
    CHECK(d.c[1] == 0);
    CHECK(d.c[2] == 0);
  }

  TEST_CASE("Pbar at alpha = 0 is (m + beta n)^3") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 100; ++t) {
      const CharCubic chi{d(rng), d(rng), d(rng)};
      int den = d(rng);
      if (den == 0) den = 1;
      Rat beta(d(rng), den);
      beta.canonicalize();
      const BinaryCubicForm f = p_bar(chi, Rat(0), beta);
      for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) {
          const Rat s = Rat(m) + beta * n;
          CHECK(f.eval(Rat(m), Rat(n)) == s * s * s);
        }
    }
  }

  TEST_CASE("Q equals det(u; uF; uF^2) with F = mA + nB") {
    const std::vector<IntMatrix> samples{
        IntMatrix{3, {0, 1, 0, 0, 0, 1, 1, 2, -1}}, kCounter,
        IntMatrix{3, {1, 1, 0, 0, 0, 1, 1, 0, 1}}, IntMatrix{3, {2, 1, 0, -1, 0, 1, 0, 1, -1}}};
    for (const auto& c : samples) {
      if (!is_irreducible(c)) continue;
      const ProductForm q = q3(c);
      for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) {
          const IntMatrix f = Int(m) * q.basis.a + Int(n) * q.basis.b;
          const IntMatrix f2 = f * f;
          for (int x = -1; x <= 1; ++x)
            for (int y = -1; y <= 1; ++y)
              for (int z = -1; z <= 1; ++z) {
                const std::array<Int, 3> u{x, y, z};
                CHECK(q.eval({x, y, z, m, n}) == Rat(det(rows3(u, times(u, f), times(u, f2)))));
              }
        }
    }
  }

  TEST_CASE("counterexample product form") {
    const IntMatrix b{3, {0, -28, 2, -7, 0, 0, 0, -7, 0}};
    const ProductForm q = q3(basis_from(kCounter, kCounter, b));
    CHECK(q.mn_primitive == IntBinaryCubic{{2, -28, 0, 7}});
    // x^3, y^3, z^3, x^2y, xy^2, x^2z, xz^2, y^2z, yz^2, xyz
    CHECK(q.xyz_primitive == TernaryCubicForm{{4, -14, 49, 56, 0, 784, 392, -196, 0, 42}});
    CHECK(q.scale_mn * q.scale_xyz == Rat(1));
    CHECK(q.content() == 1);
  }

  TEST_CASE("integrality holds across the norm-5 census") {
    for (const auto& c : irreducible_matrices(3, 5)) CHECK_NOTHROW(q3(c));
  }

  TEST_CASE("forms vanish at the origin of either block") {
    const ProductForm q = q3(kCounter);
    CHECK(q.eval({0, 0, 0, 3, -2}) == 0);
    CHECK(q.eval({1, -1, 2, 0, 0}) == 0);
  }
}
