#include "doctest.h"

#include "frobcf/commutant.hpp"
#include "frobcf/lattice.hpp"

#include <random>

using namespace frobcf;

namespace {

IntMatrix random_irreducible(std::mt19937_64& rng, int max_norm) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    IntMatrix m(3);
    for (auto& x : m.entries()) x = d(rng);
    if (matrix_norm(m) <= max_norm && is_irreducible(m)) return m;
  }
}

}  // namespace

TEST_SUITE("commutant") {
  TEST_CASE("hermite normal form") {
    const IntRows rows{{2, 4, 6}, {1, 3, 5}, {3, 7, 11}};
    const HermiteResult r = hermite(rows);
    CHECK(r.rank == 2);
    CHECK(r.h[0] == IntVec{1, 1, 1});
    CHECK(r.h[1] == IntVec{0, 2, 4});
    CHECK(r.h[2] == IntVec{0, 0, 0});
    // u * rows == h
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Int s = 0;
        for (int k = 0; k < 3; ++k) s += r.u[i][k] * rows[k][j];
        CHECK(s == r.h[i][j]);
      }
    CHECK(lattice_contains(hermite_basis(rows), IntVec{0, 4, 8}));
    CHECK_FALSE(lattice_contains(hermite_basis(rows), IntVec{0, 1, 2}));
  }

  TEST_CASE("integer kernel") {
    const IntRows m{{1, 2, 3}, {2, 4, 6}};
    const IntRows k = integer_kernel(m, 3);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
    CHECK(same_lattice(k, IntRows{{-2, 1, 0}, {-3, 0, 1}}));
  }

  TEST_CASE("Frobenius matrix commutant is spanned by its powers") {
    const IntMatrix c{3, {0, 1, 0, 0, 0, 1, 1, 2, -1}};
    const CommutantBasis b = commutant_basis(c);
    CHECK(b.e == IntMatrix::identity(3));
    CHECK(b.a == c);
    CHECK(b.b == c * c);
    CHECK(powers_index(b) == 1);
  }

  TEST_CASE("commutant contains every small commuting matrix") {
    const IntMatrix c{3, {1, 2, 0, 0, 1, 2, -7, 0, 29}};
    const auto lattice = commutant_lattice(c);
    IntRows basis;
    for (const auto& m : lattice) basis.push_back(flatten(m));
    basis = hermite_basis(basis);
    IntVec v(9, Int(-1));
    int found = 0;
    for (;;) {
      const IntMatrix x = unflatten(3, v);
      if (commutes(x, c)) {
        ++found;
        CHECK(lattice_contains(basis, v));
      }
      int i = 0;
      while (i < 9 && v[i] == 1) v[i++] = -1;
      if (i == 9) break;
      ++v[i];
    }
    CHECK(found >= 3);  // E, -E and 0
  }

  TEST_CASE("counterexample basis") {
    const IntMatrix a{3, {1, 2, 0, 0, 1, 2, -7, 0, 29}};
    const IntMatrix b = IntMatrix{3, {0, -28, 2, -7, 0, 0, 0, -7, 0}};
    const PowerCoefficients p = express_in_powers(a, b);
    CHECK(p.alpha == Rat(1, 2));
    CHECK(p.beta == Rat(-15));
    CHECK(p.gamma == Rat(29, 2));
    const CommutantBasis given = basis_from(a, a, b);
    CHECK(given.powers == p);
    CHECK(powers_index(given) == 2);
    CHECK_THROWS_AS(basis_from(a, a, a * a), InputError);
  }

  TEST_CASE("rank, E membership and power round trip on random M(3,Z)") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
      const IntMatrix c = random_irreducible(rng, 8);
      const CommutantBasis b = commutant_basis(c);
      CHECK(b.e == IntMatrix::identity(3));
      CHECK(commutes(b.a, c));
      CHECK(commutes(b.b, c));
      CHECK(evaluate_powers(b.a, b.powers) == b.b);
      const auto coords = basis_coordinates(b, c);
      CHECK(coords[0] * b.e + coords[1] * b.a + coords[2] * b.b == c);
      // normalization depends only on the lattice
      std::vector<IntMatrix> raw{b.e + b.a, b.a + b.b, b.e + b.a + b.b};
      REQUIRE(raw.size() == 3);
      const CommutantBasis again = normalize_basis(raw, c);
      CHECK(again.a == b.a);
      CHECK(again.b == b.b);
    }
  }

  TEST_CASE("reducible input is rejected") {
    CHECK_THROWS_AS(commutant_lattice(IntMatrix::identity(3)), InputError);
  }
}
