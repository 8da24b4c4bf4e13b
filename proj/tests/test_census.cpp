#include "doctest.h"

#include "frobcf/census.hpp"

#include <set>

using namespace frobcf;

namespace {

// Recursive enumeration of all vectors with the given L1 norm.
void all_vectors(int len, int norm, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    if (norm == 0) out.push_back(cur);
    return;
  }
  for (long v = -norm; v <= norm; ++v) {
    cur.push_back(v);
    all_vectors(len, norm - static_cast<int>(std::labs(v)), cur, out);
    cur.pop_back();
  }
}

long key(long v) { return v == 0 ? 0 : (v < 0 ? 2 * -v - 1 : 2 * v); }

// Hyperbolic oracle: no integer root in the Cauchy bound, positive discriminant.
MatrixClass oracle_class(const IntMatrix& m) {
  const auto p = monic_char_poly(m);
  Int bound = 0;
  for (const auto& c : p)
    if (abs(c) > bound) bound = abs(c);
  for (Int r = -bound - 1; r <= bound + 1; ++r) {
    Int v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * r + *it;
    if (sgn(v) == 0) return MatrixClass::Reducible;
  }
  const Int b = p[2], c = p[1], d = p[0];
  const Int disc = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
  return sgn(disc) > 0 ? MatrixClass::Hyperbolic : MatrixClass::Elliptic;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("stream visits every sphere point once, in canonical order") {
    for (int dim : {2, 3})
      for (int norm = 0; norm <= (dim == 2 ? 5 : 3); ++norm) {
        std::vector<std::vector<long>> expected;
        std::vector<long> cur;
        all_vectors(dim * dim, norm, cur, expected);
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
          return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                              [](long x, long y) { return key(x) < key(y); });
        });
        std::vector<std::vector<long>> got;
        NormSphereStream s(dim, norm);
        while (auto m = s.next()) {
          std::vector<long> v;
          for (const auto& x : m->entries()) v.push_back(x.get_si());
          got.push_back(v);
        }
        CHECK(got == expected);
        CHECK(sphere_size(dim * dim, norm) == expected.size());
      }
  }

  TEST_CASE("sphere sizes") {
    CHECK(sphere_size(9, 0) == 1);
    CHECK(sphere_size(9, 1) == 18);
    CHECK(sphere_size(9, 4) == 4482);
    CHECK(sphere_size(9, 6) == 53154);
  }

  TEST_CASE("class counts agree with an independent classifier") {
    for (int norm = 0; norm <= 5; ++norm) {
      std::uint64_t m = 0, h = 0;
      enumerate_norm(3, norm, [&](const IntMatrix& x) {
        const MatrixClass c = oracle_class(x);
        CHECK(c == classify_matrix(x));
        if (c != MatrixClass::Reducible) ++m;
        if (c == MatrixClass::Hyperbolic) ++h;
      });
      const CensusReport r = census(3, norm);
      CHECK(r.count_m == m);
      CHECK(r.count_h == h);
    }
  }

  TEST_CASE("worker count does not change the materialized list") {
    const auto one = matrices_of_class(3, 5, MatrixClass::Hyperbolic, 1);
    const auto many = matrices_of_class(3, 5, MatrixClass::Hyperbolic, 4);
    CHECK(one.size() == 48);
    CHECK(one == many);
    CHECK(irreducible_matrices(3, 4, 1) == irreducible_matrices(3, 4, 3));
  }

  TEST_CASE("cap") {
    CHECK_THROWS_AS(census(3, 8), InputError);
    CHECK_NOTHROW(census(3, 3, {.cap = 3, .workers = 1}));
  }
}
