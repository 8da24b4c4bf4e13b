#include "doctest.h"

#include "frobcf/census.hpp"
#include "frobcf/classify.hpp"

#include <random>

using namespace frobcf;

namespace {

const IntMatrix kCounter{3, {1, 2, 0, 0, 1, 2, -7, 0, 29}};

// Random product of elementary matrices, entries kept small.
IntMatrix random_sl3(std::mt19937_64& rng, int steps = 4, long spread = 2) {
  std::uniform_int_distribution<int> idx(0, 2), coef(-1, 1);
  for (;;) {
    IntMatrix p = IntMatrix::identity(3);
    for (int s = 0; s < steps; ++s) {
      const int i = idx(rng), j = idx(rng);
      const int c = coef(rng);
      if (i == j || c == 0) continue;
      IntMatrix e = IntMatrix::identity(3);
      e(i, j) = c;
      p = p * e;
    }
    bool small = true;
    for (const auto& x : p.entries()) small = small && abs(x) <= spread;
    if (small) return p;
  }
}

}  // namespace

TEST_SUITE("frobenius") {
  TEST_CASE("Frobenius matrices") {
    CHECK(frobenius_matrix(params({-1, 2, 1})) == IntMatrix{3, {0, 1, 0, 0, 0, 1, 1, 2, -1}});
    CHECK(frobenius_matrix(params({0, 3, 1})) == IntMatrix{3, {0, 1, 0, 0, 0, 1, 1, 3, 0}});
    CHECK(frobenius_matrix(params({1, 1})) == IntMatrix{2, {0, 1, 1, 1}});
    for (long a1 = -3; a1 <= 3; ++a1)
      for (long a2 = -3; a2 <= 3; ++a2)
        for (long a3 = -3; a3 <= 3; ++a3) {
          const FrobeniusParams p = params({a1, a2, a3});
          const IntMatrix m = frobenius_matrix(p);
          CHECK(frobenius_params_of(m) == p);
          CHECK(char_cubic(m) == to_char_cubic(p));
          // det(xE - M) = x^3 - a1 x^2 - a2 x - a3
          CHECK(monic_char_poly(m) == std::vector<Int>{-a3, -a2, -a1, 1});
        }
  }

  TEST_CASE("2x2 decision examples") {
    const FrobeniusVerdict a = decide_thm2(IntMatrix{2, {0, 1, 1, 1}});
    CHECK(a.status == FrobeniusStatus::FrobeniusType);
    REQUIRE(a.conjugator);
    CHECK(verify_conjugator(IntMatrix{2, {0, 1, 1, 1}}, *a.conjugator));
    CHECK(a.solution.witness == std::vector<Int>{1, 0});
    const FrobeniusVerdict b = decide_thm2(IntMatrix{2, {0, 2, 1, 0}});
    CHECK(b.status == FrobeniusStatus::FrobeniusType);
    CHECK_THROWS_AS(decide_thm2(IntMatrix{2, {1, 0, 0, 1}}), InputError);
  }

  TEST_CASE("a non-Frobenius 2x2 matrix exists at small norm") {
    std::optional<IntMatrix> found;
    for (int n = 1; n <= 8 && !found; ++n)
      enumerate_norm(2, n, [&](const IntMatrix& a) {
        if (found || !is_irreducible(a)) return;
        if (decide_thm2(a).status == FrobeniusStatus::NonFrobenius) found = a;
      });
    REQUIRE(found);
    MESSAGE("first non-Frobenius 2x2: " << format_matrix(*found));
    CHECK_FALSE(brute_force_conjugator_2x2(*found, 4));
  }

  TEST_CASE("2x2 decisions agree with brute-force conjugators") {
    for (int n = 1; n <= 5; ++n)
      enumerate_norm(2, n, [&](const IntMatrix& a) {
        if (!is_irreducible(a)) return;
        const FrobeniusVerdict v = decide_thm2(a);
        const auto x = brute_force_conjugator_2x2(a, 3);
        if (x) CHECK(v.status == FrobeniusStatus::FrobeniusType);
        if (v.status == FrobeniusStatus::NonFrobenius) CHECK_FALSE(x);
      });
  }

  TEST_CASE("3x3 decision examples") {
    const FrobeniusVerdict v = decide_thm3(kCounter);
    CHECK(v.status == FrobeniusStatus::NonFrobenius);
    REQUIRE(v.solution.certificate);
    CHECK(v.solution.certificate->modulus == 7);
    const FrobeniusVerdict g = decide_thm3(frobenius_matrix(params({-1, 2, 1})));
    CHECK(g.status == FrobeniusStatus::FrobeniusType);
    REQUIRE(g.conjugator);
    CHECK(verify_conjugator(frobenius_matrix(params({-1, 2, 1})), *g.conjugator));
    DecisionConfig zero;
    zero.escalation = {0};
    CHECK(decide_thm3(frobenius_matrix(params({-1, 2, 1})), zero).status == FrobeniusStatus::Undecided);
  }

  TEST_CASE("Frobenius matrices with small parameters are Frobenius type") {
    for (long a1 = -3; a1 <= 3; ++a1)
      for (long a2 = -3; a2 <= 3; ++a2)
        for (long a3 = -3; a3 <= 3; ++a3) {
          const IntMatrix m = frobenius_matrix(params({a1, a2, a3}));
          if (!is_irreducible(m)) continue;
          const FrobeniusVerdict v = decide_thm3(m);
          CHECK(v.status == FrobeniusStatus::FrobeniusType);
        }
  }

  TEST_CASE("verdict does not depend on the commutant basis") {
    std::vector<IntMatrix> sample = irreducible_matrices(3, 5);
    sample.resize(200);
    sample.push_back(kCounter);
    for (const auto& c : sample) {
      const CommutantBasis b = commutant_basis(c);
      const FrobeniusStatus s = decide_thm3(b).status;
      const IntMatrix e = IntMatrix::identity(3);
      CHECK(decide_thm3(basis_from(c, b.a + e, b.b)).status == s);
      CHECK(decide_thm3(basis_from(c, b.a, b.b + b.a)).status == s);
      CHECK(decide_thm3(basis_from(c, b.b, b.a)).status == s);
    }
  }

  TEST_CASE("commutant roots of a Frobenius matrix include itself") {
    const IntMatrix m = frobenius_matrix(params({-1, 2, 1}));
    const auto roots = commutant_roots(commutant_basis(m), params({-1, 2, 1}));
    CHECK(roots.size() == 3);  // cyclic field: three conjugates
    CHECK(std::find(roots.begin(), roots.end(), m) != roots.end());
    for (const auto& f : roots) CHECK(char_cubic(f) == char_cubic(m));
    CHECK(commutant_roots(commutant_basis(m), params({0, 3, 1})).empty());
  }

  TEST_CASE("conjugator search recovers a planted conjugation") {
    std::mt19937_64 rng(21);
    for (const auto& rep : representatives()) {
      const IntMatrix m = frobenius_matrix(rep.params);
      const auto self = conjugator_search(m, rep.params, 1);
      REQUIRE(self);
      CHECK(verify_conjugator(m, *self));
      for (int t = 0; t < 5; ++t) {
        const IntMatrix p = random_sl3(rng);
        const IntMatrix c = p * m * unimodular_inverse(p);
        const auto x = conjugator_search(c, rep.params, 4);
        REQUIRE(x);
        CHECK(verify_conjugator(c, *x));
      }
    }
  }

  TEST_CASE("structured search finds whatever the X-box finds") {
    // the first row of any box conjugator is a u of the same size
    const auto golden = params({-1, 2, 1});
    for (const auto& c : matrices_of_class(3, 5, MatrixClass::Hyperbolic)) {
      const auto brute = brute_force_conjugator(c, golden, 1);
      const auto fast = conjugator_search(c, golden, 1);
      if (brute) {
        CHECK(verify_conjugator(c, *brute));
        CHECK(fast.has_value());
      }
      if (fast) CHECK(verify_conjugator(c, *fast));
    }
  }

  TEST_CASE("counterexample has no small conjugator") {
    CHECK_FALSE(brute_force_conjugator(kCounter, frobenius_params_of(kCounter), 1));
    for (long a1 = -6; a1 <= 6; ++a1)
      for (long a2 = -6; a2 <= 6; ++a2)
        for (long a3 = -6; a3 <= 6; ++a3) {
          const FrobeniusParams p = params({a1, a2, a3});
          if (!is_irreducible(frobenius_matrix(p))) continue;
          CHECK_FALSE(conjugator_search(kCounter, p, 3));
        }
  }

  TEST_CASE("certificate coherence") {
    for (const auto& c : matrices_of_class(3, 5, MatrixClass::Hyperbolic)) {
      const FrobeniusVerdict v = decide_thm3(c);
      const FractionClass k = classify_fraction(c);
      if (k.certificate) CHECK(v.status != FrobeniusStatus::NonFrobenius);
      if (v.status == FrobeniusStatus::NonFrobenius) CHECK_FALSE(k.certificate);
    }
  }

  TEST_CASE("classification of representatives and small norms") {
    for (const auto& rep : representatives()) {
      const FractionClass k = classify_fraction(frobenius_matrix(rep.params));
      CHECK(k.label == rep.label);
      CHECK(k.method == "conjugator");
    }
    CHECK(classification_report(4).matrices.empty());
    const ClassificationReport r5 = classification_report(5, {}, 2);
    CHECK(r5.counts.size() == 1);
    CHECK(r5.counts.at("GoldenRatio") == 48);
    CHECK_THROWS_AS(classification_report(8), InputError);
    CHECK_THROWS_AS(classify_fraction(IntMatrix{3, {0, 1, 0, 0, 0, 1, 2, 0, 0}}), InputError);
  }

  TEST_CASE("classification is conjugation invariant") {
    std::mt19937_64 rng(31);
    const auto h6 = matrices_of_class(3, 6, MatrixClass::Hyperbolic);
    std::uniform_int_distribution<std::size_t> pick(0, h6.size() - 1);
    for (int t = 0; t < 50; ++t) {
      const IntMatrix& c = h6[pick(rng)];
      const IntMatrix p = random_sl3(rng);
      CHECK(classify_fraction(p * c * unimodular_inverse(p)).label == classify_fraction(c).label);
    }
  }

  TEST_CASE("an inequivalent representative is refuted") {
    const FractionClass k = classify_fraction(frobenius_matrix(params({0, 3, 1})));
    // different cubic fields: no root at all
    CHECK(std::find(k.refuted.begin(), k.refuted.end(), "M_{-1,3,1}") != k.refuted.end());
  }
}
