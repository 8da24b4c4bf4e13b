#include "doctest.h"

#include "frobcf/census.hpp"
#include "frobcf/classify.hpp"
#include "frobcf/sail.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

using namespace frobcf;

namespace {

const IntMatrix kCounter{3, {1, 2, 0, 0, 1, 2, -7, 0, 29}};

IntMatrix golden() { return frobenius_matrix(params({-1, 2, 1})); }

IntMatrix random_sl3(std::mt19937_64& rng, int steps, long spread) {
  std::uniform_int_distribution<int> idx(0, 2), coef(-1, 1);
  for (;;) {
    IntMatrix p = IntMatrix::identity(3);
    for (int s = 0; s < steps; ++s) {
      const int i = idx(rng), j = idx(rng), c = coef(rng);
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

Vec3 mul(const IntMatrix& m, const Vec3& v) {
  Vec3 out;
  for (int r = 0; r < 3; ++r) {
    Int s = 0;
    for (int k = 0; k < 3; ++k) s += m(r, k) * v[k];
    out[r] = to_i64(s);
  }
  return out;
}

long dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::vector<Vec3> brute_cone_points(const EigenCone& cone, long r) {
  std::vector<Vec3> out;
  for (long x = -r; x <= r; ++x)
    for (long y = -r; y <= r; ++y)
      for (long z = -r; z <= r; ++z)
        if ((x || y || z) && cone.contains({x, y, z})) out.push_back({x, y, z});
  return out;
}

std::vector<Vec3> sorted(std::vector<Vec3> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("sail") {
  TEST_CASE("root isolation of the golden cubic") {
    // x^3 + x^2 - 2x - 1 has roots 2cos(2 pi k / 7)
    const MonicCubic f{{-1, -2, 1}};
    const auto roots = isolate_real_roots(f, 40);
    REQUIRE(roots.size() == 3);
    std::vector<double> expect;
    for (int k = 1; k <= 3; ++k) expect.push_back(2 * std::cos(2 * std::numbers::pi * k / 7));
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i < 3; ++i) {
      CHECK(std::fabs(roots[i].approx() - expect[i]) < 1e-11);
      CHECK(roots[i].precision() >= 40);
      // lambda itself, and lambda minus a nearby rational
      CHECK(roots[i].sign({0, 1, 0}) == (expect[i] > 0 ? 1 : -1));
    }
    // the cubic vanishes at every root
    CHECK(roots[0].sign(f.reduce({-1, -2, 1, 1})) == 0);
    CHECK_THROWS_AS(isolate_real_roots(MonicCubic{{0, -1, 0}}), InputError);  // x^3 - x
    CHECK_THROWS_AS(isolate_real_roots(MonicCubic{{-1, 0, 0}}), InputError);  // one real root
  }

  TEST_CASE("root isolation agrees with trigonometric roots") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-12, 12);
    int checked = 0;
    while (checked < 200) {
      const long a = d(rng), b = d(rng), c = d(rng);
      const IntMatrix m = frobenius_matrix(params({-a, -b, -c}));  // x^3 + a x^2 + b x + c
      if (!is_hyperbolic(m)) continue;
      const auto roots = isolate_real_roots(MonicCubic{{c, b, a}}, 40);
      // depressed cubic t^3 + p t + q with x = t - a/3
      const double p = b - a * a / 3.0, q = 2.0 * a * a * a / 27 - a * b / 3.0 + c;
      const double r = 2 * std::sqrt(-p / 3), phi = std::acos(3 * q / (p * r)) / 3;
      std::vector<double> expect;
      for (int k = 0; k < 3; ++k) expect.push_back(r * std::cos(phi - 2 * std::numbers::pi * k / 3) - a / 3.0);
      std::sort(expect.begin(), expect.end());
      for (int i = 0; i < 3; ++i) CHECK(std::fabs(roots[i].approx() - expect[i]) < 1e-8 * (1 + std::fabs(expect[i])));
      ++checked;
    }
  }

  TEST_CASE("signs near a root need refinement, never a guess") {
    const MonicCubic f{{-1, -2, 1}};
    const RealRoot r = isolate_real_roots(f, 40)[2];
    // lambda - l/2^k for a rational 2^-200 away from the root
    RealRoot fine = r;
    fine.refine_to(200);
    const Int lo = fine.lower_numerator();
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, 200);
    CHECK(r.sign({-lo, scale, 0}) == 1);
    CHECK(r.sign({-(lo + 1), scale, 0}) == -1);
  }

  TEST_CASE("eigen-cone preconditions") {
    CHECK_THROWS_AS(eigen_cone(IntMatrix::identity(3)), InputError);
    CHECK_THROWS_AS(eigen_cone(IntMatrix{3, {0, 1, 0, 0, 0, 1, 2, 0, 0}}), InputError);  // one real root
    CHECK_THROWS_AS(eigen_cone(IntMatrix{2, {0, 1, 1, 1}}), InputError);
    const EigenCone k = eigen_cone(golden());
    CHECK(k.contains({0, 0, 1}));
    CHECK_FALSE(k.contains({0, 0, -1}));
    CHECK_FALSE(k.contains({0, 0, 0}));
  }

  TEST_CASE("(0,0,1) is never on an eigenplane in the norm-6 census") {
    for (const auto& c : matrices_of_class(3, 6, MatrixClass::Hyperbolic))
      CHECK_NOTHROW(eigen_cone(c));
  }

  TEST_CASE("eigen-cones transform by the conjugator") {
    std::mt19937_64 rng(11);
    for (const auto& rep : representatives()) {
      const IntMatrix c = frobenius_matrix(rep.params);
      for (int t = 0; t < 4; ++t) {
        const IntMatrix p = random_sl3(rng, 5, 2);
        const IntMatrix pc = p * c * unimodular_inverse(p);
        for (const auto& s : cone_classes()) {
          const EigenCone k = eigen_cone(c, s);
          const auto pts = brute_cone_points(k, 3);
          REQUIRE_FALSE(pts.empty());
          // the cone of P C P^-1 that contains P p for one p contains all of them
          const EigenCone probe = eigen_cone(pc, {1, 1, 1});
          ConeSigns s2;
          for (int i = 0; i < 3; ++i) s2[i] = probe.side(i, mul(p, pts[0]));
          const EigenCone k2 = eigen_cone(pc, s2);
          for (const auto& q : pts) CHECK(k2.contains(mul(p, q)));
          // and nothing else: the inverse image of its points lies in k
          const IntMatrix pi = unimodular_inverse(p);
          for (const auto& q : brute_cone_points(k2, 2)) CHECK(k.contains(mul(pi, q)));
        }
      }
    }
  }

  TEST_CASE("(0,0,1) lies on the golden sail") {
    const SailAnalysis a = analyze_sail(golden());
    bool found = false;
    for (const auto& f : a.complex.faces)
      if (f.stable) found = found || std::binary_search(f.points.begin(), f.points.end(), Vec3{0, 0, 1});
    CHECK(found);
  }

  TEST_CASE("small radius behaviour") {
    const EigenCone k = eigen_cone(golden());
    CHECK_THROWS_AS(compute_sail(k, 0), InputError);
    CHECK_THROWS_AS(compute_sail(k, kMaxRadius + 1), InputError);
    for (const auto& s : cone_classes()) {
      try {
        const SailComplex cx = compute_sail(eigen_cone(golden(), s), 1);
        CHECK(cx.point_count <= 26);
      } catch (const RadiusTooSmall&) {
        // an explicit request for a larger radius is the other allowed outcome
      }
    }
  }

  TEST_CASE("sail faces against brute force") {
    for (const auto& rep : representatives()) {
      const IntMatrix c = frobenius_matrix(rep.params);
      for (const auto& s : cone_classes()) {
        const EigenCone k = eigen_cone(c, s);
        const SailComplex cx = compute_sail(k, 12);
        const auto pts = brute_cone_points(k, 24);
        for (const auto& f : cx.faces) {
          if (!f.stable) continue;
          // a supporting plane of every cone point up to twice the radius
          long low = dot(f.normal, pts[0]);
          std::vector<Vec3> on;
          for (const auto& p : pts) {
            const long v = dot(f.normal, p);
            low = std::min(low, v);
            if (v == f.height) on.push_back(p);
          }
          CHECK(low == f.height);
          CHECK(sorted(on) == f.points);
          CHECK(f.height > 0);
          for (const auto& v : f.vertices) {
            CHECK(std::gcd(std::gcd(std::labs(v[0]), std::labs(v[1])), std::labs(v[2])) == 1);
            CHECK(k.contains(v));
          }
          CHECK(f.area >= 1);
          CHECK(f.vertices.size() >= 3);
        }
      }
    }
  }

  TEST_CASE("stable faces are radius-monotone") {
    for (const auto& rep : representatives()) {
      const IntMatrix c = frobenius_matrix(rep.params);
      for (const auto& s : cone_classes()) {
        const EigenCone k = eigen_cone(c, s);
        const SailComplex a = compute_sail(k, 16), b = compute_sail(k, 32);
        std::set<std::vector<Vec3>> stable_b;
        for (const auto& f : b.faces)
          if (f.stable) stable_b.insert(f.points);
        CHECK(a.stable_count() <= b.stable_count());
        for (const auto& f : a.faces)
          if (f.stable) CHECK(stable_b.count(f.points) == 1);
      }
    }
  }

  TEST_CASE("units of the commutant") {
    const IntMatrix g = golden();
    CHECK(det(g) == 1);
    const DirichletGroup d = dirichlet_generators(g);
    for (const IntMatrix* u : {&d.g1, &d.g2}) {
      CHECK(det(*u) == 1);
      CHECK(commutes(*u, g));
      const CharCubic cc = char_cubic(*u);
      CHECK(cc.a1 > 0);
      CHECK(cc.a2 > 0);
    }
    CHECK(commutes(d.g1, d.g2));
    const double cross = d.log1[0] * d.log2[1] - d.log1[1] * d.log2[0];
    CHECK(std::fabs(cross) > 1e-6);
    // C^2 is a positive unit, hence an integral word in the generators
    const IntMatrix c2 = g * g;
    const CharCubic k = char_cubic(g);
    const auto roots = isolate_real_roots(MonicCubic{{-k.a3, k.a2, -k.a1}});
    std::array<double, 3> l;
    for (int i = 0; i < 3; ++i) l[i] = 2 * std::log(std::fabs(roots[i].approx()));
    // solve l = i log1 + j log2 on two coordinates
    const double det2 = d.log1[0] * d.log2[1] - d.log1[1] * d.log2[0];
    const long i = std::lround((l[0] * d.log2[1] - l[1] * d.log2[0]) / det2);
    const long j = std::lround((d.log1[0] * l[1] - d.log1[1] * l[0]) / det2);
    IntMatrix w = IntMatrix::identity(3);
    const IntMatrix g1i = unimodular_inverse(d.g1), g2i = unimodular_inverse(d.g2);
    for (long t = 0; t < std::labs(i); ++t) w = w * (i > 0 ? d.g1 : g1i);
    for (long t = 0; t < std::labs(j); ++t) w = w * (j > 0 ? d.g2 : g2i);
    CHECK(w == c2);
  }

  TEST_CASE("the counterexample is a positive unit of its commutant") {
    CHECK(det(kCounter) == 1);
    const CharCubic k = char_cubic(kCounter);
    CHECK(k.a1 > 0);
    CHECK(k.a2 > 0);
    const CommutantBasis b = commutant_basis(kCounter);
    const auto coords = basis_coordinates(b, kCounter);
    CHECK(evaluate_powers(kCounter, express_in_powers(kCounter, kCounter)) == kCounter);
    CHECK((coords[0] * b.e + coords[1] * b.a + coords[2] * b.b) == kCounter);
    CHECK_THROWS_AS(dirichlet_generators(kCounter, 3.0), RadiusTooSmall);
  }

  TEST_CASE("torus decomposition of the representatives") {
    std::vector<std::vector<TorusInvariant>> invs;
    for (const auto& rep : representatives()) {
      const IntMatrix c = frobenius_matrix(rep.params);
      const SailAnalysis a = analyze_sail(c);
      const TorusInvariant& t = a.invariant;
      CHECK(t.vertex_orbits > 0);
      CHECK(t.edge_orbits > 0);
      CHECK(t.face_orbits > 0);
      CHECK(t.vertex_orbits - t.edge_orbits + t.face_orbits == 0);
      CHECK(t.face_areas.size() == static_cast<std::size_t>(t.face_orbits));
      CHECK(abs(det(a.frame)) == 1);
      // orbit members are translates of the representative
      for (const auto& o : a.face_orbits) {
        const auto& rf = a.complex.faces[o.representative];
        for (int m : o.members) {
          CHECK(a.complex.faces[m].area == rf.area);
          CHECK(a.complex.faces[m].vertices.size() == rf.vertices.size());
          CHECK(a.complex.faces[m].height == rf.height);
        }
      }
      // the first generator moves chart positions by (1, 0)
      const Vec3 v = a.vertex_reps[0];
      const Vec3 gv = mul(a.group.g1, v);
      auto real = [](const Vec3& p) { return std::array<double, 3>{double(p[0]), double(p[1]), double(p[2])}; };
      const auto p0 = chart_position(a, real(v)), p1 = chart_position(a, real(gv));
      CHECK(std::fabs(p1[0] - p0[0] - 1) < 1e-6);
      CHECK(std::fabs(p1[1] - p0[1]) < 1e-6);
      invs.push_back(fraction_invariant(c));
      MESSAGE(rep.name << ": " << format_invariant(t));
    }
    CHECK(invs[0] != invs[1]);
    CHECK(invs[0] != invs[2]);
    CHECK(invs[1] != invs[2]);
  }

  TEST_CASE("fraction invariants are conjugation invariant") {
    std::mt19937_64 rng(17);
    for (const auto& rep : representatives()) {
      const IntMatrix c = frobenius_matrix(rep.params);
      const auto base = fraction_invariant(c);
      for (int t = 0; t < 6; ++t) {
        const IntMatrix p = random_sl3(rng, 8, 3);
        CHECK(fraction_invariant(p * c * unimodular_inverse(p)) == base);
      }
    }
  }

  TEST_CASE("invariant_distinguish") {
    const IntMatrix m131 = frobenius_matrix(params({-1, 3, 1})), m031 = frobenius_matrix(params({0, 3, 1}));
    CHECK(invariant_distinguish(m131, m031) == Distinction::Distinct);
    CHECK(invariant_distinguish(m131, m131) == Distinction::Indistinguishable);
    const IntMatrix p{3, {1, 1, 0, 0, 1, 1, 0, 0, 1}};
    CHECK(invariant_distinguish(golden(), p * golden() * unimodular_inverse(p)) == Distinction::Indistinguishable);
  }

  TEST_CASE("sail labels agree with conjugator labels on norm 5 and a norm-6 sample") {
    const auto labeler = sail_invariant_labeler();
    for (const auto& c : matrices_of_class(3, 5, MatrixClass::Hyperbolic)) {
      const auto idx = labeler(c);
      REQUIRE(idx);
      CHECK(representatives()[*idx].label == FractionLabel::GoldenRatio);
    }
    auto h6 = matrices_of_class(3, 6, MatrixClass::Hyperbolic);
    for (std::size_t i = 0; i < h6.size(); i += 37) CHECK(sail_consistent(h6[i], classify_fraction(h6[i])));
  }

  TEST_CASE("fallback labeler closes a capped classification") {
    ClassifyConfig cfg;
    cfg.conjugator_cap = 0;
    cfg.modulus_cap = 0;
    cfg.fallback = sail_invariant_labeler();
    const FractionClass k = classify_fraction(frobenius_matrix(params({0, 3, 1})), cfg);
    CHECK(k.label == FractionLabel::M031);
    CHECK(k.method == "sail-invariant");
  }

  TEST_CASE("svg output") {
    const std::string svg = sail_svg(analyze_sail(golden()));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
  }
}
