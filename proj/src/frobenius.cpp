#include "frobcf/frobenius.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>

namespace frobcf {

FrobeniusParams params(std::initializer_list<long> a) {
  FrobeniusParams p;
  for (long x : a) p.a.emplace_back(x);
  return p;
}

CharCubic to_char_cubic(const FrobeniusParams& p) {
  if (p.k() != 3) throw InputError("expected three Frobenius parameters");
  return {p.a[0], -p.a[1], p.a[2]};
}

FrobeniusParams frobenius_params(const CharCubic& chi) { return {{chi.a1, -chi.a2, chi.a3}}; }

FrobeniusParams frobenius_params_of(const IntMatrix& m) {
  if (m.dim() == 3) return frobenius_params(char_cubic(m));
  const CharQuadratic q = char_quadratic(m);
  return {{q.t, -q.d}};
}

std::string format_params(const FrobeniusParams& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.k(); ++i) os << (i ? "," : "") << p.a[i];
  os << ')';
  return os.str();
}

IntMatrix frobenius_matrix(const FrobeniusParams& p) {
  const int k = p.k();
  if (k != 2 && k != 3) throw InputError("Frobenius matrices are built for k = 2 and 3 only");
  IntMatrix m(k);
  for (int i = 0; i + 1 < k; ++i) m(i, i + 1) = 1;
  for (int j = 0; j < k; ++j) m(k - 1, j) = p.a[k - 1 - j];
  return m;
}

bool verify_conjugator(const IntMatrix& c, const Conjugator& w) {
  if (w.x.dim() != c.dim() || w.target.k() != c.dim()) return false;
  if (det(w.x) != 1) return false;
  const IntMatrix y = w.x * c * adjugate(w.x);
  return commutes(y, frobenius_matrix(w.target));
}

std::string_view status_name(FrobeniusStatus s) {
  switch (s) {
    case FrobeniusStatus::FrobeniusType: return "FrobeniusType";
    case FrobeniusStatus::NonFrobenius: return "NonFrobenius";
    case FrobeniusStatus::Undecided: return "Undecided";
  }
  return "?";
}

namespace {

std::array<Int, 3> row_times(const std::array<Int, 3>& u, const IntMatrix& f) {
  std::array<Int, 3> r;
  for (int j = 0; j < 3; ++j) r[j] = u[0] * f(0, j) + u[1] * f(1, j) + u[2] * f(2, j);
  return r;
}

// +-[u; uF; uF^2] with determinant 1, or nullopt when |det| != 1.
std::optional<Conjugator> krylov(const std::array<Int, 3>& u, const IntMatrix& f) {
  const auto v = row_times(u, f);
  const auto w = row_times(v, f);
  IntMatrix x(3);
  for (int j = 0; j < 3; ++j) {
    x(0, j) = u[j];
    x(1, j) = v[j];
    x(2, j) = w[j];
  }
  const Int d = det(x);
  if (d == -1) x = -x;
  else if (d != 1) return std::nullopt;
  return Conjugator{x, frobenius_params_of(f)};
}

}  // namespace

Conjugator conjugator_from_witness(const IntMatrix& a, const Solvability& s) {
  if (a.dim() != 2 || s.witness.size() != 2) throw InputError("2x2 witness expected");
  const Int g = gcd(gcd(a(0, 1), a(1, 0)), a(1, 1) - a(0, 0));
  IntMatrix f = a - a(0, 0) * IntMatrix::identity(2);
  for (auto& e : f.entries()) e /= g;
  const Int& x = s.witness[0];
  const Int& y = s.witness[1];
  auto build = [&](const IntMatrix& ff) {
    IntMatrix m(2);
    m(0, 0) = x;
    m(0, 1) = y;
    m(1, 0) = x * ff(0, 0) + y * ff(1, 0);
    m(1, 1) = x * ff(0, 1) + y * ff(1, 1);
    return m;
  };
  IntMatrix m = build(f);
  if (det(m) == -1) {
    f = -f;
    m = build(f);
  }
  Conjugator w{m, frobenius_params_of(f)};
  if (!verify_conjugator(a, w)) throw IntegrityError("2x2 witness does not yield a conjugator");
  return w;
}

Conjugator conjugator_from_witness(const CommutantBasis& basis, const Solvability& s) {
  if (s.witness.size() != 5) throw InputError("(x,y,z,m,n) witness expected");
  const IntMatrix f = s.witness[3] * basis.a + s.witness[4] * basis.b;
  auto w = krylov({s.witness[0], s.witness[1], s.witness[2]}, f);
  if (!w || !verify_conjugator(basis.c, *w))
    throw IntegrityError("unit witness does not yield a conjugator");
  return *w;
}

FrobeniusVerdict decide_thm2(const IntMatrix& a, const DecisionConfig& config) {
  if (a.dim() != 2) throw InputError("decide_thm2 needs a 2x2 matrix");
  const BinaryQuadraticForm f = q2(a);
  FrobeniusVerdict v;
  std::vector<long> boxes = config.escalation;
  if (boxes.empty()) boxes.push_back(config.solver.quadratic_box);
  for (long box : boxes) {
    SolverConfig c = config.solver;
    c.quadratic_box = std::max(c.quadratic_box, box);
    if (box == 0) c = SolverConfig{0, 0, 0};
    v.boxes_tried.push_back(c.quadratic_box);
    v.solution = decide(f, c);
    if (v.solution.verdict != Verdict::Unknown) break;
  }
  switch (v.solution.verdict) {
    case Verdict::Solvable:
      v.status = FrobeniusStatus::FrobeniusType;
      v.conjugator = conjugator_from_witness(a, v.solution);
      break;
    case Verdict::Unsolvable: v.status = FrobeniusStatus::NonFrobenius; break;
    case Verdict::Unknown: v.status = FrobeniusStatus::Undecided; break;
  }
  return v;
}

FrobeniusVerdict decide_thm3(const CommutantBasis& basis, const DecisionConfig& config) {
  const ProductForm q = q3(basis);
  FrobeniusVerdict v;
  std::vector<long> boxes = config.escalation;
  if (boxes.empty()) boxes.push_back(config.solver.box_bound);
  for (long box : boxes) {
    SolverConfig c = config.solver;
    c.box_bound = box;
    if (box == 0) c.modulus_cap = 0;
    v.boxes_tried.push_back(box);
    v.solution = decide(q, c);
    if (v.solution.verdict != Verdict::Unknown) break;
  }
  switch (v.solution.verdict) {
    case Verdict::Solvable:
      v.status = FrobeniusStatus::FrobeniusType;
      v.conjugator = conjugator_from_witness(basis, v.solution);
      break;
    case Verdict::Unsolvable: v.status = FrobeniusStatus::NonFrobenius; break;
    case Verdict::Unknown: v.status = FrobeniusStatus::Undecided; break;
  }
  return v;
}

FrobeniusVerdict decide_thm3(const IntMatrix& c, const DecisionConfig& config) {
  if (c.dim() != 3) throw InputError("decide_thm3 needs a 3x3 matrix");
  return decide_thm3(commutant_basis(c), config);
}

namespace {

using cplx = std::complex<long double>;

// Roots of t^3 + c2 t^2 + c1 t + c0 (Durand-Kerner, then Newton polish).
std::array<cplx, 3> cubic_roots(long double c2, long double c1, long double c0) {
  auto f = [&](cplx t) { return ((t + c2) * t + c1) * t + c0; };
  auto df = [&](cplx t) { return (3.0L * t + 2.0L * c2) * t + c1; };
  const long double scale = 1 + std::max({std::fabs(c2), std::fabs(c1), std::fabs(c0)});
  std::array<cplx, 3> r;
  const cplx seed(0.4L, 0.9L);
  r[0] = scale * seed;
  r[1] = r[0] * seed;
  r[2] = r[1] * seed;
  for (int it = 0; it < 500; ++it)
    for (int i = 0; i < 3; ++i) {
      cplx den = 1;
      for (int j = 0; j < 3; ++j)
        if (j != i) den *= r[i] - r[j];
      r[i] -= f(r[i]) / den;
    }
  for (auto& t : r)
    for (int it = 0; it < 5; ++it) {
      const cplx d = df(t);
      if (std::abs(d) > 0) t -= f(t) / d;
    }
  return r;
}

long double to_ld(const Rat& q) { return static_cast<long double>(q.get_d()); }

cplx eval_powers(const PowerCoefficients& p, cplx l) {
  return to_ld(p.alpha) * l * l + to_ld(p.beta) * l + to_ld(p.gamma);
}

}  // namespace

std::vector<IntMatrix> commutant_roots(const CommutantBasis& basis, const FrobeniusParams& target) {
  const CharCubic chi_t = to_char_cubic(target);
  const CharCubic chi_c = char_cubic(basis.c);
  const auto lambda = cubic_roots(-chi_c.a1.get_d(), chi_c.a2.get_d(), -chi_c.a3.get_d());
  const auto rho = cubic_roots(-chi_t.a1.get_d(), chi_t.a2.get_d(), -chi_t.a3.get_d());
  const PowerCoefficients pa = express_in_powers(basis.c, basis.a);
  const PowerCoefficients pb = express_in_powers(basis.c, basis.b);
  std::array<std::array<cplx, 3>, 3> rows;
  for (int i = 0; i < 3; ++i) rows[i] = {cplx(1), eval_powers(pa, lambda[i]), eval_powers(pb, lambda[i])};
  auto det3 = [](const std::array<std::array<cplx, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const cplx d = det3(rows);
  std::vector<IntMatrix> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    std::array<Int, 3> coeff;
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k) {
      auto m = rows;
      for (int i = 0; i < 3; ++i) m[i][k] = rho[perm[i]];
      const cplx v = det3(m) / d;
      const long double rounded = std::round(v.real());
      if (std::fabs(v.real() - rounded) > 1e-3L || std::fabs(v.imag()) > 1e-3L ||
          std::fabs(rounded) > 1e15L)
        ok = false;
      else
        coeff[k] = Int(static_cast<double>(rounded));
    }
    if (!ok) continue;
    const IntMatrix f = coeff[0] * basis.e + coeff[1] * basis.a + coeff[2] * basis.b;
    if (char_cubic(f) == chi_t && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

TargetCheck check_target(const CommutantBasis& basis, const FrobeniusParams& target, long bound,
                         long modulus_cap) {
  TargetCheck r;
  const auto roots = commutant_roots(basis, target);
  std::vector<TernaryCubicForm> forms;
  for (const auto& f : roots) forms.push_back(p_tilde(f, f * f));
  // shell by shell across roots, so the smallest u wins
  for (long k = 1; k <= bound && !r.conjugator; ++k)
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto u = search_box(forms[i], k);
      if (!u) continue;
      auto w = krylov(*u, roots[i]);
      if (!w || !verify_conjugator(basis.c, *w)) throw IntegrityError("conjugator search produced a bad X");
      r.conjugator = w;
      break;
    }
  if (r.conjugator) return r;
  r.refuted = true;
  for (const auto& g : forms) {
    const auto cert = modular_obstruction(g, modulus_cap);
    if (!cert) {
      r.refuted = false;
      r.moduli.clear();
      break;
    }
    r.moduli.push_back(cert->modulus);
  }
  return r;
}

std::optional<Conjugator> conjugator_search(const IntMatrix& c, const FrobeniusParams& target, long bound) {
  if (c.dim() != 3) throw InputError("conjugator_search needs a 3x3 matrix");
  return check_target(commutant_basis(c), target, bound, 0).conjugator;
}

namespace {

using M3 = std::array<long, 9>;

long det3(const M3& x) {
  return x[0] * (x[4] * x[8] - x[5] * x[7]) - x[1] * (x[3] * x[8] - x[5] * x[6]) +
         x[2] * (x[3] * x[7] - x[4] * x[6]);
}

M3 mul3(const M3& a, const M3& b) {
  M3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[3 * i + j] += a[3 * i + k] * b[3 * k + j];
  return c;
}

M3 adj3(const M3& m) {
  M3 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[3 * i + j] = m[3 * r0 + c0] * m[3 * r1 + c1] - m[3 * r0 + c1] * m[3 * r1 + c0];
    }
  return a;
}

}  // namespace

std::optional<Conjugator> brute_force_conjugator(const IntMatrix& c, const FrobeniusParams& target, long bound) {
  if (c.dim() != 3) throw InputError("brute_force_conjugator needs a 3x3 matrix");
  M3 cm, mm;
  for (int k = 0; k < 9; ++k) cm[k] = to_i64(c.entries()[k]);
  const IntMatrix m = frobenius_matrix(target);
  for (int k = 0; k < 9; ++k) mm[k] = to_i64(m.entries()[k]);
  M3 x;
  x.fill(-bound);
  for (;;) {
    if (det3(x) == 1) {
      const M3 y = mul3(mul3(x, cm), adj3(x));
      if (mul3(y, mm) == mul3(mm, y)) {
        IntMatrix xi(3);
        for (int k = 0; k < 9; ++k) xi.entries()[k] = x[k];
        return Conjugator{xi, target};
      }
    }
    int i = 8;
    while (i >= 0 && x[i] == bound) x[i--] = -bound;
    if (i < 0) return std::nullopt;
    ++x[i];
  }
}

std::optional<Conjugator> brute_force_conjugator_2x2(const IntMatrix& a, long bound) {
  if (a.dim() != 2) throw InputError("brute_force_conjugator_2x2 needs a 2x2 matrix");
  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q)
      for (long r = -bound; r <= bound; ++r)
        for (long s = -bound; s <= bound; ++s) {
          if (p * s - q * r != 1) continue;
          const IntMatrix x{2, {p, q, r, s}};
          const IntMatrix y = x * a * adjugate(x);
          // y commutes with [[0,1],[a2,a1]] iff y = u E + v M
          const Int& v = y(0, 1);
          if (sgn(v) == 0) continue;
          if (y(1, 0) % v != 0 || (y(1, 1) - y(0, 0)) % v != 0) continue;
          Conjugator w{x, {{(y(1, 1) - y(0, 0)) / v, y(1, 0) / v}}};
          if (!verify_conjugator(a, w)) throw IntegrityError("2x2 brute force check failed");
          return w;
        }
  return std::nullopt;
}

}  // namespace frobcf
