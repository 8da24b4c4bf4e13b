#include "frobcf/unit_solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace frobcf {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Solvable: return "Solvable";
    case Verdict::Unsolvable: return "Unsolvable";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

using i128 = __int128;

long entry_key(long v) { return v <= 0 ? -2 * v - (v < 0) : 2 * v; }

// Visits the points of [-k,k]^D with sup-norm exactly k whose last nonzero
// coordinate is positive (forms are homogeneous, so |F(-v)| = |F(v)|).
// Order: colexicographic, each coordinate running 0, -1, 1, -2, 2, ...
template <std::size_t D, class Visit>
bool visit_shell(long k, Visit&& visit) {
  std::array<long, D> key{};
  auto value = [](long t) { return t % 2 == 0 ? t / 2 : -(t + 1) / 2; };
  const long top = 2 * k;
  while (true) {
    std::array<long, D> p;
    long mx = 0;
    for (std::size_t i = 0; i < D; ++i) {
      p[i] = value(key[i]);
      mx = std::max(mx, std::labs(p[i]));
    }
    long last = 0;
    for (std::size_t i = D; i-- > 0;)
      if (p[i] != 0) {
        last = p[i];
        break;
      }
    if (mx == k && last > 0 && visit(p)) return true;
    std::size_t i = 0;
    while (i < D && key[i] == top) key[i++] = 0;
    if (i == D) return false;
    ++key[i];
  }
}

template <std::size_t D, class Visit>
bool visit_box(long bound, Visit&& visit) {
  for (long k = 1; k <= bound; ++k)
    if (visit_shell<D>(k, visit)) return true;
  return false;
}

template <std::size_t N>
std::optional<std::array<long, N>> small_coefficients(const std::array<Int, N>& c) {
  std::array<long, N> out;
  for (std::size_t k = 0; k < N; ++k) {
    if (!fits_i64(c[k]) || abs(c[k]) > Int("1000000000000000000")) return std::nullopt;
    out[k] = c[k].get_si();
  }
  return out;
}

i128 eval_fast(const std::array<long, 4>& c, long m, long n) {
  const i128 M = m, N = n;
  return c[0] * M * M * M + c[1] * M * M * N + c[2] * M * N * N + c[3] * N * N * N;
}

i128 eval_fast(const std::array<long, 10>& c, long x, long y, long z) {
  const i128 X = x, Y = y, Z = z;
  return c[0] * X * X * X + c[1] * Y * Y * Y + c[2] * Z * Z * Z + c[3] * X * X * Y + c[4] * X * Y * Y +
         c[5] * X * X * Z + c[6] * X * Z * Z + c[7] * Y * Y * Z + c[8] * Y * Z * Z + c[9] * X * Y * Z;
}

bool is_unit(const Int& v) { return v == 1 || v == -1; }
bool is_unit(i128 v) { return v == 1 || v == -1; }

constexpr long kFastBound = 1 << 12;

}  // namespace

std::optional<std::array<Int, 2>> search_box(const BinaryQuadraticForm& f, long bound) {
  std::optional<std::array<Int, 2>> found;
  visit_box<2>(bound, [&](const std::array<long, 2>& p) {
    if (!is_unit(f.eval(p[0], p[1]))) return false;
    found = std::array<Int, 2>{p[0], p[1]};
    return true;
  });
  return found;
}

std::optional<std::array<Int, 2>> search_box(const IntBinaryCubic& f, long bound) {
  std::optional<std::array<Int, 2>> found;
  const auto fast = small_coefficients(f.c);
  visit_box<2>(bound, [&](const std::array<long, 2>& p) {
    const bool unit = (fast && bound <= kFastBound) ? is_unit(eval_fast(*fast, p[0], p[1]))
                                                   : is_unit(f.eval(p[0], p[1]));
    if (!unit) return false;
    found = std::array<Int, 2>{p[0], p[1]};
    return true;
  });
  return found;
}

std::optional<std::array<Int, 3>> search_box(const TernaryCubicForm& f, long bound) {
  std::optional<std::array<Int, 3>> found;
  const auto fast = small_coefficients(f.c);
  visit_box<3>(bound, [&](const std::array<long, 3>& p) {
    const bool unit = (fast && bound <= kFastBound) ? is_unit(eval_fast(*fast, p[0], p[1], p[2]))
                                                   : is_unit(f.eval(p[0], p[1], p[2]));
    if (!unit) return false;
    found = std::array<Int, 3>{p[0], p[1], p[2]};
    return true;
  });
  return found;
}

std::optional<std::array<Int, 5>> search_box(const ProductForm& f, long bound) {
  if (!is_unit(f.content())) return std::nullopt;
  const auto mn = search_box(f.mn_primitive, bound);
  if (!mn) return std::nullopt;
  const auto xyz = search_box(f.xyz_primitive, bound);
  if (!xyz) return std::nullopt;
  return std::array<Int, 5>{(*xyz)[0], (*xyz)[1], (*xyz)[2], (*mn)[0], (*mn)[1]};
}

namespace {

long mod(const Int& v, long q) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(q));
  return r.get_si();
}

// Scans residue tuples; returns the attained set, or nothing if +-1 is hit
// and `stop_on_unit` is set.
template <std::size_t D, class Eval>
std::optional<std::vector<long>> scan(long q, bool stop_on_unit, Eval&& eval) {
  std::vector<char> seen(q, 0);
  std::array<long, D> p{};
  while (true) {
    const long v = eval(p);
    seen[v] = 1;
    if (stop_on_unit && (v == 1 % q || v == q - 1)) return std::nullopt;
    std::size_t i = D;
    while (i-- > 0) {
      if (++p[i] < q) break;
      p[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::vector<long> out;
  for (long r = 0; r < q; ++r)
    if (seen[r]) out.push_back(r);
  return out;
}

template <std::size_t D, class Reduce>
std::optional<ResidueCertificate> obstruction(const std::string& factor, long cap, Reduce&& make_eval) {
  for (long q = 2; q <= cap; ++q) {
    auto eval = make_eval(q);
    if (scan<D>(q, true, eval)) {
      auto attained = *scan<D>(q, false, eval);
      return ResidueCertificate{factor, q, std::move(attained)};
    }
  }
  return std::nullopt;
}

auto quadratic_eval(const BinaryQuadraticForm& f, long q) {
  const long a = mod(f.p, q), b = mod(f.q, q), c = mod(f.r, q);
  return [=](const std::array<long, 2>& p) { return (a * p[0] * p[0] + b * p[0] * p[1] + c * p[1] * p[1]) % q; };
}

auto binary_cubic_eval(const IntBinaryCubic& f, long q) {
  std::array<long, 4> c;
  for (int k = 0; k < 4; ++k) c[k] = mod(f.c[k], q);
  return [=](const std::array<long, 2>& p) {
    const long m = p[0], n = p[1];
    const long m2 = m * m % q, n2 = n * n % q;
    return (c[0] * (m2 * m % q) + c[1] * (m2 * n % q) + c[2] * (m * n2 % q) + c[3] * (n2 * n % q)) % q;
  };
}

auto ternary_cubic_eval(const TernaryCubicForm& f, long q) {
  std::array<long, 10> c;
  for (int k = 0; k < 10; ++k) c[k] = mod(f.c[k], q);
  return [=](const std::array<long, 3>& p) {
    long s = 0;
    for (int k = 0; k < 10; ++k) {
      if (c[k] == 0) continue;
      long t = c[k];
      for (int i = 0; i < 3; ++i)
        for (int e = 0; e < kTernaryExponents[k][i]; ++e) t = t * p[i] % q;
      s += t;
    }
    return s % q;
  };
}

}  // namespace

std::vector<long> residues(const BinaryQuadraticForm& f, long q) {
  return *scan<2>(q, false, quadratic_eval(f, q));
}
std::vector<long> residues(const IntBinaryCubic& f, long q) {
  return *scan<2>(q, false, binary_cubic_eval(f, q));
}
std::vector<long> residues(const TernaryCubicForm& f, long q) {
  return *scan<3>(q, false, ternary_cubic_eval(f, q));
}

std::optional<ResidueCertificate> modular_obstruction(const BinaryQuadraticForm& f, long cap) {
  return obstruction<2>("quadratic", cap, [&](long q) { return quadratic_eval(f, q); });
}
std::optional<ResidueCertificate> modular_obstruction(const IntBinaryCubic& f, long cap) {
  return obstruction<2>("mn", cap, [&](long q) { return binary_cubic_eval(f, q); });
}
std::optional<ResidueCertificate> modular_obstruction(const TernaryCubicForm& f, long cap) {
  return obstruction<3>("xyz", cap, [&](long q) { return ternary_cubic_eval(f, q); });
}

// ---------------------------------------------------------------------------
// Binary quadratics.

namespace {

// x < sqrt(D) for non-square D > 0
bool below_root(const Int& x, const Int& d) { return sgn(x) < 0 || x * x < d; }
bool above_root(const Int& x, const Int& d) { return sgn(x) > 0 && x * x > d; }

struct Reduction {
  BinaryQuadraticForm form;
  Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;  // original(M (X,Y)) == form(X,Y)
};

// rho: (a,b,c) -> (c, b', (b'^2 - D)/(4c)) with the standard normalization of b'.
void rho(Reduction& r, const Int& d) {
  const Int& b = r.form.q;
  const Int& c = r.form.r;
  const Int two_c = 2 * abs(c);
  Int bp;
  if (above_root(abs(c), d)) {
    // b' in (-|c|, |c|]
    bp = -b - floor_div(-b, two_c) * two_c;
    if (bp > abs(c)) bp -= two_c;
  } else {
    // largest b' < sqrt(D); then b' > sqrt(D) - 2|c|
    const Int s = isqrt(d);
    Int r = (s + b) - floor_div(s + b, two_c) * two_c;
    bp = s - r;
  }
  const Int shift = (bp + b) / (2 * c);  // b' = -b + 2 c s
  const Int na = c;
  const Int nc = (bp * bp - d) / (4 * c);
  r.form = {na, bp, nc};
  // M <- M * [[0,-1],[1,s]]
  const Int n00 = r.m01, n01 = -r.m00 + shift * r.m01;
  const Int n10 = r.m11, n11 = -r.m10 + shift * r.m11;
  r.m00 = n00;
  r.m01 = n01;
  r.m10 = n10;
  r.m11 = n11;
}

std::optional<std::array<Int, 2>> definite_unit(const BinaryQuadraticForm& f) {
  // 4p F = (2p x + q y)^2 + |D| y^2 for p > 0.
  const Int sign = sgn(f.p) > 0 ? 1 : -1;
  const BinaryQuadraticForm g{sign * f.p, sign * f.q, sign * f.r};
  const Int absd = -g.discriminant();
  const Int ymax = isqrt(4 * g.p / absd) + 1;
  std::optional<std::array<Int, 2>> best;
  for (Int y = -ymax; y <= ymax; ++y) {
    const Int rest = 4 * g.p - absd * y * y;
    if (sgn(rest) < 0 || !is_square(rest)) continue;
    const Int root = isqrt(rest);
    for (const Int& t : {Int(-root), root}) {
      const Int num = t - g.q * y;
      if (sgn(num % (2 * g.p)) != 0) continue;
      const Int x = num / (2 * g.p);
      if (sgn(x) == 0 && sgn(y) == 0) continue;
      if (is_unit(f.eval(x, y))) {
        std::array<Int, 2> w{x, y};
        if (sgn(w[1]) < 0 || (sgn(w[1]) == 0 && sgn(w[0]) < 0)) w = {-w[0], -w[1]};
        auto key = [](const std::array<Int, 2>& v) {
          return std::make_tuple(std::max(abs(v[0]), abs(v[1])), entry_key(v[1].get_si()),
                                 entry_key(v[0].get_si()));
        };
        if (!best || key(w) < key(*best)) best = w;
      }
    }
  }
  return best;
}

}  // namespace

bool is_reduced_indefinite(const BinaryQuadraticForm& f) {
  const Int d = f.discriminant();
  if (sgn(d) <= 0 || is_square(d)) return false;
  const Int two_a = 2 * abs(f.p);
  return sgn(f.q) > 0 && below_root(f.q, d) && above_root(two_a + f.q, d) && below_root(two_a - f.q, d);
}

Solvability pell_decide(const BinaryQuadraticForm& f, const SolverConfig& config) {
  const Int d = f.discriminant();
  if (sgn(d) <= 0 || is_square(d)) {
    Solvability s = decide(f, config);
    return s;
  }
  Solvability out;
  out.method = "reduction-cycle";
  Reduction r{f};
  auto check = [&]() {
    if (is_unit(r.form.p)) {
      out.verdict = Verdict::Solvable;
      out.witness = {r.m00, r.m10};
      return true;
    }
    return false;
  };
  if (check()) return out;
  // A form with p == 0 is impossible for non-square D; rho needs c != 0.
  constexpr int kMaxSteps = 1'000'000;
  int steps = 0;
  while (!is_reduced_indefinite(r.form)) {
    rho(r, d);
    if (check()) return out;
    if (++steps > kMaxSteps) throw IntegrityError("reduction did not terminate");
  }
  const BinaryQuadraticForm start = r.form;
  out.cycle.push_back(start);
  while (true) {
    rho(r, d);
    if (!is_reduced_indefinite(r.form)) throw IntegrityError("rho left the set of reduced forms");
    if (check()) {
      out.cycle.clear();
      return out;
    }
    if (r.form == start) break;
    out.cycle.push_back(r.form);
    if (++steps > kMaxSteps) throw IntegrityError("reduction cycle did not close");
  }
  out.verdict = Verdict::Unsolvable;
  return out;
}

Solvability decide(const BinaryQuadraticForm& f, const SolverConfig& config) {
  const Int d = f.discriminant();
  if (sgn(d) > 0 && !is_square(d)) return pell_decide(f, config);
  Solvability out;
  if (sgn(d) < 0) {
    out.method = "definite-bound";
    if (auto w = definite_unit(f)) {
      out.verdict = Verdict::Solvable;
      out.witness = {(*w)[0], (*w)[1]};
    } else {
      out.verdict = Verdict::Unsolvable;
    }
    return out;
  }
  if (auto w = search_box(f, config.quadratic_box)) {
    out.verdict = Verdict::Solvable;
    out.method = "search";
    out.witness = {(*w)[0], (*w)[1]};
    return out;
  }
  if (auto cert = modular_obstruction(f, config.modulus_cap)) {
    out.verdict = Verdict::Unsolvable;
    out.method = "residues";
    out.certificate = std::move(cert);
    return out;
  }
  out.verdict = Verdict::Unknown;
  out.method = "exhausted";
  out.box_bound = config.quadratic_box;
  out.modulus_cap = config.modulus_cap;
  return out;
}

Solvability decide(const ProductForm& f, const SolverConfig& config) {
  Solvability out;
  out.box_bound = config.box_bound;
  out.modulus_cap = config.modulus_cap;
  const Int content = abs(f.content());
  if (content != 1) {
    out.verdict = Verdict::Unsolvable;
    out.method = "content";
    out.certificate = ResidueCertificate{"content", to_i64(content), {0}};
    return out;
  }
  const auto mn = search_box(f.mn_primitive, config.box_bound);
  if (!mn) {
    if (auto cert = modular_obstruction(f.mn_primitive, config.modulus_cap)) {
      out.verdict = Verdict::Unsolvable;
      out.method = "residues";
      out.certificate = std::move(cert);
    } else {
      out.method = "exhausted";
    }
    return out;
  }
  const auto xyz = search_box(f.xyz_primitive, config.box_bound);
  if (!xyz) {
    if (auto cert = modular_obstruction(f.xyz_primitive, config.modulus_cap)) {
      out.verdict = Verdict::Unsolvable;
      out.method = "residues";
      out.certificate = std::move(cert);
    } else {
      out.method = "exhausted";
    }
    return out;
  }
  out.verdict = Verdict::Solvable;
  out.method = "search";
  out.witness = {(*xyz)[0], (*xyz)[1], (*xyz)[2], (*mn)[0], (*mn)[1]};
  const Rat v = f.eval({out.witness[0], out.witness[1], out.witness[2], out.witness[3], out.witness[4]});
  if (v != 1 && v != -1) throw IntegrityError("factor-wise witness does not give |Q| = 1");
  return out;
}

namespace {

bool certificate_holds(const ResidueCertificate& c, const std::vector<long>& attained) {
  if (c.modulus < 2 || attained != c.attained) return false;
  return !std::binary_search(attained.begin(), attained.end(), 1 % c.modulus) &&
         !std::binary_search(attained.begin(), attained.end(), c.modulus - 1);
}

}  // namespace

bool verify(const BinaryQuadraticForm& f, const Solvability& s) {
  switch (s.verdict) {
    case Verdict::Solvable:
      return s.witness.size() == 2 && is_unit(f.eval(s.witness[0], s.witness[1]));
    case Verdict::Unsolvable:
      if (s.certificate) return certificate_holds(*s.certificate, residues(f, s.certificate->modulus));
      if (s.method == "definite-bound") return !definite_unit(f).has_value();
      if (s.method == "reduction-cycle") {
        const auto again = pell_decide(f);
        if (again.verdict != Verdict::Unsolvable || again.cycle != s.cycle) return false;
        return std::none_of(s.cycle.begin(), s.cycle.end(), [](const auto& g) { return is_unit(g.p); });
      }
      return false;
    case Verdict::Unknown:
      return true;
  }
  return false;
}

bool verify(const ProductForm& f, const Solvability& s) {
  switch (s.verdict) {
    case Verdict::Solvable: {
      if (s.witness.size() != 5) return false;
      const Rat v = f.eval({s.witness[0], s.witness[1], s.witness[2], s.witness[3], s.witness[4]});
      return v == 1 || v == -1;
    }
    case Verdict::Unsolvable: {
      if (!s.certificate) return false;
      const auto& c = *s.certificate;
      if (c.factor == "content") return abs(f.content()) == c.modulus && c.modulus > 1;
      if (c.factor == "mn") return certificate_holds(c, residues(f.mn_primitive, c.modulus));
      if (c.factor == "xyz") return certificate_holds(c, residues(f.xyz_primitive, c.modulus));
      return false;
    }
    case Verdict::Unknown:
      return true;
  }
  return false;
}

}  // namespace frobcf
