#include "frobcf/commutant.hpp"

#include <optional>

namespace frobcf {

IntVec flatten(const IntMatrix& m) { return IntVec(m.entries().begin(), m.entries().end()); }

IntMatrix unflatten(int dim, const IntVec& v) { return IntMatrix(dim, std::span<const Int>(v)); }

std::vector<IntMatrix> commutant_lattice(const IntMatrix& c) {
  if (!is_irreducible(c)) throw InputError("not in M(k,Z): characteristic polynomial is reducible");
  const int n = c.dim();
  const int nn = n * n;
  // Row (i,j) of the commutator map X -> XC - CX, column (a,b) for x_ab.
  IntRows map(nn, IntVec(nn, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Int v = 0;
          if (a == i) v += c(b, j);
          if (b == j) v -= c(i, a);
          map[i * n + j][a * n + b] = v;
        }
  const auto kernel = integer_kernel(map, nn);
  if (static_cast<int>(kernel.size()) != n)
    throw IntegrityError("commutant rank " + std::to_string(kernel.size()) + " differs from " +
                         std::to_string(n));
  std::vector<IntMatrix> out;
  for (const auto& v : kernel) out.push_back(unflatten(n, v));
  return out;
}

namespace {

IntRows rows_of(std::span<const IntMatrix> ms) {
  IntRows rows;
  for (const auto& m : ms) rows.push_back(flatten(m));
  return rows;
}

// Solves sum_k x_k cols[k] = rhs exactly; nullopt when inconsistent or singular.
std::optional<std::vector<Rat>> solve_columns(const std::vector<IntVec>& cols, const IntVec& rhs) {
  const std::size_t m = rhs.size(), n = cols.size();
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) a[i][k] = cols[k][i];
    a[i][n] = rhs[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = r;
    while (p < m && sgn(a[p][c]) == 0) ++p;
    if (p == m) return std::nullopt;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rat f = a[i][c] / a[r][c];
      for (std::size_t k = c; k <= n; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (sgn(a[i][n]) != 0) return std::nullopt;
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][n] / a[i][pivot_col[i]];
  return x;
}

}  // namespace

PowerCoefficients express_in_powers(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != 3 || b.dim() != 3) throw InputError("express_in_powers needs 3x3 matrices");
  const auto e = IntMatrix::identity(3);
  const auto sol = solve_columns({flatten(a * a), flatten(a), flatten(e)}, flatten(b));
  if (!sol) throw InputError("not a commutant member: B is not a polynomial in A");
  PowerCoefficients p{(*sol)[0], (*sol)[1], (*sol)[2]};
  if (evaluate_powers(a, p) != b) throw IntegrityError("express_in_powers reconstruction failed");
  return p;
}

IntMatrix evaluate_powers(const IntMatrix& a, const PowerCoefficients& p) {
  const auto a2 = a * a;
  IntMatrix out(a.dim());
  for (int k = 0; k < a.size(); ++k) {
    Rat v = p.alpha * a2.entries()[k] + p.beta * a.entries()[k];
    if (k % (a.dim() + 1) == 0) v += p.gamma;
    if (v.get_den() != 1) throw InputError("polynomial in A is not an integer matrix");
    out.entries()[k] = v.get_num();
  }
  return out;
}

CommutantBasis normalize_basis(std::span<const IntMatrix> raw, const IntMatrix& c) {
  if (c.dim() != 3 || raw.size() != 3) throw InputError("normalize_basis needs a rank-3 basis of a 3x3 commutant");
  const auto e = IntMatrix::identity(3);
  const auto lattice = hermite_basis(rows_of(raw));
  if (lattice.size() != 3) throw InputError("raw commutant basis is not of rank 3");
  if (!lattice_contains(lattice, flatten(e))) throw InputError("E is not in the span of the raw basis");
  // Lattice = Z E + L0 with L0 the members having a zero (0,0) entry.
  IntRows shifted;
  for (const auto& r : lattice) {
    IntVec v = r;
    v[0] = 0;
    v[4] -= r[0];
    v[8] -= r[0];
    shifted.push_back(std::move(v));
  }
  const auto l0 = hermite_basis(shifted);
  if (l0.size() != 2) throw IntegrityError("complement of E has rank " + std::to_string(l0.size()));
  CommutantBasis out;
  out.c = c;
  out.e = e;
  out.a = unflatten(3, l0[0]);
  out.b = unflatten(3, l0[1]);
  for (const auto* m : {&out.a, &out.b})
    if (!commutes(*m, c)) throw IntegrityError("basis element does not commute with C");
  out.powers = express_in_powers(out.a, out.b);
  return out;
}

CommutantBasis commutant_basis(const IntMatrix& c) {
  const auto raw = commutant_lattice(c);
  return normalize_basis(raw, c);
}

CommutantBasis basis_from(const IntMatrix& c, const IntMatrix& a, const IntMatrix& b) {
  const auto e = IntMatrix::identity(3);
  const auto lattice = commutant_lattice(c);
  const std::vector<IntMatrix> given{e, a, b};
  if (!same_lattice(rows_of(lattice), rows_of(given)))
    throw InputError("(E, A, B) is not a basis of the commutant");
  CommutantBasis out{c, e, a, b, express_in_powers(a, b)};
  return out;
}

std::array<Int, 3> basis_coordinates(const CommutantBasis& basis, const IntMatrix& x) {
  const std::vector<IntMatrix> ms{basis.e, basis.a, basis.b};
  const auto h = hermite(rows_of(ms));
  IntRows hb(h.h.begin(), h.h.begin() + h.rank);
  const auto ch = lattice_coordinates(hb, flatten(x));
  std::array<Int, 3> out{0, 0, 0};
  for (int r = 0; r < h.rank; ++r)
    for (int k = 0; k < 3; ++k) out[k] += ch[r] * h.u[r][k];
  return out;
}

Int powers_index(const CommutantBasis& basis) {
  const auto& c = basis.c;
  const std::vector<IntMatrix> powers{basis.e, c, c * c};
  IntMatrix coords(3);
  for (int i = 0; i < 3; ++i) {
    const auto v = basis_coordinates(basis, powers[i]);
    for (int k = 0; k < 3; ++k) coords(i, k) = v[k];
  }
  return abs(det(coords));
}

}  // namespace frobcf
