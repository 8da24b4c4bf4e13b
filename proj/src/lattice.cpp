#include "frobcf/lattice.hpp"

#include <algorithm>
#include <utility>

namespace frobcf {

namespace {

void combine(IntVec& r, IntVec& s, const Int& a, const Int& b, const Int& c, const Int& d) {
  // (r, s) <- (a r + b s, c r + d s)
  for (std::size_t k = 0; k < r.size(); ++k) {
    Int x = a * r[k] + b * s[k];
    Int y = c * r[k] + d * s[k];
    r[k] = std::move(x);
    s[k] = std::move(y);
  }
}

void axpy(IntVec& r, const Int& q, const IntVec& s) {
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= q * s[k];
}

}  // namespace

HermiteResult hermite(const IntRows& rows) {
  HermiteResult res;
  res.h = rows;
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows[0].size() : 0;
  res.u.assign(m, IntVec(m, 0));
  for (std::size_t i = 0; i < m; ++i) res.u[i][i] = 1;

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(res.h[i][c]) == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), res.h[r][c].get_mpz_t(),
                 res.h[i][c].get_mpz_t());
      const Int a = res.h[r][c] / g;
      const Int b = res.h[i][c] / g;
      // [[s, t], [-b, a]] has determinant s a + t b = 1
      combine(res.h[r], res.h[i], s, t, -b, a);
      combine(res.u[r], res.u[i], s, t, -b, a);
    }
    if (sgn(res.h[r][c]) == 0) continue;
    if (sgn(res.h[r][c]) < 0) {
      for (auto& x : res.h[r]) x = -x;
      for (auto& x : res.u[r]) x = -x;
    }
    for (std::size_t k = 0; k < r; ++k) {
      const Int q = floor_div(res.h[k][c], res.h[r][c]);
      if (sgn(q) == 0) continue;
      axpy(res.h[k], q, res.h[r]);
      axpy(res.u[k], q, res.u[r]);
    }
    ++r;
  }
  res.rank = static_cast<int>(r);
  return res;
}

IntRows hermite_basis(const IntRows& rows) {
  auto h = hermite(rows);
  h.h.resize(h.rank);
  return h.h;
}

IntRows integer_kernel(const IntRows& m, int ncols) {
  // Row-reduce the transpose; zero rows of the result mark kernel vectors
  // in the transform.
  IntRows t(ncols, IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  if (m.empty()) {
    IntRows id(ncols, IntVec(ncols, 0));
    for (int i = 0; i < ncols; ++i) id[i][i] = 1;
    return id;
  }
  auto h = hermite(t);
  IntRows kernel(h.u.begin() + h.rank, h.u.end());
  return hermite_basis(kernel);
}

namespace {

// Reduces v against a Hermite basis; returns coordinates, leaves remainder in v.
IntVec reduce(const IntRows& basis, IntVec& v) {
  IntVec coords(basis.size(), 0);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto& row = basis[r];
    std::size_t p = 0;
    while (p < row.size() && sgn(row[p]) == 0) ++p;
    if (p == row.size()) continue;
    if (sgn(v[p] % row[p]) != 0) return coords;  // not divisible: leave nonzero
    const Int q = v[p] / row[p];
    coords[r] = q;
    axpy(v, q, row);
  }
  return coords;
}

}  // namespace

bool lattice_contains(const IntRows& basis, const IntVec& v) {
  IntVec w = v;
  reduce(basis, w);
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return sgn(x) == 0; });
}

IntVec lattice_coordinates(const IntRows& basis, const IntVec& v) {
  IntVec w = v;
  auto coords = reduce(basis, w);
  if (!std::all_of(w.begin(), w.end(), [](const Int& x) { return sgn(x) == 0; }))
    throw InputError("vector is not in the lattice");
  return coords;
}

bool same_lattice(const IntRows& a, const IntRows& b) { return hermite_basis(a) == hermite_basis(b); }

}  // namespace frobcf
