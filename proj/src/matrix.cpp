#include "frobcf/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace frobcf {

Rat parse_rational(const std::string& text) {
  Rat r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw InputError("not a rational number: '" + text + "'");
  if (sgn(r.get_den()) == 0) throw InputError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

IntMatrix::IntMatrix(int dim) : dim_(dim) {
  if (dim != 2 && dim != 3) throw InputError("matrix dimension must be 2 or 3");
}

IntMatrix::IntMatrix(int dim, std::initializer_list<long> entries) : IntMatrix(dim) {
  if (static_cast<int>(entries.size()) != dim * dim)
    throw InputError("wrong number of matrix entries");
  std::copy(entries.begin(), entries.end(), e_.begin());
}

IntMatrix::IntMatrix(int dim, std::span<const Int> entries) : IntMatrix(dim) {
  if (static_cast<int>(entries.size()) != dim * dim)
    throw InputError("wrong number of matrix entries");
  std::copy(entries.begin(), entries.end(), e_.begin());
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.begin() + size(), [](const Int& x) { return sgn(x) == 0; });
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  for (int k = 0; k < size(); ++k) e_[k] += o.e_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  for (int k = 0; k < size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Int& s) {
  for (int k = 0; k < size(); ++k) e_[k] *= s;
  return *this;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.dim_ == b.dim_ && std::equal(a.e_.begin(), a.e_.begin() + a.size(), b.e_.begin());
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (int k = 0; k < a.size(); ++k) {
    int c = cmp(a.e_[k], b.e_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
IntMatrix operator-(IntMatrix a) { return a *= Int(-1); }
IntMatrix operator*(const Int& s, IntMatrix a) { return a *= s; }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("dimension mismatch in product");
  const int n = a.dim();
  IntMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int s = 0;
      for (int k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) t(j, i) = m(i, j);
  return t;
}

Int trace(const IntMatrix& m) {
  Int t = 0;
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

Int det(const IntMatrix& m) {
  if (m.dim() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

IntMatrix adjugate(const IntMatrix& m) {
  IntMatrix a(m.dim());
  if (m.dim() == 2) {
    a(0, 0) = m(1, 1);
    a(0, 1) = -m(0, 1);
    a(1, 0) = -m(1, 0);
    a(1, 1) = m(0, 0);
    return a;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return a;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Int d = det(m);
  if (d != 1 && d != -1) throw InputError("matrix is not unimodular");
  return d * adjugate(m);
}

bool commutes(const IntMatrix& a, const IntMatrix& b) { return a * b == b * a; }

Int matrix_norm(const IntMatrix& m) {
  Int s = 0;
  for (const Int& x : m.entries()) s += abs(x);
  return s;
}

Int CharCubic::discriminant() const {
  // monic x^3 + b x^2 + c x + d
  const Int b = -a1, c = a2, d = -a3;
  return b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
}

CharCubic char_cubic(const IntMatrix& m) {
  if (m.dim() != 3) throw InputError("char_cubic needs a 3x3 matrix");
  CharCubic c;
  c.a1 = trace(m);
  c.a2 = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
         (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  c.a3 = det(m);
  return c;
}

CharQuadratic char_quadratic(const IntMatrix& m) {
  if (m.dim() != 2) throw InputError("char_quadratic needs a 2x2 matrix");
  return {trace(m), det(m)};
}

std::vector<Int> monic_char_poly(const IntMatrix& m) {
  if (m.dim() == 2) {
    const auto q = char_quadratic(m);
    return {q.d, -q.t, 1};
  }
  const auto c = char_cubic(m);
  return {-c.a3, c.a2, -c.a1, 1};
}

namespace {

Int eval_poly(const std::vector<Int>& p, const Int& x) {
  Int v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

// Monic integer cubic: any rational root is an integer dividing the constant term.
bool cubic_has_integer_root(const std::vector<Int>& p) {
  const Int& c0 = p[0];
  if (sgn(c0) == 0) return true;
  const Int n = abs(c0);
  auto test = [&](const Int& d) { return sgn(eval_poly(p, d)) == 0 || sgn(eval_poly(p, -d)) == 0; };
  if (n < Int("1000000000000")) {
    for (Int d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      if (test(d) || test(n / d)) return true;
    }
    return false;
  }
  // Large constant term: locate real roots numerically, then test the
  // neighbouring integers exactly.
  const long double b = p[2].get_d(), c = p[1].get_d(), d = p[0].get_d();
  auto f = [&](long double x) { return ((x + b) * x + c) * x + d; };
  const long double bound = 1 + std::max({std::fabs(b), std::fabs(c), std::fabs(d)});
  const int steps = 1 << 16;
  long double prev = -bound;
  for (int s = 1; s <= steps; ++s) {
    const long double x = -bound + 2 * bound * s / steps;
    if ((f(prev) <= 0) != (f(x) <= 0) || f(x) == 0) {
      long double lo = prev, hi = x;
      for (int it = 0; it < 200; ++it) {
        const long double mid = (lo + hi) / 2;
        if ((f(lo) <= 0) == (f(mid) <= 0)) lo = mid; else hi = mid;
      }
      const Int r(static_cast<double>(std::floor(lo)));
      for (int k = -2; k <= 2; ++k)
        if (sgn(eval_poly(p, r + k)) == 0) return true;
    }
    prev = x;
  }
  return false;
}

}  // namespace

bool is_irreducible(const IntMatrix& m) {
  if (m.dim() == 2) return !is_square(char_quadratic(m).discriminant());
  return !cubic_has_integer_root(monic_char_poly(m));
}

bool is_hyperbolic(const IntMatrix& m) {
  if (!is_irreducible(m)) return false;
  if (m.dim() == 2) return sgn(char_quadratic(m).discriminant()) > 0;
  return sgn(char_cubic(m).discriminant()) > 0;
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Int> r;
    std::stringstream es(row);
    std::string cell;
    while (std::getline(es, cell, ',')) {
      cell.erase(std::remove_if(cell.begin(), cell.end(), [](unsigned char ch) { return std::isspace(ch); }),
                 cell.end());
      Int v;
      if (cell.empty() || v.set_str(cell, 10) != 0)
        throw InputError("bad matrix entry '" + cell + "' in '" + text + "'");
      r.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  const int n = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw InputError("matrix is not square: '" + text + "'");
  if (n != 2 && n != 3) throw InputError("matrix must be 2x2 or 3x3: '" + text + "'");
  std::vector<Int> flat;
  for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return IntMatrix(n, flat);
}

std::string format_matrix(const IntMatrix& m) {
  std::string s;
  for (int i = 0; i < m.dim(); ++i) {
    if (i) s += ';';
    for (int j = 0; j < m.dim(); ++j) {
      if (j) s += ',';
      s += m(i, j).get_str();
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << format_matrix(m); }

}  // namespace frobcf
