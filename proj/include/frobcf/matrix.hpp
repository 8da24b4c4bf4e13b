#pragma once

// Small dense integer matrices (2x2 and 3x3) and the exact predicates the
// rest of the library is built on: characteristic polynomials, adjugates,
// irreducibility over Q and hyperbolicity.

#include "frobcf/arith.hpp"

#include <array>
#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace frobcf {

class IntMatrix {
 public:
  IntMatrix() = default;
  /// Zero matrix of the given dimension (2 or 3).
  explicit IntMatrix(int dim);
  /// Row-major entries; the count must be dim*dim.
  IntMatrix(int dim, std::initializer_list<long> entries);
  IntMatrix(int dim, std::span<const Int> entries);

  static IntMatrix identity(int dim);

  int dim() const { return dim_; }
  int size() const { return dim_ * dim_; }

  Int& operator()(int i, int j) { return e_[i * dim_ + j]; }
  const Int& operator()(int i, int j) const { return e_[i * dim_ + j]; }

  /// Row-major view of the entries.
  std::span<const Int> entries() const { return {e_.data(), static_cast<size_t>(size())}; }
  std::span<Int> entries() { return {e_.data(), static_cast<size_t>(size())}; }

  bool is_zero() const;

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  IntMatrix& operator*=(const Int& s);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  /// Lexicographic on (dim, entries).
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

 private:
  int dim_ = 0;
  std::array<Int, 9> e_{};
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Int& s, IntMatrix a);

IntMatrix transpose(const IntMatrix& m);
Int trace(const IntMatrix& m);
Int det(const IntMatrix& m);

/// Adjugate: entry (i,j) is the signed complementary minor of entry (j,i),
/// so that M * adjugate(M) == det(M) * E.
IntMatrix adjugate(const IntMatrix& m);

/// Inverse of a unimodular matrix (det = +-1).
IntMatrix unimodular_inverse(const IntMatrix& m);

bool commutes(const IntMatrix& a, const IntMatrix& b);

/// Sum of absolute values of all entries.
Int matrix_norm(const IntMatrix& m);

/// Characteristic polynomial of a 3x3 matrix written as
/// chi(x) = -x^3 + a1 x^2 - a2 x + a3 = det(M - xE).
struct CharCubic {
  Int a1;  // trace
  Int a2;  // sum of principal 2x2 minors
  Int a3;  // determinant

  /// Value of chi at an integer point.
  Int eval(const Int& x) const { return -x * x * x + a1 * x * x - a2 * x + a3; }
  /// Discriminant of the monic x^3 - a1 x^2 + a2 x - a3.
  Int discriminant() const;

  friend bool operator==(const CharCubic&, const CharCubic&) = default;
};

CharCubic char_cubic(const IntMatrix& m);

/// x^2 - t x + d for a 2x2 matrix.
struct CharQuadratic {
  Int t;
  Int d;
  Int discriminant() const { return t * t - 4 * d; }
};

CharQuadratic char_quadratic(const IntMatrix& m);

/// Coefficients of the monic characteristic polynomial det(xE - M),
/// lowest degree first, leading 1 included. Works for dim 2 and 3.
std::vector<Int> monic_char_poly(const IntMatrix& m);

bool is_irreducible(const IntMatrix& m);
/// Irreducible with all eigenvalues real (and therefore distinct).
bool is_hyperbolic(const IntMatrix& m);

/// Parses "r;r;r" with comma-separated integer entries. Rejects non-square
/// input and dimensions other than 2 and 3.
IntMatrix parse_matrix(const std::string& text);
/// Inverse of parse_matrix.
std::string format_matrix(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace frobcf
