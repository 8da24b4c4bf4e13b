#pragma once

// The polynomial forms whose unit values decide Frobenius type:
//   Q_A(x,y)              binary quadratic of a 2x2 matrix,
//   Pbar(m,n)             binary cubic in the commutant coordinates,
//   Ptilde_{A,B}(x,y,z)   ternary cubic built from 2x2 brackets,
//   Q = Pbar * Ptilde_{A,adj A}.

#include "frobcf/commutant.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace frobcf {

/// p x^2 + q xy + r y^2.
struct BinaryQuadraticForm {
  Int p, q, r;
  Int eval(const Int& x, const Int& y) const { return p * x * x + q * x * y + r * y * y; }
  Int discriminant() const { return q * q - 4 * p * r; }
  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

/// Q_A for A in M(2,Z), divided by gcd(a12, a21, a22 - a11).
BinaryQuadraticForm q2(const IntMatrix& a);

/// c[0] m^3 + c[1] m^2 n + c[2] m n^2 + c[3] n^3.
template <class T>
struct BinaryCubic {
  std::array<T, 4> c{};
  T eval(const T& m, const T& n) const {
    return c[0] * m * m * m + c[1] * m * m * n + c[2] * m * n * n + c[3] * n * n * n;
  }
  friend bool operator==(const BinaryCubic&, const BinaryCubic&) = default;
};

/// Monomial order for ternary cubics: x^3, y^3, z^3, x^2y, xy^2, x^2z, xz^2,
/// y^2z, yz^2, xyz.
inline constexpr std::array<std::array<int, 3>, 10> kTernaryExponents{{
    {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {1, 2, 0},
    {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}, {1, 1, 1},
}};

template <class T>
struct TernaryCubic {
  std::array<T, 10> c{};
  T eval(const T& x, const T& y, const T& z) const {
    const T v[3] = {x, y, z};
    T s = 0;
    for (int k = 0; k < 10; ++k) {
      T t = c[k];
      for (int i = 0; i < 3; ++i)
        for (int e = 0; e < kTernaryExponents[k][i]; ++e) t *= v[i];
      s += t;
    }
    return s;
  }
  friend bool operator==(const TernaryCubic&, const TernaryCubic&) = default;
};

using BinaryCubicForm = BinaryCubic<Rat>;
using TernaryCubicForm = TernaryCubic<Int>;
using IntBinaryCubic = BinaryCubic<Int>;

/// Monomial names in storage order, e.g. "m^2n", "xyz".
std::string_view binary_monomial(int k);
std::string_view ternary_monomial(int k);

/// Pbar(m, n) from the characteristic cubic of A and B = alpha A^2 + beta A + gamma E.
/// gamma does not enter.
BinaryCubicForm p_bar(const CharCubic& chi, const Rat& alpha, const Rat& beta);

/// <ij,kl>_{A,B} = a_ij b_kl - a_kl b_ij with 1-based indices in 1..3.
Int bracket(const IntMatrix& a, const IntMatrix& b, int ij, int kl);

/// One bracket term of the Ptilde table: coefficient * <ij,kl>.
struct BracketTerm {
  int coefficient;
  int ij;
  int kl;
};

/// Bracket sums for each monomial, in the storage order above.
const std::array<std::vector<BracketTerm>, 10>& p_tilde_table();

TernaryCubicForm p_tilde(const IntMatrix& a, const IntMatrix& b);

struct ProductForm {
  CommutantBasis basis;
  CharCubic chi;               // of basis.a
  BinaryCubicForm cubic_mn;    // Pbar, unscaled
  TernaryCubicForm cubic_xyz;  // Ptilde_{A, adj A}, unscaled
  IntBinaryCubic mn_primitive;
  TernaryCubicForm xyz_primitive;
  Rat scale_mn;   // cubic_mn = scale_mn * mn_primitive
  Rat scale_xyz;  // cubic_xyz = scale_xyz * xyz_primitive
  /// scale_mn * scale_xyz: the content of Q up to sign. Always an integer.
  Int content() const;
  /// Exact value of the unscaled product at an integer point.
  Rat eval(const std::array<Int, 5>& xyzmn) const;
};

/// Builds Q_{A,B} for the canonical commutant basis of C.
ProductForm q3(const IntMatrix& c);
/// Builds Q_{A,B} for a caller-chosen basis (E, basis.a, basis.b).
ProductForm q3(const CommutantBasis& basis);

/// Splits a form into scale * primitive, the primitive part having coprime
/// integer coefficients and a positive first nonzero coefficient in storage
/// order.
std::pair<IntBinaryCubic, Rat> primitive_part(const BinaryCubicForm& f);
std::pair<TernaryCubicForm, Rat> primitive_part(const TernaryCubicForm& f);

}  // namespace frobcf
