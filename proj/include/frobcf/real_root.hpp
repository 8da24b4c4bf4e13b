#pragma once

// Real roots of monic integer cubics held as dyadic isolating intervals, and
// exact sign evaluation of integer polynomials at such a root.

#include "frobcf/arith.hpp"

#include <array>
#include <vector>

namespace frobcf {

/// c[0] + c[1] t + c[2] t^2, an element of Z[t] reduced modulo a monic cubic.
using FieldPoly = std::array<Int, 3>;

/// Monic cubic t^3 + c[2] t^2 + c[1] t + c[0].
struct MonicCubic {
  std::array<Int, 3> c;

  /// sign of f(num / 2^k)
  int sign_at(const Int& num, int k) const;
  /// Reduces a polynomial of degree <= 4 (coefficients lowest first).
  FieldPoly reduce(const std::vector<Int>& p) const;
  FieldPoly multiply(const FieldPoly& a, const FieldPoly& b) const;
};

/// A simple irrational real root lambda of a monic cubic, isolated in the
/// open interval (lo / 2^k, (lo + 1) / 2^k).
class RealRoot {
 public:
  RealRoot(MonicCubic f, Int lo, int k);

  const MonicCubic& poly() const { return f_; }
  double approx() const;

  /// Exact sign of g(lambda); g must not vanish at lambda unless it is the
  /// zero polynomial (then 0). Refines on a private copy when the cached
  /// interval straddles zero.
  int sign(const FieldPoly& g) const;

  /// Halves the interval in place.
  void refine();
  /// Refines until the interval width is at most 2^-k.
  void refine_to(int k);
  int precision() const { return k_; }
  const Int& lower_numerator() const { return lo_; }

 private:
  // Interval of g(lambda) * 2^(2k) at the current precision.
  void bounds(const FieldPoly& g, Int& low, Int& high) const;
  void update_fast();

  MonicCubic f_;
  Int lo_;
  int k_;
  // fast path at a fixed precision
  bool fast_ok_ = false;
  int fast_k_ = 0;
  __int128 fl_ = 0, fh_ = 0;   // lambda * 2^fast_k bounds
  __int128 sl_ = 0, sh_ = 0;   // lambda^2 * 2^(2 fast_k) bounds
};

/// The three real roots of a monic cubic with positive discriminant and no
/// rational root, in increasing order, each refined to at least `precision` bits.
std::vector<RealRoot> isolate_real_roots(const MonicCubic& f, int precision = 40);

}  // namespace frobcf
