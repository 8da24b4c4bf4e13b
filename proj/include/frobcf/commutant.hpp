#pragma once

// The lattice of integer matrices commuting with C. For C with irreducible
// characteristic polynomial it is free of rank k and contains E, C, C^2.

#include "frobcf/lattice.hpp"
#include "frobcf/matrix.hpp"

#include <array>
#include <span>
#include <vector>

namespace frobcf {

/// B = alpha A^2 + beta A + gamma E.
struct PowerCoefficients {
  Rat alpha;
  Rat beta;
  Rat gamma;
  friend bool operator==(const PowerCoefficients&, const PowerCoefficients&) = default;
};

/// A basis (E, A, B) of the commutant of C together with the exact
/// coefficients expressing B as a quadratic polynomial in A.
struct CommutantBasis {
  IntMatrix c;
  IntMatrix e;
  IntMatrix a;
  IntMatrix b;
  PowerCoefficients powers;
};

IntVec flatten(const IntMatrix& m);
IntMatrix unflatten(int dim, const IntVec& v);

/// Hermite-reduced Z-basis of {X integer : XC = CX}. Requires C in M(k,Z);
/// the returned basis has exactly k elements.
std::vector<IntMatrix> commutant_lattice(const IntMatrix& c);

/// Re-bases a rank-3 commutant basis as (E, A, B). A and B are the Hermite
/// basis of the sublattice with vanishing (0,0) entry, so the result depends
/// only on the lattice spanned by `raw`, not on the particular raw basis.
CommutantBasis normalize_basis(std::span<const IntMatrix> raw, const IntMatrix& c);

/// commutant_lattice followed by normalize_basis.
CommutantBasis commutant_basis(const IntMatrix& c);

/// Builds a CommutantBasis from an explicit (A, B) after checking that
/// (E, A, B) is a Z-basis of the commutant of C.
CommutantBasis basis_from(const IntMatrix& c, const IntMatrix& a, const IntMatrix& b);

/// Exact rationals with B = alpha A^2 + beta A + gamma E. A must have an
/// irreducible characteristic polynomial; throws InputError when B is not a
/// polynomial in A.
PowerCoefficients express_in_powers(const IntMatrix& a, const IntMatrix& b);

/// Evaluates alpha A^2 + beta A + gamma E; throws if the result is not integral.
IntMatrix evaluate_powers(const IntMatrix& a, const PowerCoefficients& p);

/// Integer coordinates of X in the basis (E, A, B).
std::array<Int, 3> basis_coordinates(const CommutantBasis& basis, const IntMatrix& x);

/// Index of the sublattice spanned by E, C, C^2 (the order Z[C]) in the commutant.
Int powers_index(const CommutantBasis& basis);

}  // namespace frobcf
