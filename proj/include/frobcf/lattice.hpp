#pragma once

// Integer row reduction for small dense lattices.

#include "frobcf/arith.hpp"

#include <vector>

namespace frobcf {

using IntVec = std::vector<Int>;
using IntRows = std::vector<IntVec>;

struct HermiteResult {
  IntRows h;      // row Hermite normal form, zero rows last
  IntRows u;      // unimodular transform with u * input == h
  int rank = 0;
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot), zero rows at the bottom.
HermiteResult hermite(const IntRows& rows);

/// Nonzero rows of the Hermite normal form of the lattice spanned by `rows`.
IntRows hermite_basis(const IntRows& rows);

/// Z-basis (in Hermite form) of {v in Z^n : m v = 0}, m given as rows.
IntRows integer_kernel(const IntRows& m, int ncols);

/// True when v lies in the lattice whose Hermite basis is `basis`.
bool lattice_contains(const IntRows& basis, const IntVec& v);

/// Integer coordinates of v in a Hermite basis; throws if v is not a member.
IntVec lattice_coordinates(const IntRows& basis, const IntVec& v);

/// Same lattice (compares Hermite forms).
bool same_lattice(const IntRows& a, const IntRows& b);

}  // namespace frobcf
