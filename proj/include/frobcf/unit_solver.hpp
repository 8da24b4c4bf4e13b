#pragma once

// Deciding |F| = 1 over the integers for the forms built in forms.hpp.
//
// Binary quadratics with non-square discriminant are decided completely
// (reduction cycle when indefinite, ellipse bound when definite). For the
// cubic product form the procedure is a bounded witness search plus local
// obstructions, so Unknown is a legitimate outcome.

#include "frobcf/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frobcf {

enum class Verdict { Solvable, Unsolvable, Unknown };

std::string_view verdict_name(Verdict v);

/// The form (or one integral factor of it) never takes the values +-1
/// modulo `modulus`; `attained` lists the residues it does take.
struct ResidueCertificate {
  std::string factor;  // "quadratic", "mn", "xyz", or "content"
  long modulus = 0;
  std::vector<long> attained;
};

struct Solvability {
  Verdict verdict = Verdict::Unknown;
  std::string method;        // how the verdict was reached
  std::vector<Int> witness;  // Solvable: (x,y) or (x,y,z,m,n)
  std::optional<ResidueCertificate> certificate;
  std::vector<BinaryQuadraticForm> cycle;  // Unsolvable by reduction cycle
  long box_bound = 0;                      // limits that were tried
  long modulus_cap = 0;
};

struct SolverConfig {
  long box_bound = 12;       // per variable, for each cubic factor
  long quadratic_box = 25;   // for binary quadratics
  long modulus_cap = 100;
};

/// First nonzero point of [-bound, bound]^d with |F| = 1, scanning shells of
/// growing sup-norm and lexicographically inside a shell.
std::optional<std::array<Int, 2>> search_box(const BinaryQuadraticForm& f, long bound);
std::optional<std::array<Int, 2>> search_box(const IntBinaryCubic& f, long bound);
std::optional<std::array<Int, 3>> search_box(const TernaryCubicForm& f, long bound);
/// Factor-wise search on the primitive factors; the witness is (x,y,z,m,n).
/// Returns nullopt when the content of Q is not a unit.
std::optional<std::array<Int, 5>> search_box(const ProductForm& f, long bound);

/// Smallest q in [2, modulus_cap] for which +-1 mod q is never attained.
std::optional<ResidueCertificate> modular_obstruction(const BinaryQuadraticForm& f, long modulus_cap);
std::optional<ResidueCertificate> modular_obstruction(const IntBinaryCubic& f, long modulus_cap);
std::optional<ResidueCertificate> modular_obstruction(const TernaryCubicForm& f, long modulus_cap);

/// Sorted set of residues attained modulo q.
std::vector<long> residues(const BinaryQuadraticForm& f, long q);
std::vector<long> residues(const IntBinaryCubic& f, long q);
std::vector<long> residues(const TernaryCubicForm& f, long q);

/// Reduction-cycle decision for indefinite forms with non-square
/// discriminant. Other forms fall back to search and obstruction.
Solvability pell_decide(const BinaryQuadraticForm& f, const SolverConfig& config = {});

/// Reduced in the Gauss sense: 0 < b < sqrt(D), sqrt(D) - b < 2|a| < sqrt(D) + b.
bool is_reduced_indefinite(const BinaryQuadraticForm& f);

Solvability decide(const BinaryQuadraticForm& f, const SolverConfig& config = {});
Solvability decide(const ProductForm& f, const SolverConfig& config = {});

/// Re-checks a verdict from scratch: witness values, residue scans, cycles.
bool verify(const BinaryQuadraticForm& f, const Solvability& s);
bool verify(const ProductForm& f, const Solvability& s);

}  // namespace frobcf
