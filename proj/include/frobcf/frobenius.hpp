#pragma once

// Frobenius matrices and Frobenius-type verdicts for 2x2 and 3x3 matrices.

#include "frobcf/unit_solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frobcf {

/// (a1, ..., ak) with characteristic polynomial (-1)^k (x^k - a1 x^(k-1) - ... - ak).
/// Not the CharCubic sign convention: CharCubic{a1, -a2, a3} describes the same polynomial.
struct FrobeniusParams {
  std::vector<Int> a;
  int k() const { return static_cast<int>(a.size()); }
  friend bool operator==(const FrobeniusParams&, const FrobeniusParams&) = default;
  friend auto operator<=>(const FrobeniusParams& x, const FrobeniusParams& y) {
    return x.a <=> y.a;
  }
};

FrobeniusParams params(std::initializer_list<long> a);
CharCubic to_char_cubic(const FrobeniusParams& p);
FrobeniusParams frobenius_params(const CharCubic& chi);
/// Parameters of the Frobenius matrix with the same characteristic polynomial as m.
FrobeniusParams frobenius_params_of(const IntMatrix& m);
/// "(a1,a2,a3)"
std::string format_params(const FrobeniusParams& p);

/// Zero column and identity block on top, bottom row (ak, ..., a1).
IntMatrix frobenius_matrix(const FrobeniusParams& p);

/// X in SL(k,Z) with X C X^-1 commuting with frobenius_matrix(target).
struct Conjugator {
  IntMatrix x;
  FrobeniusParams target;
};

/// det X = 1, and X C X^-1 (integral since X is unimodular) commutes with the target.
bool verify_conjugator(const IntMatrix& c, const Conjugator& w);

enum class FrobeniusStatus { FrobeniusType, NonFrobenius, Undecided };
std::string_view status_name(FrobeniusStatus s);

struct FrobeniusVerdict {
  FrobeniusStatus status = FrobeniusStatus::Undecided;
  Solvability solution;                  // the unit-equation record behind the verdict
  std::optional<Conjugator> conjugator;  // built from the witness and verified
  std::vector<long> boxes_tried;
};

struct DecisionConfig {
  SolverConfig solver;
  /// Box bounds tried in turn while the answer stays Unknown.
  std::vector<long> escalation{12, 24, 48};
};

/// Conjugator X = [u; uF] (2x2) or +-[u; uF; uF^2] (3x3) from a unit witness.
Conjugator conjugator_from_witness(const IntMatrix& a, const Solvability& s);
Conjugator conjugator_from_witness(const CommutantBasis& basis, const Solvability& s);

FrobeniusVerdict decide_thm2(const IntMatrix& a, const DecisionConfig& config = {});
FrobeniusVerdict decide_thm3(const IntMatrix& c, const DecisionConfig& config = {});
/// Same decision for a caller-chosen commutant basis.
FrobeniusVerdict decide_thm3(const CommutantBasis& basis, const DecisionConfig& config = {});

/// The elements F of the commutant of C with the characteristic polynomial of
/// the target, sorted. Located numerically from the eigenvalues, each one
/// confirmed exactly.
std::vector<IntMatrix> commutant_roots(const CommutantBasis& basis, const FrobeniusParams& target);

/// Conjugators to a fixed target all have the form +-[u; uF; uF^2] with F in
/// commutant_roots. Searches u in [-bound, bound]^3 (canonical shell order)
/// for |det| = 1, trying the roots in sorted order within each shell.
std::optional<Conjugator> conjugator_search(const IntMatrix& c, const FrobeniusParams& target, long bound);

/// Outcome of asking whether C is conjugate into the commutant of one target.
struct TargetCheck {
  std::optional<Conjugator> conjugator;
  /// Every root's cubic det(u; uF; uF^2) misses +-1 modulo its modulus
  /// (or there are no roots): no conjugator exists.
  bool refuted = false;
  std::vector<long> moduli;
};
TargetCheck check_target(const CommutantBasis& basis, const FrobeniusParams& target, long bound,
                         long modulus_cap);

/// Literal enumeration of X with entries in [-bound, bound], det X = 1.
/// Exponential; used as an independent oracle on small bounds.
std::optional<Conjugator> brute_force_conjugator(const IntMatrix& c, const FrobeniusParams& target, long bound);

/// 2x2: first X in [-bound, bound]^4 with det 1 and X A X^-1 commuting with
/// some Frobenius matrix; the target is read off X A X^-1.
std::optional<Conjugator> brute_force_conjugator_2x2(const IntMatrix& a, long bound);

}  // namespace frobcf
