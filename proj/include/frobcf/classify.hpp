#pragma once

// Classification of the continued fractions of hyperbolic 3x3 matrices
// against three Frobenius representatives.

#include "frobcf/frobenius.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frobcf {

enum class FractionLabel { GoldenRatio, M131, M031, Other, Unresolved };

struct Representative {
  FractionLabel label;
  std::string name;  // "GoldenRatio", "M_{-1,3,1}", "M_{0,3,1}"
  FrobeniusParams params;
};

/// M_{-1,2,1}, M_{-1,3,1}, M_{0,3,1}, in this order.
const std::vector<Representative>& representatives();

struct FractionClass {
  FractionLabel label = FractionLabel::Unresolved;
  FrobeniusParams params;                 // representative or Other target
  std::optional<Conjugator> certificate;  // verified conjugator, when found
  std::string method;                     // "conjugator", "unit-witness", "sail-invariant", ""
  long bound = 0;                         // sup-norm of u in X = [u; uF; uF^2]
  std::vector<std::string> refuted;       // representatives excluded by a modulus
};

/// "GoldenRatio", "M_{-1,3,1}", "M_{0,3,1}", "Other(a1,a2,a3)" or "Unresolved".
std::string class_name(const FractionClass& c);

/// Labels by fraction invariant when conjugator search is inconclusive.
/// Returns the representative index whose invariant matches, if exactly one does.
using FallbackLabeler = std::function<std::optional<std::size_t>(const IntMatrix&)>;

/// Fallback comparing fraction invariants (sail torus decompositions) with
/// those of the representatives, which are computed once and cached.
FallbackLabeler sail_invariant_labeler();

/// True when the sail invariants of c equal those of the representative the
/// label names. Other and Unresolved labels are not checked (returns true).
bool sail_consistent(const IntMatrix& c, const FractionClass& k);

struct ClassifyConfig {
  long conjugator_cap = 4;
  long modulus_cap = 100;
  DecisionConfig decision;
  FallbackLabeler fallback;  // empty: no fallback
};

/// Tries the three representatives by conjugator search up to the cap. When
/// none succeeds: if all three are refuted modulo some q, the unit-equation
/// witness names an Other target; otherwise the fallback labeler is asked.
FractionClass classify_fraction(const IntMatrix& c, const ClassifyConfig& config = {});

struct ClassificationReport {
  int norm = 0;
  std::vector<IntMatrix> matrices;     // H(3,Z) on the sphere, canonical order
  std::vector<FractionClass> classes;  // parallel to matrices
  std::map<std::string, std::size_t> counts;
  std::size_t unresolved() const;
};

ClassificationReport classification_report(int norm, const ClassifyConfig& config = {}, int workers = 1,
                                           int census_cap = 7);

}  // namespace frobcf
