#include "frobcf/classify.hpp"

#include "frobcf/census.hpp"
#include "frobcf/parallel.hpp"
#include "frobcf/sail.hpp"

namespace frobcf {

const std::vector<Representative>& representatives() {
  static const std::vector<Representative> reps{
      {FractionLabel::GoldenRatio, "GoldenRatio", params({-1, 2, 1})},
      {FractionLabel::M131, "M_{-1,3,1}", params({-1, 3, 1})},
      {FractionLabel::M031, "M_{0,3,1}", params({0, 3, 1})},
  };
  return reps;
}

std::string class_name(const FractionClass& c) {
  switch (c.label) {
    case FractionLabel::GoldenRatio: return "GoldenRatio";
    case FractionLabel::M131: return "M_{-1,3,1}";
    case FractionLabel::M031: return "M_{0,3,1}";
    case FractionLabel::Other: return "Other" + format_params(c.params);
    case FractionLabel::Unresolved: return "Unresolved";
  }
  return "?";
}

FractionClass classify_fraction(const IntMatrix& c, const ClassifyConfig& config) {
  if (c.dim() != 3 || !is_hyperbolic(c)) throw InputError("classification needs a matrix in H(3,Z)");
  const CommutantBasis basis = commutant_basis(c);
  const auto& reps = representatives();
  FractionClass out;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const TargetCheck t = check_target(basis, reps[i].params, config.conjugator_cap, config.modulus_cap);
    if (t.conjugator) {
      long b = 0;
      for (int j = 0; j < 3; ++j) b = std::max(b, to_i64(abs(t.conjugator->x(0, j))));
      if (!best || b < out.bound) {
        best = i;
        out.bound = b;
        out.certificate = t.conjugator;
      }
    } else if (t.refuted) {
      out.refuted.push_back(reps[i].name);
    }
  }
  if (best) {
    out.label = reps[*best].label;
    out.params = reps[*best].params;
    out.method = "conjugator";
    return out;
  }
  if (out.refuted.size() == reps.size()) {
    const FrobeniusVerdict v = decide_thm3(basis, config.decision);
    if (v.conjugator) {
      out.label = FractionLabel::Other;
      out.params = v.conjugator->target;
      out.certificate = v.conjugator;
      out.method = "unit-witness";
    }
    return out;
  }
  if (config.fallback) {
    if (const auto idx = config.fallback(c)) {
      out.label = reps[*idx].label;
      out.params = reps[*idx].params;
      out.method = "sail-invariant";
    }
  }
  return out;
}

namespace {

const std::vector<std::vector<TorusInvariant>>& representative_invariants() {
  static const std::vector<std::vector<TorusInvariant>> invs = [] {
    std::vector<std::vector<TorusInvariant>> out;
    for (const auto& r : representatives()) out.push_back(fraction_invariant(frobenius_matrix(r.params)));
    return out;
  }();
  return invs;
}

}  // namespace

FallbackLabeler sail_invariant_labeler() {
  return [](const IntMatrix& c) -> std::optional<std::size_t> {
    const auto& reps = representative_invariants();
    const auto inv = fraction_invariant(c);
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (reps[i] == inv) {
        if (hit) return std::nullopt;
        hit = i;
      }
    return hit;
  };
}

bool sail_consistent(const IntMatrix& c, const FractionClass& k) {
  const auto& reps = representatives();
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (reps[i].label == k.label) return representative_invariants()[i] == fraction_invariant(c);
  return true;
}

std::size_t ClassificationReport::unresolved() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.label == FractionLabel::Unresolved;
  return n;
}

ClassificationReport classification_report(int norm, const ClassifyConfig& config, int workers, int census_cap) {
  if (norm < 0 || norm > census_cap)
    throw InputError("norm " + std::to_string(norm) + " exceeds the census cap " + std::to_string(census_cap));
  ClassificationReport r;
  r.norm = norm;
  r.matrices = matrices_of_class(3, norm, MatrixClass::Hyperbolic, workers);
  r.classes = parallel_map(r.matrices.size(), workers,
                           [&](std::size_t i) { return classify_fraction(r.matrices[i], config); });
  for (const auto& c : r.classes) ++r.counts[class_name(c)];
  return r;
}

}  // namespace frobcf
