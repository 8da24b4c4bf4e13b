#include "frobcf/repro.hpp"

#include "frobcf/census.hpp"
#include "frobcf/forms.hpp"
#include "frobcf/parallel.hpp"
#include "frobcf/sail.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace frobcf {

namespace {

template <class Body>
ClaimResult timed(int id, std::string title, Body&& body) {
  ClaimResult r;
  r.id = id;
  r.title = std::move(title);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "/" : "") << v[i];
  return os.str();
}

}  // namespace

IntMatrix random_unimodular(std::mt19937_64& rng, int steps, long spread) {
  std::uniform_int_distribution<int> idx(0, 2), coef(-1, 1);
  for (;;) {
    IntMatrix p = IntMatrix::identity(3);
    for (int s = 0; s < steps; ++s) {
      const int i = idx(rng), j = idx(rng), c = coef(rng);
      if (i == j || c == 0) continue;
      IntMatrix e = IntMatrix::identity(3);
      e(i, j) = c;
      p = p * e;
    }
    bool small = true;
    for (const auto& x : p.entries()) small = small && abs(x) <= spread;
    if (small && p != IntMatrix::identity(3)) return p;
  }
}

ClaimResult claim_census(const ReproConfig& config) {
  return timed(1, "census counts", [&](ClaimResult& r) {
    const std::vector<std::uint64_t> want_m{0, 0, 0, 0, 240, 1248, 8112}, want_h{0, 0, 0, 0, 0, 48, 912};
    std::vector<std::uint64_t> m, h;
    for (int n = 0; n <= 6; ++n) {
      const CensusReport c = census(3, n, {7, config.workers});
      m.push_back(c.count_m);
      h.push_back(c.count_h);
    }
    r.pass = m == want_m && h == want_h;
    r.detail = "M by norm 0..6 = " + join(m) + ", H = " + join(h);
  });
}

ClaimResult claim_classification(const ReproConfig& config) {
  return timed(2, "classification", [&](ClaimResult& r) {
    ClassifyConfig cc;
    cc.conjugator_cap = config.conjugator_cap;
    cc.modulus_cap = config.modulus_cap;
    cc.decision = config.decision;
    cc.fallback = sail_invariant_labeler();
    const ClassificationReport r5 = classification_report(5, cc, config.workers);
    const ClassificationReport r6 = classification_report(6, cc, config.workers);
    auto count = [](const ClassificationReport& rep, const std::string& k) {
      const auto it = rep.counts.find(k);
      return it == rep.counts.end() ? std::size_t{0} : it->second;
    };
    const std::size_t g5 = count(r5, "GoldenRatio");
    const std::size_t g6 = count(r6, "GoldenRatio"), a6 = count(r6, "M_{-1,3,1}"), b6 = count(r6, "M_{0,3,1}");
    // sail cross-check on a fixed sample of the norm-6 labels
    std::vector<std::size_t> sample;
    for (std::size_t i = 0; i < r6.matrices.size(); i += 16) sample.push_back(i);
    const auto agree = parallel_map(sample.size(), config.workers, [&](std::size_t k) {
      return sail_consistent(r6.matrices[sample[k]], r6.classes[sample[k]]) ? 1 : 0;
    });
    std::size_t agreed = 0;
    for (int a : agree) agreed += a;
    std::ostringstream os;
    os << "norm 5: GoldenRatio " << g5 << "/" << r5.matrices.size() << "; norm 6: GoldenRatio " << g6
       << ", M_{-1,3,1} " << a6 << ", M_{0,3,1} " << b6 << ", Unresolved " << r6.unresolved()
       << " (expected 480/240/192/0); sail labels agree on " << agreed << "/" << sample.size() << " sampled";
    r.detail = os.str();
    r.undecided = r5.unresolved() + r6.unresolved() > 0;
    r.pass = g5 == 48 && r5.matrices.size() == 48 && g6 == 480 && a6 == 240 && b6 == 192 && r6.unresolved() == 0 &&
             agreed == sample.size();
  });
}

ClaimResult claim_frobenius_sweep(const ReproConfig& config) {
  return timed(3, "Frobenius witness sweep", [&](ClaimResult& r) {
    std::ostringstream os;
    bool ok = true;
    for (int n = 4; n <= 6; ++n) {
      const auto ms = irreducible_matrices(3, n, config.workers);
      const auto st = parallel_map(ms.size(), config.workers, [&](std::size_t i) {
        const FrobeniusVerdict v = decide_thm3(ms[i], config.decision);
        if (v.status == FrobeniusStatus::FrobeniusType && !(v.conjugator && verify_conjugator(ms[i], *v.conjugator)))
          throw IntegrityError("unverified Frobenius certificate for " + format_matrix(ms[i]));
        return v.status;
      });
      std::size_t fro = 0, non = 0, und = 0;
      for (auto s : st) {
        fro += s == FrobeniusStatus::FrobeniusType;
        non += s == FrobeniusStatus::NonFrobenius;
        und += s == FrobeniusStatus::Undecided;
      }
      os << (n > 4 ? "; " : "") << "norm " << n << ": " << fro << " FrobeniusType, " << non << " NonFrobenius, " << und
         << " Undecided";
      ok = ok && non == 0 && und == 0 && fro == ms.size();
      r.undecided = r.undecided || und > 0;
    }
    r.detail = os.str();
    r.pass = ok;
  });
}

ClaimResult claim_counterexample(const ReproConfig& config) {
  return timed(4, "counterexample", [&](ClaimResult& r) {
    const IntMatrix a{3, {1, 2, 0, 0, 1, 2, -7, 0, 29}};
    const IntMatrix b = evaluate_powers(a, {Rat(1, 2), Rat(-15), Rat(29, 2)});
    const ProductForm q = q3(basis_from(a, a, b));
    const IntBinaryCubic mn_want{{2, -28, 0, 7}};
    const TernaryCubicForm xyz_want{{4, -14, 49, 56, 0, 784, 392, -196, 0, 42}};
    auto neg = [](auto f) {
      for (auto& c : f.c) c = -c;
      return f;
    };
    const bool mn_ok = q.mn_primitive == mn_want || q.mn_primitive == neg(mn_want);
    const bool xyz_ok = q.xyz_primitive == xyz_want || q.xyz_primitive == neg(xyz_want);
    const Rat scale = q.scale_mn * q.scale_xyz;
    const bool basis_ok = q.basis.powers.alpha == Rat(1, 2) && q.basis.powers.beta == -15 && q.basis.powers.gamma == Rat(29, 2);
    const auto cert = modular_obstruction(q.mn_primitive, config.modulus_cap);
    const FrobeniusVerdict v = decide_thm3(a, config.decision);
    std::ostringstream os;
    os << "norm " << matrix_norm(a) << "; B = " << to_string(q.basis.powers.alpha) << " A^2 + "
       << to_string(q.basis.powers.beta) << " A + " << to_string(q.basis.powers.gamma) << " E; factors "
       << (mn_ok && xyz_ok ? "match" : "differ") << ", scale product " << to_string(scale) << "; obstruction modulus "
       << (cert ? std::to_string(cert->modulus) : "none") << "; verdict " << status_name(v.status);
    if (v.solution.certificate) os << " (modulus " << v.solution.certificate->modulus << " on " << v.solution.certificate->factor << ")";
    r.detail = os.str();
    r.undecided = v.status == FrobeniusStatus::Undecided;
    r.pass = matrix_norm(a) == 42 && basis_ok && mn_ok && xyz_ok && (scale == 1 || scale == -1) && cert &&
             cert->modulus == 7 && v.status == FrobeniusStatus::NonFrobenius && v.solution.certificate &&
             v.solution.certificate->modulus == 7;
  });
}

ClaimResult claim_statement(const ReproConfig& config) {
  return timed(5, "commutant statement", [&](ClaimResult& r) {
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::vector<IntMatrix> sample;
    while (static_cast<int>(sample.size()) < config.statement_samples) {
      IntMatrix m(3);
      for (auto& x : m.entries()) x = entry(rng);
      if (matrix_norm(m) <= 8 && is_irreducible(m)) sample.push_back(m);
    }
    const auto ok = parallel_map(sample.size(), config.workers, [&](std::size_t i) {
      const IntMatrix& c = sample[i];
      if (commutant_lattice(c).size() != 3) return 0;
      const CommutantBasis b = commutant_basis(c);
      if (b.e != IntMatrix::identity(3)) return 0;
      if (evaluate_powers(b.a, b.powers) != b.b) return 0;
      for (const IntMatrix* x : {&b.a, &b.b, &c})
        if (evaluate_powers(c, express_in_powers(c, *x)) != *x) return 0;
      return 1;
    });
    int good = 0;
    for (int v : ok) good += v;
    r.detail = std::to_string(good) + "/" + std::to_string(sample.size()) +
               " random irreducible matrices of norm <= 8 with rank-3 commutant containing E and exact power round trips";
    r.pass = good == static_cast<int>(sample.size());
  });
}

ClaimResult claim_quadratic_oracle(const ReproConfig& config) {
  return timed(6, "2x2 decision oracle", [&](ClaimResult& r) {
    std::vector<IntMatrix> ms;
    for (int n = 0; n <= 6; ++n) {
      const auto part = irreducible_matrices(2, n, config.workers);
      ms.insert(ms.end(), part.begin(), part.end());
    }
    struct Row {
      Verdict pell = Verdict::Unknown;
      bool conj = false;
      bool witness_ok = true;
    };
    const auto rows = parallel_map(ms.size(), config.workers, [&](std::size_t i) {
      Row row;
      const Solvability s = pell_decide(q2(ms[i]), config.decision.solver);
      row.pell = s.verdict;
      row.conj = brute_force_conjugator_2x2(ms[i], 3).has_value();
      if (s.verdict == Verdict::Solvable) {
        const Conjugator x = conjugator_from_witness(ms[i], s);
        row.witness_ok = verify_conjugator(ms[i], x);
      }
      return row;
    });
    std::size_t sol = 0, uns = 0, unk = 0, conj = 0, both = 0, contradictions = 0, bad_witness = 0;
    for (const auto& row : rows) {
      sol += row.pell == Verdict::Solvable;
      uns += row.pell == Verdict::Unsolvable;
      unk += row.pell == Verdict::Unknown;
      conj += row.conj;
      if (row.conj) {
        ++both;
        if (row.pell == Verdict::Unsolvable) ++contradictions;
      }
      bad_witness += !row.witness_ok;
    }
    std::ostringstream os;
    os << ms.size() << " irreducible 2x2 of norm <= 6: pell Solvable " << sol << ", Unsolvable " << uns << ", Unknown "
       << unk << "; conjugator found " << conj << "; contradictions " << contradictions << ", unverified witnesses "
       << bad_witness;
    r.detail = os.str();
    r.undecided = unk > 0;
    r.pass = contradictions == 0 && bad_witness == 0 && unk == 0 && both > 0;
  });
}

ClaimResult claim_sail(const ReproConfig& config) {
  return timed(7, "sail invariants", [&](ClaimResult& r) {
    const auto& reps = representatives();
    std::vector<std::vector<TorusInvariant>> base;
    for (const auto& rep : reps) base.push_back(fraction_invariant(frobenius_matrix(rep.params)));
    const bool distinct = base[0] != base[1] && base[0] != base[2] && base[1] != base[2];
    std::mt19937_64 rng(config.seed);
    std::vector<std::pair<std::size_t, IntMatrix>> jobs;
    for (std::size_t k = 0; k < reps.size(); ++k)
      for (int t = 0; t < config.conjugations; ++t) {
        const IntMatrix p = random_unimodular(rng);
        const IntMatrix m = frobenius_matrix(reps[k].params);
        jobs.emplace_back(k, p * m * unimodular_inverse(p));
      }
    const auto same = parallel_map(jobs.size(), config.workers, [&](std::size_t i) {
      return fraction_invariant(jobs[i].second) == base[jobs[i].first] ? 1 : 0;
    });
    std::vector<int> per(reps.size(), 0);
    for (std::size_t i = 0; i < jobs.size(); ++i) per[jobs[i].first] += same[i];
    std::ostringstream os;
    os << "representatives pairwise " << (distinct ? "distinct" : "NOT distinct") << "; invariant under conjugation";
    for (std::size_t k = 0; k < reps.size(); ++k) os << (k ? "," : "") << " " << reps[k].name << " " << per[k] << "/" << config.conjugations;
    r.detail = os.str();
    r.pass = distinct;
    for (int v : per) r.pass = r.pass && v == config.conjugations;
  });
}

namespace {

std::vector<ClaimResult> claims_1_to_7(const ReproConfig& config) {
  return {claim_census(config),        claim_classification(config), claim_frobenius_sweep(config),
          claim_counterexample(config), claim_statement(config),      claim_quadratic_oracle(config),
          claim_sail(config)};
}

}  // namespace

std::vector<ClaimResult> repro_all(const ReproConfig& config) {
  std::vector<ClaimResult> out = claims_1_to_7(config);
  if (!config.check_determinism) return out;
  out.push_back(timed(8, "determinism", [&](ClaimResult& r) {
    const std::string reference = format_report(out, false);
    std::vector<int> differing;
    for (int w : config.determinism_workers) {
      if (w == config.workers) continue;
      ReproConfig c = config;
      c.workers = w;
      if (format_report(claims_1_to_7(c), false) != reference) differing.push_back(w);
    }
    std::vector<int> all = config.determinism_workers;
    r.pass = differing.empty();
    r.detail = "reports for workers " + join(all) + (r.pass ? " identical" : " differ at workers " + join(differing));
  }));
  return out;
}

std::string format_report(const std::vector<ClaimResult>& results, bool timings) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.detail;
    if (timings) os << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    os << '\n';
  }
  return os.str();
}

int repro_exit_code(const std::vector<ClaimResult>& results) {
  bool failed = false, undecided = false;
  for (const auto& r : results) {
    failed = failed || !r.pass;
    undecided = undecided || (!r.pass && r.undecided);
  }
  return undecided ? 3 : (failed ? 4 : 0);
}

}  // namespace frobcf
