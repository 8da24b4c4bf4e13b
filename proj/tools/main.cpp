// frobcf: command-line front end for the library.
//
// Exit codes: 0 ok, 1 bad input, 2 internal consistency failure,
// 3 undecided/unresolved results present, 4 a repro claim failed.

#include "frobcf/census.hpp"
#include "frobcf/classify.hpp"
#include "frobcf/commutant.hpp"
#include "frobcf/forms.hpp"
#include "frobcf/frobenius.hpp"
#include "frobcf/parallel.hpp"
#include "frobcf/repro.hpp"
#include "frobcf/sail.hpp"
#include "frobcf/unit_solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace frobcf;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitIntegrity = 2;
constexpr int kExitUndecided = 3;

json num(const Int& x) {
  if (fits_i64(x)) return x.get_si();
  return x.get_str();
}

json rat(const Rat& x) { return to_string(x); }

json ints(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(num(x));
  return out;
}

json params_json(const FrobeniusParams& p) { return ints(p.a); }

json quadratic_json(const BinaryQuadraticForm& f) {
  return {{"p", num(f.p)}, {"q", num(f.q)}, {"r", num(f.r)}, {"discriminant", num(f.discriminant())}};
}

template <class T>
json binary_table(const BinaryCubic<T>& f) {
  json out = json::object();
  for (int k = 0; k < 4; ++k) {
    if constexpr (std::is_same_v<T, Rat>)
      out[std::string(binary_monomial(k))] = rat(f.c[k]);
    else
      out[std::string(binary_monomial(k))] = num(f.c[k]);
  }
  return out;
}

template <class T>
json ternary_table(const TernaryCubic<T>& f) {
  json out = json::object();
  for (int k = 0; k < 10; ++k) {
    if constexpr (std::is_same_v<T, Rat>)
      out[std::string(ternary_monomial(k))] = rat(f.c[k]);
    else
      out[std::string(ternary_monomial(k))] = num(f.c[k]);
  }
  return out;
}

json powers_json(const PowerCoefficients& p) {
  return {{"alpha", rat(p.alpha)}, {"beta", rat(p.beta)}, {"gamma", rat(p.gamma)}};
}

json basis_json(const CommutantBasis& b) {
  return {{"E", format_matrix(b.e)}, {"A", format_matrix(b.a)}, {"B", format_matrix(b.b)}, {"powers", powers_json(b.powers)}};
}

json solvability_json(const Solvability& s) {
  json out{{"verdict", std::string(verdict_name(s.verdict))},
           {"method", s.method},
           {"box_bound", s.box_bound},
           {"modulus_cap", s.modulus_cap}};
  if (!s.witness.empty()) out["witness"] = ints(s.witness);
  if (s.certificate)
    out["certificate"] = {{"factor", s.certificate->factor},
                          {"modulus", s.certificate->modulus},
                          {"attained", s.certificate->attained}};
  if (!s.cycle.empty()) {
    json cycle = json::array();
    for (const auto& f : s.cycle) cycle.push_back({num(f.p), num(f.q), num(f.r)});
    out["cycle"] = cycle;
  }
  return out;
}

json conjugator_json(const Conjugator& c) { return {{"x", format_matrix(c.x)}, {"target", params_json(c.target)}}; }

json verdict_json(const IntMatrix& m, const FrobeniusVerdict& v) {
  json out{{"matrix", format_matrix(m)},
           {"norm", num(matrix_norm(m))},
           {"status", std::string(status_name(v.status))},
           {"solution", solvability_json(v.solution)},
           {"boxes_tried", v.boxes_tried}};
  if (v.conjugator) out["conjugator"] = conjugator_json(*v.conjugator);
  return out;
}

json fraction_json(const IntMatrix& m, const FractionClass& k) {
  json out{{"matrix", format_matrix(m)}, {"class", class_name(k)}, {"method", k.method}, {"bound", k.bound}};
  if (k.label != FractionLabel::Unresolved) out["params"] = params_json(k.params);
  if (k.certificate) out["conjugator"] = conjugator_json(*k.certificate);
  if (!k.refuted.empty()) out["refuted"] = k.refuted;
  return out;
}

json vec_json(const Vec3& v) { return {v[0], v[1], v[2]}; }

json invariant_json(const TorusInvariant& t) {
  return {{"vertex_orbits", t.vertex_orbits},
          {"edge_orbits", t.edge_orbits},
          {"face_orbits", t.face_orbits},
          {"face_areas", t.face_areas},
          {"face_vertex_counts", t.face_vertex_counts},
          {"face_distances", t.face_distances},
          {"text", format_invariant(t)}};
}

json sail_json(const SailAnalysis& s) {
  json faces = json::array();
  for (std::size_t i = 0; i < s.complex.faces.size(); ++i) {
    const SailFace& f = s.complex.faces[i];
    if (!f.stable) continue;
    json vs = json::array();
    for (const auto& v : f.vertices) vs.push_back(vec_json(v));
    faces.push_back({{"index", i},
                     {"normal", vec_json(f.normal)},
                     {"height", f.height},
                     {"area", f.area},
                     {"vertices", vs},
                     {"neighbors", f.neighbors}});
  }
  json orbits = json::array();
  for (const auto& o : s.face_orbits) orbits.push_back({{"representative", o.representative}, {"members", o.members}});
  json vreps = json::array();
  for (const auto& v : s.vertex_reps) vreps.push_back(vec_json(v));
  json ereps = json::array();
  for (const auto& e : s.edge_reps) ereps.push_back({vec_json(e[0]), vec_json(e[1])});
  return {{"matrix", format_matrix(s.cone.c)},
          {"cone_signs", s.cone.signs},
          {"frame", format_matrix(s.frame)},
          {"radius", s.complex.radius},
          {"points", s.complex.point_count},
          {"group",
           {{"g1", format_matrix(s.group.g1)},
            {"g2", format_matrix(s.group.g2)},
            {"log1", s.group.log1},
            {"log2", s.group.log2},
            {"search_exponent", s.group.search_exponent}}},
          {"invariant", invariant_json(s.invariant)},
          {"faces", faces},
          {"face_orbits", orbits},
          {"vertex_reps", vreps},
          {"edge_reps", ereps}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::ofstream open_jsonl(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

struct Globals {
  int workers = 0;
  std::uint64_t seed = 20240501;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius-type decisions and continued-fraction classification for integer matrices"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--workers", g.workers, "Worker threads (default: FROBCF_WORKERS or hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized sampling in repro");

  std::string matrix_text;
  int dim = 3, norm = 0, census_cap = 7, max_norm = 6;
  std::string emit = "csv", factor = "product", jsonl_path, svg_path, json_path;
  long box = 12, modcap = 100, conj_cap = 4, radius = 0, box_cap = -1;
  int cone_index = -1;
  bool cross_check = false, no_fallback = false, no_determinism = false;

  auto* census_cmd = app.add_subcommand("census", "Count M and H matrices on a norm sphere");
  census_cmd->add_option("--dim", dim)->check(CLI::IsMember({2, 3}));
  census_cmd->add_option("--norm", norm)->required()->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--emit", emit, "csv summary or jsonl per matrix")->check(CLI::IsMember({"csv", "jsonl"}));
  census_cmd->add_option("--cap", census_cap, "Largest norm accepted");

  auto* commutant_cmd = app.add_subcommand("commutant", "Commutant basis and power coefficients");
  commutant_cmd->add_option("--matrix", matrix_text, "Rows separated by ';', entries by ','")->required();

  auto* forms_cmd = app.add_subcommand("forms", "Unit-equation forms of a matrix");
  forms_cmd->add_option("--matrix", matrix_text)->required();
  forms_cmd->add_option("--factor", factor)->check(CLI::IsMember({"mn", "xyz", "product"}));

  auto* solve_cmd = app.add_subcommand("solve", "Decide |F| = 1 for the matrix's form");
  solve_cmd->add_option("--matrix", matrix_text)->required();
  solve_cmd->add_option("--box", box, "Search box per variable")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--modcap", modcap, "Largest modulus scanned")->check(CLI::PositiveNumber);

  auto* frob_cmd = app.add_subcommand("frobenius", "Frobenius-type verdict");
  frob_cmd->add_option("--matrix", matrix_text)->required();
  frob_cmd->add_option("--box", box, "First search box (doubled twice while undecided)")->check(CLI::NonNegativeNumber);
  frob_cmd->add_option("--modcap", modcap)->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "Classify the continued fractions of H(3,Z) on a norm sphere");
  classify_cmd->add_option("--norm", norm)->required()->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--jsonl", jsonl_path, "Write per-matrix assignments here");
  classify_cmd->add_option("--conjugator-cap", conj_cap)->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--modcap", modcap)->check(CLI::PositiveNumber);
  classify_cmd->add_option("--cap", census_cap, "Largest norm accepted");
  classify_cmd->add_flag("--no-sail-fallback", no_fallback, "Leave inconclusive matrices Unresolved");
  classify_cmd->add_flag("--cross-check", cross_check, "Compare every label with sail invariants");

  auto* sail_cmd = app.add_subcommand("sail", "Sail of an eigen-cone and its torus decomposition");
  sail_cmd->add_option("--matrix", matrix_text)->required();
  sail_cmd->add_option("--radius", radius, "Single enumeration radius instead of the default schedule")
      ->check(CLI::Range(1L, kMaxRadius));
  sail_cmd->add_option("--cone", cone_index, "Cone class 0..3 (default: the cone containing (0,0,1))")
      ->check(CLI::Range(0, 3));
  sail_cmd->add_option("--svg", svg_path, "Write an SVG of the fundamental domain");
  sail_cmd->add_option("--json", json_path, "Write faces, orbits and invariants as JSON");

  auto* hunt_cmd = app.add_subcommand("hunt", "Search for non-Frobenius matrices up to a norm");
  hunt_cmd->add_option("--max-norm", max_norm)->required()->check(CLI::NonNegativeNumber);
  hunt_cmd->add_option("--jsonl", jsonl_path, "Write NonFrobenius and Undecided records here");
  hunt_cmd->add_option("--cap", census_cap, "Largest norm accepted");

  auto* repro_cmd = app.add_subcommand("repro", "Run the acceptance claims");
  repro_cmd->add_option("--box-cap", box_cap, "Single unit-search box for the Frobenius decisions")
      ->check(CLI::NonNegativeNumber);
  repro_cmd->add_flag("--no-determinism", no_determinism, "Skip the rerun with other worker counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  const int workers = g.workers > 0 ? g.workers : default_workers();

  try {
    if (*census_cmd) {
      if (emit == "jsonl") {
        if (norm > census_cap) throw InputError("norm exceeds the census cap");
        enumerate_norm(dim, norm, [&](const IntMatrix& m) {
          const json rec{{"matrix", format_matrix(m)}, {"norm", norm}, {"class", std::string(class_tag(classify_matrix(m)))}};
          std::cout << rec.dump() << '\n';
        });
        return 0;
      }
      const CensusReport r = census(dim, norm, {census_cap, workers});
      std::cout << "norm,count_M,count_H\n" << r.norm << ',' << r.count_m << ',' << r.count_h << '\n';
      return 0;
    }

    if (*commutant_cmd) {
      const IntMatrix c = parse_matrix(matrix_text);
      if (!is_irreducible(c)) throw InputError("matrix has a reducible characteristic polynomial");
      json out{{"matrix", format_matrix(c)}};
      if (c.dim() == 3) {
        const CommutantBasis b = commutant_basis(c);
        out["basis"] = basis_json(b);
        out["powers_index"] = num(powers_index(b));
      } else {
        json lattice = json::array();
        for (const auto& x : commutant_lattice(c)) lattice.push_back(format_matrix(x));
        out["basis"] = lattice;
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (*forms_cmd) {
      const IntMatrix c = parse_matrix(matrix_text);
      json out{{"matrix", format_matrix(c)}};
      if (c.dim() == 2) {
        out["quadratic"] = quadratic_json(q2(c));
      } else {
        const ProductForm q = q3(c);
        out["basis"] = basis_json(q.basis);
        if (factor != "xyz")
          out["mn"] = {{"unscaled", binary_table(q.cubic_mn)},
                       {"primitive", binary_table(q.mn_primitive)},
                       {"scale", rat(q.scale_mn)}};
        if (factor != "mn")
          out["xyz"] = {{"unscaled", ternary_table(q.cubic_xyz)},
                        {"primitive", ternary_table(q.xyz_primitive)},
                        {"scale", rat(q.scale_xyz)}};
        if (factor == "product") out["content"] = num(q.content());
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (*solve_cmd) {
      const IntMatrix c = parse_matrix(matrix_text);
      SolverConfig config;
      config.box_bound = box;
      config.quadratic_box = std::max(box, config.quadratic_box);
      config.modulus_cap = modcap;
      json out{{"matrix", format_matrix(c)}};
      Solvability s;
      if (c.dim() == 2) {
        const BinaryQuadraticForm f = q2(c);
        out["form"] = quadratic_json(f);
        s = decide(f, config);
        if (!verify(f, s)) throw IntegrityError("solvability record failed verification");
      } else {
        const ProductForm f = q3(c);
        out["basis"] = basis_json(f.basis);
        s = decide(f, config);
        if (!verify(f, s)) throw IntegrityError("solvability record failed verification");
      }
      out["solvability"] = solvability_json(s);
      std::cout << out.dump(2) << '\n';
      return s.verdict == Verdict::Unknown ? kExitUndecided : 0;
    }

    if (*frob_cmd) {
      const IntMatrix c = parse_matrix(matrix_text);
      DecisionConfig config;
      config.solver.modulus_cap = modcap;
      config.escalation = {box, 2 * box, 4 * box};
      const FrobeniusVerdict v = c.dim() == 2 ? decide_thm2(c, config) : decide_thm3(c, config);
      std::cout << verdict_json(c, v).dump(2) << '\n';
      return v.status == FrobeniusStatus::Undecided ? kExitUndecided : 0;
    }

    if (*classify_cmd) {
      ClassifyConfig config;
      config.conjugator_cap = conj_cap;
      config.modulus_cap = modcap;
      if (!no_fallback) config.fallback = sail_invariant_labeler();
      const ClassificationReport r = classification_report(norm, config, workers, census_cap);
      std::vector<int> consistent;
      if (cross_check)
        consistent = parallel_map(r.matrices.size(), workers,
                                  [&](std::size_t i) { return sail_consistent(r.matrices[i], r.classes[i]) ? 1 : 0; });
      if (!jsonl_path.empty()) {
        auto out = open_jsonl(jsonl_path);
        for (std::size_t i = 0; i < r.matrices.size(); ++i) {
          json rec = fraction_json(r.matrices[i], r.classes[i]);
          rec["norm"] = norm;
          if (cross_check) rec["sail_consistent"] = consistent[i] == 1;
          out << rec.dump() << '\n';
        }
      }
      std::cout << "class,count\n";
      for (const auto& [name, count] : r.counts) std::cout << name << ',' << count << '\n';
      if (cross_check) {
        std::size_t bad = 0;
        for (int v : consistent) bad += v == 0;
        std::cerr << "sail cross-check: " << r.matrices.size() - bad << '/' << r.matrices.size() << " consistent\n";
        if (bad > 0) return kExitIntegrity;
      }
      return r.unresolved() > 0 ? kExitUndecided : 0;
    }

    if (*sail_cmd) {
      const IntMatrix c = parse_matrix(matrix_text);
      const std::vector<long> radii = radius > 0 ? std::vector<long>{radius} : std::vector<long>{16, 32, 64};
      const SailAnalysis s = cone_index >= 0 ? analyze_sail(c, cone_classes()[cone_index], radii) : analyze_sail(c, radii);
      if (!svg_path.empty()) write_file(svg_path, sail_svg(s));
      const json full = sail_json(s);
      if (!json_path.empty()) write_file(json_path, full.dump(2) + "\n");
      const json summary{{"matrix", full["matrix"]},
                         {"cone_signs", full["cone_signs"]},
                         {"radius", full["radius"]},
                         {"stable_faces", s.complex.stable_count()},
                         {"group", full["group"]},
                         {"invariant", full["invariant"]}};
      std::cout << summary.dump(2) << '\n';
      return 0;
    }

    if (*hunt_cmd) {
      if (max_norm > census_cap) throw InputError("max norm exceeds the census cap");
      std::optional<std::ofstream> out;
      if (!jsonl_path.empty()) out = open_jsonl(jsonl_path);
      bool undecided = false;
      std::cout << "norm,FrobeniusType,NonFrobenius,Undecided\n";
      for (int n = 0; n <= max_norm; ++n) {
        const auto ms = irreducible_matrices(3, n, workers);
        const auto verdicts = parallel_map(ms.size(), workers, [&](std::size_t i) { return decide_thm3(ms[i]); });
        std::map<FrobeniusStatus, std::size_t> counts;
        for (std::size_t i = 0; i < ms.size(); ++i) {
          ++counts[verdicts[i].status];
          if (verdicts[i].status != FrobeniusStatus::FrobeniusType && out)
            *out << verdict_json(ms[i], verdicts[i]).dump() << '\n';
        }
        undecided = undecided || counts[FrobeniusStatus::Undecided] > 0;
        std::cout << n << ',' << counts[FrobeniusStatus::FrobeniusType] << ',' << counts[FrobeniusStatus::NonFrobenius]
                  << ',' << counts[FrobeniusStatus::Undecided] << '\n';
      }
      return undecided ? kExitUndecided : 0;
    }

    if (*repro_cmd) {
      ReproConfig config;
      config.workers = workers;
      config.seed = g.seed;
      config.check_determinism = !no_determinism;
      if (box_cap >= 0) {
        config.decision.escalation = {box_cap};
        config.decision.solver.box_bound = box_cap;
      }
      const auto results = repro_all(config);
      std::cout << format_report(results);
      return repro_exit_code(results);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << '\n';
    return kExitIntegrity;
  } catch (const RadiusTooSmall& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kExitUndecided;
  }
  return 0;
}
