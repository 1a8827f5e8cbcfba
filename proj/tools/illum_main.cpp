// Command-line surface: analyze, reduce, illuminate, verify, bounds,
// experiment. Exit codes: 0 ok, 2 parse error, 3 near-singular input,
// 4 dimension cap exceeded, 5 body does not fit, 6 verification or bound
// failure (for valid inputs this signals an implementation bug).

#include <cmath>
#include <cstdio>
#include <numbers>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "illum/bounds.hpp"
#include "illum/errors.hpp"
#include "illum/illumination.hpp"
#include "illum/io.hpp"
#include "illum/lattice.hpp"
#include "illum/reduction.hpp"
#include "illum/virt_rect.hpp"

namespace {

using namespace illum;

struct CommonOpts {
  std::uint64_t seed = 1;
  int samples = 10000;
  double tolerance = 1e-9;
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--seed", opts->seed, "RNG seed for sampling");
  cmd->add_option("--samples", opts->samples, "boundary sample count");
  cmd->add_option("--tolerance", opts->tolerance, "comparison slack for bound checks");
  cmd->add_option("--output,-o", opts->output, "write the report to this file");
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_file(opts.output, text);
  }
}

std::string yesno(bool b) { return b ? "1" : "0"; }

// -------------------------------------------------------------- analyze

int cmd_analyze(const std::string& basis_path, const CommonOpts& opts) {
  LatticeBasis basis = basis_from_text(read_file(basis_path));
  LatticeProfile prof = profile(basis);
  njson full = profile_to_json(prof);
  if (basis.n() <= kStrongThetaCap) {
    ThetaVerdict strong =
        theta_orthogonality(basis, std::numbers::pi / 3.0, true);
    full["strongly_nearly_orthogonal"] = *strong.strong;
  } else {
    full["strongly_nearly_orthogonal"] = nullptr;
  }
  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << "n,det,min_norm,minimal_vector_count,defect,well_rounded,nearly_orthogonal\n"
        << basis.n() << ',' << csv_real(prof.det) << ',' << csv_real(prof.min_norm)
        << ',' << prof.sigma.full_count << ',' << csv_real(prof.defect) << ','
        << yesno(prof.well_rounded) << ',' << yesno(prof.weakly_pi3_orthogonal)
        << '\n';
    emit(opts, csv.str());
  } else {
    emit(opts, full.dump(2));
  }
  return 0;
}

// --------------------------------------------------------------- reduce

njson intmat_to_json(const IntMat& m) {
  njson rows = njson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    njson row = njson::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

int cmd_reduce(const std::string& basis_path, const std::string& algorithm,
               double delta, const CommonOpts& opts) {
  LatticeBasis basis = basis_from_text(read_file(basis_path));
  ReductionResult res = algorithm == "hkz" ? hkz_reduce(basis)
                                           : lll_reduce(basis, delta);
  njson j;
  j["algorithm"] = algorithm;
  j["basis"] = basis_to_json(res.reduced);
  j["transform"] = intmat_to_json(res.transform);
  j["defect"] = res.defect;
  j["first_norm"] = res.first_norm;
  j["hermite_defect_ok"] = hermite_defect_check(res);
  emit(opts, j.dump(2));
  return 0;
}

// ----------------------------------------------------------- illuminate

int finish_run(const IlluminationResult& res, const CommonOpts& opts,
               const std::string& summary) {
  njson j = result_to_json(res);
  if (opts.output.empty()) {
    std::cout << summary << '\n' << j.dump(2) << '\n';
  } else {
    write_file(opts.output, j.dump(2));
    std::cout << summary << '\n';
  }
  bool bounds_ok = true;
  auto check = [&](const BoundEntry& e) {
    if (e.applicable && e.value < res.distance.upper - opts.tolerance)
      bounds_ok = false;
  };
  for (const BoundEntry* e :
       {&res.ladder.prop1, &res.ladder.lemma3, &res.ladder.generic,
        &res.ladder.theorem_main, &res.ladder.wr, &res.ladder.near_orth,
        &res.ladder.wr_near_orth, &res.ladder.virt_rect}) {
    check(*e);
  }
  if (res.intermediate_bound > 0.0 &&
      res.intermediate_bound < res.distance.upper - opts.tolerance) {
    bounds_ok = false;
  }
  if (!res.certificate.verified || !bounds_ok) return 6;
  return 0;
}

std::string lattice_summary(const IlluminationResult& res) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "t*=%ld t_min=%ld d=%.4f <= %.4f", res.t,
                res.t_oracle, res.distance.upper,
                res.ladder.theorem_main.value);
  return buf;
}

int cmd_illuminate(const std::string& basis_path, const std::string& body_path,
                   std::optional<long> t_override, const CommonOpts& opts) {
  std::string basis_text = read_file(basis_path);
  njson body_j = njson::parse(read_file(body_path));

  // A rectangular-form file ({"c":..., "B":...}) routes through the
  // orthogonal-sublattice construction.
  std::size_t first = basis_text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && basis_text[first] == '{') {
    njson j = njson::parse(basis_text);
    if (j.contains("c") && j.contains("B")) {
      RectangularForm form = form_from_json(j);
      SmoothBody body = body_from_json(body_j, static_cast<int>(form.c.size()));
      OrthogonalSublattice sub = orthogonal_sublattice(form);
      IlluminationResult res =
          illuminate_virt_rect(form, body, opts.samples, opts.seed);
      njson extra = result_to_json(res);
      njson sub_j;
      sub_j["basis"] = basis_to_json(sub.basis);
      njson ks = njson::array();
      for (Eigen::Index i = 0; i < sub.multipliers.size(); ++i)
        ks.push_back(sub.multipliers(i));
      sub_j["multipliers"] = ks;
      sub_j["index"] = sub.index;
      sub_j["model_index"] = sub.model_index;
      sub_j["index_matches_model"] = sub.index == sub.model_index;
      extra["sublattice"] = sub_j;
      if (opts.output.empty()) {
        std::cout << lattice_summary(res) << '\n' << extra.dump(2) << '\n';
      } else {
        write_file(opts.output, extra.dump(2));
        std::cout << lattice_summary(res) << '\n';
      }
      return (res.certificate.verified && res.ladder.all_satisfied() &&
              res.intermediate_ok)
                 ? 0
                 : 6;
    }
  }

  LatticeBasis basis = basis_from_text(basis_text);
  SmoothBody body = body_from_json(body_j, basis.n());
  IlluminationResult res =
      illuminate_lattice(basis, body, opts.samples, opts.seed, t_override);
  return finish_run(res, opts, lattice_summary(res));
}

// --------------------------------------------------------------- verify

int cmd_verify(const std::string& result_path, const std::string& body_path,
               const CommonOpts& opts) {
  IlluminationResult stored = result_from_json(njson::parse(read_file(result_path)));
  njson body_j = njson::parse(read_file(body_path));
  SmoothBody body = body_from_json(body_j, stored.n);
  SmoothBody placed = body.translated(stored.translation);

  Certificate cert =
      verify_illumination(stored.vertices, placed, opts.samples, opts.seed);
  DistanceEstimate dist =
      illumination_distance(stored.vertices, placed, opts.samples, opts.seed + 1);

  bool bounds_ok = true;
  for (const BoundEntry* e :
       {&stored.ladder.prop1, &stored.ladder.lemma3, &stored.ladder.generic,
        &stored.ladder.theorem_main, &stored.ladder.wr,
        &stored.ladder.near_orth, &stored.ladder.wr_near_orth,
        &stored.ladder.virt_rect}) {
    if (e->applicable && e->value < dist.upper - opts.tolerance) bounds_ok = false;
  }
  njson j;
  j["verified"] = cert.verified;
  j["min_margin"] = cert.min_margin;
  j["d_upper_recomputed"] = dist.upper;
  j["d_upper_stored"] = stored.distance.upper;
  j["bounds_ok"] = bounds_ok;
  if (cert.counterexample) {
    j["counterexample"] = vec_to_json(cert.counterexample->point);
  }
  emit(opts, j.dump(2));
  return (cert.verified && bounds_ok) ? 0 : 6;
}

// --------------------------------------------------------------- bounds

int cmd_bounds(const std::string& basis_path, const std::string& body_path,
               double epsilon, const CommonOpts& opts) {
  LatticeBasis basis = basis_from_text(read_file(basis_path));
  njson body_j = njson::parse(read_file(body_path));
  SmoothBody body = body_from_json(body_j, basis.n());
  BodyProfile bp = circumball(body);

  LatticeProfile prof = profile(hkz_reduce(basis).reduced.sorted());
  const int n = basis.n();
  njson j;
  j["n"] = n;
  j["det"] = prof.det;
  j["min_norm"] = prof.min_norm;
  j["defect_hkz"] = prof.defect;
  j["well_rounded"] = prof.well_rounded;
  j["nearly_orthogonal"] = prof.weakly_pi3_orthogonal;
  j["generic"] = generic_bound(n, bp.diameter, prof.defect, prof.det, prof.min_norm);
  j["theorem_main"] = theorem_main_bound(n, bp.diameter, prof.det, prof.min_norm);
  if (prof.well_rounded) j["wr"] = wr_bound(n, bp.diameter);
  if (prof.weakly_pi3_orthogonal) {
    j["near_orth"] = near_orth_bound(n, bp.diameter, prof.det, prof.min_norm, false);
  }
  if (prof.well_rounded && prof.weakly_pi3_orthogonal) {
    j["wr_near_orth"] = near_orth_bound(n, bp.diameter, prof.det, prof.min_norm, true);
  }
  j["prop1"] = prop1_bound(n, bp.diameter, epsilon);
  j["lemma3"] = lemma3_bound(n, bp.circumradius, epsilon);
  j["epsilon"] = epsilon;

  if (opts.format == "csv") {
    std::ostringstream csv;
    std::vector<std::string> keys = {"generic", "theorem_main", "wr",
                                     "near_orth", "wr_near_orth", "prop1",
                                     "lemma3"};
    csv << "n,det,min_norm,defect_hkz,well_rounded,nearly_orthogonal";
    for (const auto& k : keys) csv << ',' << k;
    csv << '\n';
    csv << n << ',' << csv_real(prof.det) << ',' << csv_real(prof.min_norm)
        << ',' << csv_real(prof.defect) << ',' << yesno(prof.well_rounded)
        << ',' << yesno(prof.weakly_pi3_orthogonal);
    for (const auto& k : keys) {
      csv << ',';
      if (j.contains(k)) csv << csv_real(j[k].get<double>());
    }
    csv << '\n';
    emit(opts, csv.str());
  } else {
    emit(opts, j.dump(2));
  }
  return 0;
}

// ----------------------------------------------------------- experiment

struct ExperimentRow {
  std::string label;
  IlluminationResult result;
};

std::vector<int> parse_dims(const njson& ej, int fallback) {
  std::vector<int> dims;
  if (!ej.contains("dims")) {
    dims.push_back(fallback);
  } else if (ej["dims"].is_array()) {
    for (const njson& d : ej["dims"]) dims.push_back(d.get<int>());
  } else if (ej["dims"].is_object()) {
    int lo = ej["dims"]["min"].get<int>();
    int hi = ej["dims"]["max"].get<int>();
    for (int d = lo; d <= hi; ++d) dims.push_back(d);
  } else {
    throw ParseError("\"dims\" must be an array or {min,max}");
  }
  return dims;
}

// Root-lattice family A_n scaled to minimal norm 1; n = 2 is the
// hexagonal lattice.
LatticeBasis hexagonal_family(int n) {
  Mat gens(n + 1, n);
  gens.setZero();
  for (int i = 0; i < n; ++i) {
    gens(i, i) = 1.0;
    gens(i + 1, i) = -1.0;
  }
  Eigen::HouseholderQR<Mat> qr(gens);
  Mat r = Mat(qr.matrixQR().triangularView<Eigen::Upper>()).topRows(n);
  // Fix signs so the map is deterministic, then scale min norm to 1.
  for (int i = 0; i < n; ++i) {
    if (r(i, i) < 0) r.row(i) = -r.row(i);
  }
  return LatticeBasis::from_columns(r / std::sqrt(2.0));
}

LatticeBasis random_integer_basis(int n, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Mat m(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) m(i, j) = entry(rng);
    try {
      return LatticeBasis::from_columns(std::move(m));
    } catch (const NearSingularError&) {
      continue;
    }
  }
  throw Error("could not sample a nonsingular integer basis");
}

void append_row(std::ostringstream& csv, const ExperimentRow& row) {
  const IlluminationResult& r = row.result;
  auto bound_cells = [&](const BoundEntry& e) {
    std::string out = ",";
    if (e.applicable) {
      out += csv_real(e.value);
      out += ",";
      out += csv_real(r.distance.upper / e.value);
    } else {
      out += ",";
    }
    return out;
  };
  csv << row.label << ',';
  switch (r.construction) {
    case RunSummary::Construction::Lattice: csv << "lattice"; break;
    case RunSummary::Construction::Regular: csv << "regular"; break;
    case RunSummary::Construction::VirtRect: csv << "virt-rect"; break;
  }
  csv << ',' << r.n << ',' << csv_real(r.summary.det_lattice) << ','
      << csv_real(r.summary.min_norm_lattice) << ','
      << csv_real(r.summary.delta_basis) << ',' << yesno(r.summary.well_rounded)
      << ',' << yesno(r.summary.nearly_orth) << ',' << r.t << ',' << r.t_oracle
      << ',' << csv_real(r.t > 0 ? double(r.t_oracle) / double(r.t) : 0.0)
      << ',' << csv_real(r.distance.upper) << ',' << csv_real(r.distance.lower)
      << ',' << csv_real(r.certificate.min_margin) << ','
      << yesno(r.certificate.verified) << ',' << csv_real(r.intermediate_bound)
      << ',' << yesno(r.intermediate_ok);
  csv << bound_cells(r.ladder.generic) << bound_cells(r.ladder.theorem_main)
      << bound_cells(r.ladder.wr) << bound_cells(r.ladder.near_orth)
      << bound_cells(r.ladder.wr_near_orth) << bound_cells(r.ladder.virt_rect);
  csv << ',' << yesno(r.ladder.all_satisfied()) << '\n';
}

int cmd_experiment(const std::string& spec_path, CommonOpts opts) {
  njson spec = njson::parse(read_file(spec_path));
  if (spec.contains("seed")) opts.seed = spec["seed"].get<std::uint64_t>();
  if (spec.contains("samples")) opts.samples = spec["samples"].get<int>();
  if (opts.output.empty() && spec.contains("output")) {
    opts.output = spec["output"].get<std::string>();
  }
  njson body_spec = spec.contains("body")
                        ? spec["body"]
                        : njson{{"kind", "ball"}, {"radius", 1.0}};

  std::mt19937_64 rng(opts.seed);
  std::vector<ExperimentRow> rows;
  bool all_ok = true;

  if (spec.contains("ensembles")) {
    for (const njson& ej : spec["ensembles"]) {
      std::string kind = ej["kind"].get<std::string>();
      if (kind == "identity") {
        for (int n : parse_dims(ej, 2)) {
          SmoothBody body = body_from_json(body_spec, n);
          rows.push_back({"identity-n" + std::to_string(n),
                          illuminate_lattice(LatticeBasis::from_columns(
                                                 Mat::Identity(n, n)),
                                             body, opts.samples, opts.seed)});
        }
      } else if (kind == "hexagonal") {
        for (int n : parse_dims(ej, 2)) {
          SmoothBody body = body_from_json(body_spec, n);
          rows.push_back({"hexagonal-n" + std::to_string(n),
                          illuminate_lattice(hexagonal_family(n), body,
                                             opts.samples, opts.seed)});
        }
      } else if (kind == "random-integer") {
        int count = ej.value("count", 10);
        int bound = ej.contains("entry_bound") ? ej["entry_bound"].get<int>()
                                               : ej.value("entry-bound", 10);
        for (int n : parse_dims(ej, 3)) {
          SmoothBody body = body_from_json(body_spec, n);
          for (int k = 0; k < count; ++k) {
            LatticeBasis basis = random_integer_basis(n, bound, rng);
            rows.push_back({"random-n" + std::to_string(n) + "-" + std::to_string(k),
                            illuminate_lattice(basis, body, opts.samples,
                                               opts.seed)});
          }
        }
      } else if (kind == "virt-rect") {
        int idx = 0;
        for (const njson& fj : ej["forms"]) {
          RectangularForm form = form_from_json(fj);
          SmoothBody body = body_from_json(body_spec, static_cast<int>(form.c.size()));
          rows.push_back({"virt-rect-" + std::to_string(idx++),
                          illuminate_virt_rect(form, body, opts.samples,
                                               opts.seed)});
        }
      } else {
        throw ParseError("unknown ensemble kind: " + kind);
      }
    }
  }

  std::ostringstream csv;
  csv << "label,construction,n,det,min_norm,delta,wr,near_orth,t_star,t_oracle,"
         "t_ratio,d_upper,d_lower,min_margin,verified,intermediate_bound,"
         "intermediate_ok,bound_generic,ratio_generic,bound_theorem_main,"
         "ratio_theorem_main,bound_wr,ratio_wr,bound_near_orth,ratio_near_orth,"
         "bound_wr_near_orth,ratio_wr_near_orth,bound_virt_rect,"
         "ratio_virt_rect,all_bounds_ok\n";
  for (const ExperimentRow& row : rows) {
    append_row(csv, row);
    if (!row.result.certificate.verified || !row.result.ladder.all_satisfied())
      all_ok = false;
  }
  emit(opts, csv.str());
  return all_ok ? 0 : 6;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"lattice illumination of smooth convex bodies"};
  app.require_subcommand(1);

  CommonOpts opts;

  std::string basis_path, body_path, result_path, spec_path;
  std::string algorithm = "lll";
  double delta = 0.99;
  double epsilon = 0.0;
  long t_override_value = -1;

  CLI::App* analyze = app.add_subcommand("analyze", "lattice profile of a basis file");
  analyze->add_option("basis", basis_path, "basis file (JSON or matrix text)")->required();
  add_common(analyze, &opts);

  CLI::App* reduce = app.add_subcommand("reduce", "LLL or HKZ reduction");
  reduce->add_option("basis", basis_path)->required();
  reduce->add_option("--algorithm,-a", algorithm, "lll or hkz")
      ->check(CLI::IsMember({"lll", "hkz"}));
  reduce->add_option("--delta", delta, "LLL quality parameter in (1/4, 1)");
  add_common(reduce, &opts);

  CLI::App* illuminate = app.add_subcommand("illuminate", "full illumination pipeline");
  illuminate->add_option("basis", basis_path)->required();
  illuminate->add_option("body", body_path)->required();
  illuminate->add_option("--t-override", t_override_value,
                         "simplex scale override (>= the minimal sufficient scale)");
  add_common(illuminate, &opts);

  CLI::App* verify = app.add_subcommand("verify", "re-check a stored result");
  verify->add_option("result", result_path, "result JSON from illuminate")->required();
  verify->add_option("body", body_path)->required();
  add_common(verify, &opts);

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound ladder");
  bounds->add_option("basis", basis_path)->required();
  bounds->add_option("body", body_path)->required();
  bounds->add_option("--epsilon", epsilon, "slack for the diameter-only bounds");
  add_common(bounds, &opts);

  CLI::App* experiment = app.add_subcommand("experiment", "seeded batch runs, CSV output");
  experiment->add_option("spec", spec_path, "experiment spec JSON")->required();
  add_common(experiment, &opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (analyze->parsed()) return cmd_analyze(basis_path, opts);
  if (reduce->parsed()) return cmd_reduce(basis_path, algorithm, delta, opts);
  if (illuminate->parsed()) {
    std::optional<long> t_override;
    if (illuminate->count("--t-override") > 0) t_override = t_override_value;
    return cmd_illuminate(basis_path, body_path, t_override, opts);
  }
  if (verify->parsed()) return cmd_verify(result_path, body_path, opts);
  if (bounds->parsed()) return cmd_bounds(basis_path, body_path, epsilon, opts);
  if (experiment->parsed()) return cmd_experiment(spec_path, opts);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CoprimalityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NearSingularError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const DimensionTooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const DoesNotFitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
