#include "illum/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "illum/errors.hpp"
#include "illum/intexact.hpp"

namespace illum {

double json_number(const njson& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      std::size_t pos = 0;
      double v = std::stod(j.get<std::string>(), &pos);
      if (pos == j.get<std::string>().size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw ParseError("expected a number or decimal string, got " + j.dump());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

Vec vec_from_json(const njson& j) {
  if (!j.is_array()) throw ParseError("expected an array of numbers");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = json_number(j[i]);
  return v;
}

njson vec_to_json(const Vec& v) {
  njson arr = njson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

LatticeBasis basis_from_json(const njson& j) {
  if (!j.contains("columns")) throw ParseError("basis JSON needs \"columns\"");
  const njson& cols = j["columns"];
  if (!cols.is_array() || cols.empty()) throw ParseError("\"columns\" must be a nonempty array");
  int n = j.contains("n") ? j["n"].get<int>() : static_cast<int>(cols.size());
  if (static_cast<int>(cols.size()) != n) {
    throw ParseError("basis JSON: expected " + std::to_string(n) + " columns");
  }
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    Vec c = vec_from_json(cols[i]);
    if (c.size() != n) throw ParseError("basis column has wrong dimension");
    m.col(i) = c;
  }
  return LatticeBasis::from_columns(std::move(m));
}

njson basis_to_json(const LatticeBasis& basis) {
  njson j;
  j["n"] = basis.n();
  njson cols = njson::array();
  for (int i = 0; i < basis.n(); ++i) cols.push_back(vec_to_json(basis.columns().col(i)));
  j["columns"] = cols;
  return j;
}

LatticeBasis basis_from_text(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty basis input");
  if (text[first] == '{') {
    njson j;
    try {
      j = njson::parse(text);
    } catch (const std::exception& e) {
      throw ParseError(std::string("basis JSON parse failure: ") + e.what());
    }
    return basis_from_json(j);
  }
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<double> row;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t pos = 0;
        row.push_back(std::stod(tok, &pos));
        if (pos != tok.size()) throw ParseError("bad number: " + tok);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception&) {
        throw ParseError("bad number in basis text: " + tok);
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty basis input");
  const auto n = rows.size();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError("basis text must be square: line " + std::to_string(i + 1));
    }
    for (std::size_t k = 0; k < n; ++k) m(k, i) = rows[i][k];
  }
  return LatticeBasis::from_columns(std::move(m));
}

SmoothBody body_from_json(const njson& j, int expected_dim) {
  if (!j.contains("kind")) throw ParseError("body JSON needs \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  Vec center;
  if (j.contains("center")) {
    center = vec_from_json(j["center"]);
  } else if (expected_dim > 0) {
    center = Vec::Zero(expected_dim);
  } else {
    throw ParseError("body JSON needs \"center\"");
  }
  if (expected_dim > 0 && center.size() != expected_dim) {
    throw ParseError("body center has wrong dimension");
  }
  if (kind == "ball") {
    if (!j.contains("radius")) throw ParseError("ball needs \"radius\"");
    return SmoothBody::make_ball(std::move(center), json_number(j["radius"]));
  }
  if (kind == "ellipsoid") {
    if (!j.contains("axes") || !j.contains("lengths")) {
      throw ParseError("ellipsoid needs \"axes\" and \"lengths\"");
    }
    const njson& axes_j = j["axes"];
    const auto n = center.size();
    if (!axes_j.is_array() || static_cast<Eigen::Index>(axes_j.size()) != n) {
      throw ParseError("ellipsoid needs n axis directions");
    }
    Mat axes(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      Vec dir = vec_from_json(axes_j[i]);
      if (dir.size() != n) throw ParseError("axis direction has wrong dimension");
      axes.col(i) = dir;
    }
    Vec lengths = vec_from_json(j["lengths"]);
    if (lengths.size() != n) throw ParseError("ellipsoid needs n lengths");
    try {
      return SmoothBody::make_ellipsoid(std::move(center), std::move(axes),
                                        std::move(lengths));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown body kind: " + kind);
}

njson body_to_json(const SmoothBody& body) {
  njson j;
  j["center"] = vec_to_json(body.center());
  if (body.kind() == SmoothBody::Kind::Ball) {
    j["kind"] = "ball";
    j["radius"] = body.radius();
  } else {
    j["kind"] = "ellipsoid";
    njson axes = njson::array();
    for (int i = 0; i < body.dim(); ++i) axes.push_back(vec_to_json(body.axes().col(i)));
    j["axes"] = axes;
    j["lengths"] = vec_to_json(body.lengths());
  }
  return j;
}

RectangularForm form_from_json(const njson& j) {
  if (!j.contains("c") || !j.contains("B")) {
    throw ParseError("rectangular form JSON needs \"c\" and \"B\"");
  }
  Vec c = vec_from_json(j["c"]);
  const auto n = c.size();
  const njson& bj = j["B"];
  if (!bj.is_array() || static_cast<Eigen::Index>(bj.size()) != n) {
    throw ParseError("\"B\" must have n rows");
  }
  IntMat b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!bj[i].is_array() || static_cast<Eigen::Index>(bj[i].size()) != n) {
      throw ParseError("\"B\" rows must have n entries");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      double v = json_number(bj[i][k]);
      if (std::abs(v - std::round(v)) > 1e-9) {
        throw ParseError("\"B\" entries must be integers");
      }
      b(i, k) = static_cast<std::int64_t>(std::llround(v));
    }
  }
  std::optional<Mat> u;
  if (j.contains("U")) {
    const njson& uj = j["U"];
    Mat um(n, n);
    if (!uj.is_array() || static_cast<Eigen::Index>(uj.size()) != n) {
      throw ParseError("\"U\" must have n rows");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      Vec row = vec_from_json(uj[i]);
      if (row.size() != n) throw ParseError("\"U\" rows must have n entries");
      um.row(i) = row.transpose();
    }
    u = std::move(um);
  }
  return RectangularForm::create(std::move(c), std::move(b), std::move(u));
}

njson profile_to_json(const LatticeProfile& prof) {
  njson j;
  j["det"] = prof.det;
  j["min_norm"] = prof.min_norm;
  j["minimal_vector_count"] = prof.sigma.full_count;
  njson reps = njson::array();
  for (const Vec& v : prof.sigma.reps) reps.push_back(vec_to_json(v));
  j["minimal_vectors"] = reps;
  j["defect"] = prof.defect;
  j["well_rounded"] = prof.well_rounded;
  j["angles"] = vec_to_json(prof.angles);
  j["nearly_orthogonal"] = prof.weakly_pi3_orthogonal;
  return j;
}

namespace {

njson entry_to_json(const BoundEntry& e) {
  njson j;
  j["applicable"] = e.applicable;
  if (e.applicable) {
    j["value"] = e.value;
    j["satisfied"] = e.satisfied;
  }
  return j;
}

BoundEntry entry_from_json(const njson& j) {
  BoundEntry e;
  e.applicable = j["applicable"].get<bool>();
  if (e.applicable) {
    e.value = json_number(j["value"]);
    e.satisfied = j["satisfied"].get<bool>();
  }
  return e;
}

}  // namespace

njson ladder_to_json(const BoundLadder& ladder) {
  njson j;
  j["prop1"] = entry_to_json(ladder.prop1);
  j["lemma3"] = entry_to_json(ladder.lemma3);
  j["generic"] = entry_to_json(ladder.generic);
  j["theorem_main"] = entry_to_json(ladder.theorem_main);
  j["wr"] = entry_to_json(ladder.wr);
  j["near_orth"] = entry_to_json(ladder.near_orth);
  j["wr_near_orth"] = entry_to_json(ladder.wr_near_orth);
  j["virt_rect"] = entry_to_json(ladder.virt_rect);
  j["all_satisfied"] = ladder.all_satisfied();
  return j;
}

njson result_to_json(const IlluminationResult& result) {
  njson j;
  switch (result.construction) {
    case RunSummary::Construction::Lattice: j["construction"] = "lattice"; break;
    case RunSummary::Construction::Regular: j["construction"] = "regular"; break;
    case RunSummary::Construction::VirtRect: j["construction"] = "virt-rect"; break;
  }
  j["n"] = result.n;
  j["t"] = result.t;
  j["t_oracle"] = result.t_oracle;
  if (result.construction == RunSummary::Construction::Regular) {
    j["side"] = result.side;
    j["epsilon"] = result.epsilon;
  }
  njson verts = njson::array();
  for (const Vec& v : result.vertices) verts.push_back(vec_to_json(v));
  j["vertices"] = verts;
  j["translation"] = vec_to_json(result.translation);
  j["clearances"] = result.clearances;
  j["d_upper"] = result.distance.upper;
  j["d_lower"] = result.distance.lower;
  j["d_exact"] = result.distance.exact;
  njson cert;
  cert["verified"] = result.certificate.verified;
  cert["min_margin"] = result.certificate.min_margin;
  cert["samples"] = result.certificate.samples;
  cert["seed"] = result.certificate.seed;
  if (result.certificate.counterexample) {
    njson ce;
    ce["point"] = vec_to_json(result.certificate.counterexample->point);
    ce["normal"] = vec_to_json(result.certificate.counterexample->normal);
    cert["counterexample"] = ce;
  } else {
    cert["counterexample"] = nullptr;
  }
  j["certificate"] = cert;
  j["intermediate_bound"] = result.intermediate_bound;
  j["intermediate_ok"] = result.intermediate_ok;
  if (result.has_profile) j["profile"] = profile_to_json(result.profile);
  j["bounds"] = ladder_to_json(result.ladder);
  return j;
}

IlluminationResult result_from_json(const njson& j) {
  IlluminationResult r;
  std::string c = j["construction"].get<std::string>();
  r.construction = c == "regular"    ? RunSummary::Construction::Regular
                   : c == "virt-rect" ? RunSummary::Construction::VirtRect
                                      : RunSummary::Construction::Lattice;
  r.n = j["n"].get<int>();
  r.t = j["t"].get<long>();
  r.t_oracle = j["t_oracle"].get<long>();
  if (j.contains("side")) r.side = json_number(j["side"]);
  if (j.contains("epsilon")) r.epsilon = json_number(j["epsilon"]);
  for (const njson& v : j["vertices"]) r.vertices.push_back(vec_from_json(v));
  r.translation = vec_from_json(j["translation"]);
  for (const njson& v : j["clearances"]) r.clearances.push_back(json_number(v));
  r.distance.upper = json_number(j["d_upper"]);
  r.distance.lower = json_number(j["d_lower"]);
  r.distance.exact = j["d_exact"].get<bool>();
  const njson& cert = j["certificate"];
  r.certificate.verified = cert["verified"].get<bool>();
  r.certificate.min_margin = json_number(cert["min_margin"]);
  r.certificate.samples = cert["samples"].get<int>();
  r.certificate.seed = cert["seed"].get<std::uint64_t>();
  if (!cert["counterexample"].is_null()) {
    BoundaryPoint bp;
    bp.point = vec_from_json(cert["counterexample"]["point"]);
    bp.normal = vec_from_json(cert["counterexample"]["normal"]);
    r.certificate.counterexample = std::move(bp);
  }
  r.intermediate_bound = json_number(j["intermediate_bound"]);
  r.intermediate_ok = j["intermediate_ok"].get<bool>();
  const njson& b = j["bounds"];
  r.ladder.prop1 = entry_from_json(b["prop1"]);
  r.ladder.lemma3 = entry_from_json(b["lemma3"]);
  r.ladder.generic = entry_from_json(b["generic"]);
  r.ladder.theorem_main = entry_from_json(b["theorem_main"]);
  r.ladder.wr = entry_from_json(b["wr"]);
  r.ladder.near_orth = entry_from_json(b["near_orth"]);
  r.ladder.wr_near_orth = entry_from_json(b["wr_near_orth"]);
  r.ladder.virt_rect = entry_from_json(b["virt_rect"]);
  return r;
}

std::string csv_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace illum
