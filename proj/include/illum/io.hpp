// JSON/text input and output for bases, bodies, rectangular forms,
// profiles, ladders, and pipeline results.
#pragma once

#include <string>

#include <json.hpp>

#include "illum/bodies.hpp"
#include "illum/bounds.hpp"
#include "illum/illumination.hpp"
#include "illum/lattice.hpp"
#include "illum/virt_rect.hpp"

namespace illum {

using njson = nlohmann::json;

/// Number or exact decimal string.
double json_number(const njson& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Vec vec_from_json(const njson& j);
njson vec_to_json(const Vec& v);

/// {"n": int, "columns": [[...], ...]}.
LatticeBasis basis_from_json(const njson& j);
njson basis_to_json(const LatticeBasis& basis);

/// JSON object, or whitespace matrix text with one basis vector per line.
LatticeBasis basis_from_text(const std::string& text);

/// {"kind":"ball","center":[...],"radius":r} or
/// {"kind":"ellipsoid","center":[...],"axes":[[...],...],"lengths":[...]}.
/// A missing center defaults to the origin when expected_dim is given.
SmoothBody body_from_json(const njson& j, int expected_dim = -1);
njson body_to_json(const SmoothBody& body);

/// {"c":[...], "B":[[...],...], "U": optional [[...],...]} (B, U in rows).
RectangularForm form_from_json(const njson& j);

njson profile_to_json(const LatticeProfile& prof);
njson ladder_to_json(const BoundLadder& ladder);
njson result_to_json(const IlluminationResult& result);
IlluminationResult result_from_json(const njson& j);

/// Reals with 9 significant digits, for CSV cells.
std::string csv_real(double v);

}  // namespace illum
