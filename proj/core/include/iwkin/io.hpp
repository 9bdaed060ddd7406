#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "iwkin/collision.hpp"
#include "iwkin/observations.hpp"
#include "iwkin/zero_curve.hpp"

namespace iwkin {

// Double formatted with 9 significant digits (the CSV/JSON print precision).
std::string format_sig9(double v);

// CSV emitters: UTF-8, comma-separated, header row, LF endings.  Empty data is
// an error, not an empty file.
void emit_csv(const std::vector<ObservationRecord>& records, std::ostream& out);
void emit_csv(const std::vector<CurvePoint>& curve, std::ostream& out);
void emit_csv(const GridField& grid, std::ostream& out);  // long form: x,y,value,status

std::vector<CurvePoint> parse_curve_csv(std::istream& in);

// JSON emitters (one top-level object; field names match the domain types).
std::string to_json(const IntegralResult& r);
std::string to_json(const std::vector<CurvePoint>& curve,
                    const std::vector<ThicknessSample>& thickness = {});
std::string to_json(const GridField& grid);
std::string to_json(const std::vector<ObservationRecord>& records);

// Plain-text config: one `key = value` per line, `#` comments, unknown keys
// rejected.  Keys: base_resolution, max_levels, rel_tol, domain_scale,
// divergence_growth, scale_window.
void apply_config(std::istream& in, QuadratureConfig& cfg);
QuadratureConfig load_config_file(const std::string& path);

}  // namespace iwkin
