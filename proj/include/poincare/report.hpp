#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace poincare::report {

// One scan row: the scanned parameter values followed by the computed value,
// its target, |value - target|, an error estimate (>= |value - recomputation
// with doubled truncation knobs|), and wall time. The seconds column is the
// only field allowed to vary between reruns.
struct ScanRow {
  std::vector<double> params;
  double value = 0;
  double target = 0;
  double abs_err = 0;
  double err_estimate = 0;
  double seconds = 0;
};

struct ScanReport {
  std::vector<std::string> param_names;
  std::vector<ScanRow> rows;
};

// 12 significant digits, shortest-form %g.
std::string format_number(double x);

// Header: parameters..., value, target, abs_err, err_estimate, seconds.
std::string to_csv(const ScanReport& r);

nlohmann::json to_json(const ScanReport& r);
ScanReport from_json(const nlohmann::json& j);

// CSV with every `seconds` field blanked; two runs of the same scan must
// agree byte-for-byte on this projection.
std::string stable_csv(const ScanReport& r);

}  // namespace poincare::report
