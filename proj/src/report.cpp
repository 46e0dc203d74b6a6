#include "poincare/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace poincare::report {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

std::string csv_impl(const ScanReport& r, bool with_seconds) {
  std::string out;
  for (const auto& name : r.param_names) {
    out += name;
    out += ',';
  }
  out += "value,target,abs_err,err_estimate,seconds\n";
  for (const auto& row : r.rows) {
    if (row.params.size() != r.param_names.size())
      throw std::invalid_argument("csv: row parameter count mismatch");
    for (double p : row.params) {
      out += format_number(p);
      out += ',';
    }
    out += format_number(row.value);
    out += ',';
    out += format_number(row.target);
    out += ',';
    out += format_number(row.abs_err);
    out += ',';
    out += format_number(row.err_estimate);
    out += ',';
    if (with_seconds) out += format_number(row.seconds);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string to_csv(const ScanReport& r) { return csv_impl(r, true); }

std::string stable_csv(const ScanReport& r) { return csv_impl(r, false); }

nlohmann::json to_json(const ScanReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"params", row.params},
                    {"value", row.value},
                    {"target", row.target},
                    {"abs_err", row.abs_err},
                    {"err_estimate", row.err_estimate},
                    {"seconds", row.seconds}});
  return {{"param_names", r.param_names}, {"rows", rows}};
}

ScanReport from_json(const nlohmann::json& j) {
  ScanReport r;
  r.param_names = j.at("param_names").get<std::vector<std::string>>();
  for (const auto& row : j.at("rows")) {
    ScanRow s;
    s.params = row.at("params").get<std::vector<double>>();
    s.value = row.at("value").get<double>();
    s.target = row.at("target").get<double>();
    s.abs_err = row.at("abs_err").get<double>();
    s.err_estimate = row.at("err_estimate").get<double>();
    s.seconds = row.at("seconds").get<double>();
    r.rows.push_back(std::move(s));
  }
  return r;
}

}  // namespace poincare::report
