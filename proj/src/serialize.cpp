#include "nchydro/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace nchydro {

namespace {

std::string fmt_g(double x, int digits) {
  if (x == 0.0) x = 0.0;  // normalize -0
  if (!std::isfinite(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

}  // namespace

std::string series_report_json(const ns_series::SeriesReport& report) {
  std::string out = "{\"schema_version\":1";
  out += ",\"value\":" + fmt_g(report.value, 15);
  out += ",\"cross_check\":" + fmt_g(report.cross_check, 15);
  out += ",\"raw_partial_sum\":" + fmt_g(report.raw_partial_sum, 15);
  out += ",\"error\":" + fmt_g(report.error, 15);
  out += ",\"K\":" + std::to_string(report.truncation);
  out += ",\"alternating_tail\":";
  out += report.alternating_tail ? "true" : "false";
  out += ",\"consistent\":";
  out += report.consistent ? "true" : "false";
  out += ",\"terms\":[";
  for (size_t i = 0; i < report.terms.size(); ++i) {
    const auto& t = report.terms[i];
    if (i) out += ",";
    out += "{\"k\":" + std::to_string(t.k) + ",\"c\":" + fmt_g(t.c, 15) +
           ",\"i\":" + fmt_g(t.i, 15) + ",\"term\":" + fmt_g(t.contribution, 15) + "}";
  }
  out += "]}";
  return out;
}

std::string series_report_csv(const ns_series::SeriesReport& report, int precision) {
  std::string out = "k,c_k,i_k,term\n";
  for (const auto& t : report.terms) {
    out += std::to_string(t.k) + "," + fmt_g(t.c, precision) + "," +
           fmt_g(t.i, precision) + "," + fmt_g(t.contribution, precision) + "\n";
  }
  return out;
}

std::string nc_parameters_json(const nc::NcParameters& params) {
  std::string out = "{";
  out += "\"alpha\":" + fmt_g(params.alpha, 15);
  out += ",\"planck_length_m\":" + fmt_g(params.planck_length_m, 15);
  out += ",\"bohr_radius_m\":" + fmt_g(params.bohr_radius_m, 15);
  out += ",\"t2\":" + fmt_g(params.t2, 15);
  out += ",\"t\":" + fmt_g(params.t(), 15);
  out += ",\"beta\":" + fmt_g(params.beta(), 15);
  out += ",\"hbar_sqrt_theta2_m2\":" + fmt_g(params.hbar_sqrt_theta2_m2(), 15);
  out += "}";
  return out;
}

}  // namespace nchydro
