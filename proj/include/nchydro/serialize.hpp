#pragma once

#include <string>

#include "nchydro/nc_model.hpp"
#include "nchydro/ns_series.hpp"

namespace nchydro {

/// JSON document for a series report: value, error, K, diagnostics, and the
/// per-term table. Numbers carry 15 significant digits.
std::string series_report_json(const ns_series::SeriesReport& report);

/// CSV table of the per-term records: k, c_k, i_k, term.
std::string series_report_csv(const ns_series::SeriesReport& report, int precision = 15);

/// JSON object for the noncommutativity parameters.
std::string nc_parameters_json(const nc::NcParameters& params);

}  // namespace nchydro
