#include "nchydro/constants.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "nchydro/errors.hpp"

namespace nchydro {

const ConstantsTable& ConstantsTable::codata2018() {
  static const ConstantsTable table{};
  return table;
}

ConstantsTable ConstantsTable::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("constants: cannot open '" + path + "'");

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("constants: ") + e.what());
  }

  ConstantsTable t;
  bool have_schema = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "schema_version") {
      if (!value.is_number_integer() || value.get<int>() != 1)
        throw DomainError("constants: unsupported schema_version in '" + path + "'");
      have_schema = true;
    } else if (key == "source") {
      t.source = value.get<std::string>();
    } else if (key == "bohr_radius_m") {
      t.bohr_radius_m = value.get<double>();
    } else if (key == "planck_length_m") {
      t.planck_length_m = value.get<double>();
    } else if (key == "hartree_J") {
      t.hartree_J = value.get<double>();
    } else if (key == "hbar_Js") {
      t.hbar_Js = value.get<double>();
    } else {
      throw DomainError("constants: unknown key '" + key + "' in '" + path + "'");
    }
  }
  if (!have_schema) throw DomainError("constants: missing schema_version in '" + path + "'");

  for (double v : {t.bohr_radius_m, t.planck_length_m, t.hartree_J, t.hbar_Js}) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError("constants: nonpositive or non-finite value in '" + path + "'");
  }
  return t;
}

}  // namespace nchydro
