#pragma once

#include <string>

namespace nchydro {

/// Physical constants used when converting dimensionless results to SI.
/// Defaults are CODATA 2018. A table can also be loaded from a JSON file
/// (see data/constants_codata2018.json) so pinned values stay under
/// version control and remain overridable per run.
struct ConstantsTable {
  std::string source = "CODATA-2018";
  double bohr_radius_m = 5.29177210903e-11;
  double planck_length_m = 1.616255e-35;
  double hartree_J = 4.3597447222071e-18;
  double hbar_Js = 1.054571817e-34;

  static const ConstantsTable& codata2018();

  /// Strict load: unknown keys, missing keys, or nonpositive values are
  /// rejected with DomainError.
  static ConstantsTable from_json_file(const std::string& path);
};

}  // namespace nchydro
