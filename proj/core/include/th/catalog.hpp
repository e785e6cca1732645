#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "th/model.hpp"

namespace th::catalog {

// Catalog file format: one molecule per block, `key=value` lines, `#`
// comments, blocks separated by blank lines or the next `name=`. Keys:
// name=, D_cm1=, re_A=, bh_invA=, ch=, mu_amu=, source=. re_A and
// bh_invA are mandatory; entries lacking D_cm1 or mu_amu are
// "threshold-only" (classification works, spectra do not). A source=
// note is required whenever D_cm1 or mu_amu is given.
struct CatalogEntry {
  std::string name;
  std::optional<double> D;      // cm^-1
  std::optional<double> r_e;    // A
  std::optional<double> b_h;    // 1/A
  std::optional<double> c_h;
  std::optional<double> mu;     // amu
  std::string source;
  int line = 0;  // first line of the block

  bool threshold_only() const { return !(D && mu); }
  bool complete() const { return D && r_e && b_h && c_h && mu; }

  /// Throws DomainError when fields are missing (after the override).
  model::MoleculeParams to_params(
      std::optional<double> ch_override = std::nullopt) const;
};

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);
std::vector<CatalogEntry> parse_catalog(std::istream& in);

}  // namespace th::catalog
