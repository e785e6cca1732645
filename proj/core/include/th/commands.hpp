#pragma once

#include <optional>
#include <string>
#include <vector>

#include "th/catalog.hpp"
#include "th/spectrum.hpp"

// Library side of the command-line interface. The CLI binary is a thin
// shell: every numeric it prints is produced here with the pinned
// "%.10e" format, so outputs are reproducible byte for byte.
namespace th::cli {

std::string format_sci(double v);  // "%.10e"

struct Table1Row {
  std::string name;
  double b_h, r_e;
  double threshold;  // computed e^{-b_h r_e}
  double reference;  // published minimal c_h
};

struct Table1Result {
  std::vector<Table1Row> rows;
  bool ok = false;  // every |threshold - reference| <= 1e-8
  std::string text;
};

/// Six-row threshold table from the built-in shape parameters;
/// doubles as a self-test against the pinned reference column.
Table1Result cmd_table1();

/// The built-in shape fixtures (b_h, r_e per molecule, threshold-only).
const std::vector<catalog::CatalogEntry>& builtin_shapes();

/// One classification row: name, case, threshold, r0 (or -), note.
/// D and mu default to 1 when the entry is threshold-only; the
/// classification depends only on b_h, r_e and c_h.
std::string cmd_classify(const catalog::CatalogEntry& entry,
                         std::optional<double> ch_override = std::nullopt);

struct SpectrumOutput {
  spectrum::SpectrumReport report;
  std::string tsv;
};

/// TSV ladder (n_r, E, method), plus oracle columns when validating.
SpectrumOutput cmd_spectrum(const model::MoleculeParams& params, bool validate);

enum class CurveKind { potential, wavefunction };

/// CSV (r_A, value) samples of the potential or of one wavefunction.
/// Wavefunctions take n_r directly for the closed-form regimes; the
/// transcendental regimes accept n_r (solves the spectrum first) or an
/// explicit energy.
std::string cmd_curve(const model::MoleculeParams& params, CurveKind kind,
                      std::optional<int> n_r, std::optional<double> energy,
                      double r_lo, double r_hi, int samples);

}  // namespace th::cli
