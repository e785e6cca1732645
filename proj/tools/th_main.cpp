// th: bound states of diatomic molecules in the Tietz-Hua potential.
//
// Exit codes: 0 success, 2 parse/validation problem, 3 numerical failure,
// 4 self-test mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "th/catalog.hpp"
#include "th/commands.hpp"
#include "th/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitSelfTest = 4;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw th::ParseError("cannot open output file '" + out_path + "'");
  os << text;
}

th::catalog::CatalogEntry find_entry(const std::string& catalog_path,
                                     const std::string& molecule) {
  if (catalog_path.empty())
    throw th::ParseError("--catalog is required for this command");
  auto entries = th::catalog::load_catalog(catalog_path);
  for (auto& e : entries)
    if (e.name == molecule) return e;
  throw th::ParseError("molecule '" + molecule + "' not found in catalog '" +
                       catalog_path + "'");
}

struct CurveArgs {
  std::string catalog, molecule, out;
  std::optional<double> ch, energy, rmin, rmax;
  std::optional<int> n_r;
  int samples = 1001;
};

int run_curve(const CurveArgs& a, th::cli::CurveKind kind) {
  auto entry = find_entry(a.catalog, a.molecule);
  auto params = entry.to_params(a.ch);
  auto regime = th::model::classify_regime(params);
  double lo = a.rmin.value_or(regime.domain_lo > 0.0 ? regime.domain_lo + 1e-6
                                                     : 1e-6);
  double hi = a.rmax.value_or(params.r_e + 60.0 / params.b_h);
  emit(th::cli::cmd_curve(params, kind, a.n_r, a.energy, lo, hi, a.samples),
       a.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of diatomic molecules in the Tietz-Hua potential"};
  app.require_subcommand(1);

  std::string catalog_path, molecule, out_path;
  std::optional<double> ch_override;

  auto add_common = [&](CLI::App* cmd, bool need_molecule) {
    cmd->add_option("--catalog", catalog_path, "catalog file (key=value blocks)");
    auto* m = cmd->add_option("--molecule", molecule, "entry name in the catalog");
    if (need_molecule) m->required();
    cmd->add_option("--ch", ch_override, "override the c_h shape parameter");
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
  };

  auto* c_classify = app.add_subcommand("classify", "report the solution regime");
  add_common(c_classify, true);

  auto* c_spectrum = app.add_subcommand("spectrum", "bound-state ladder (TSV)");
  add_common(c_spectrum, true);
  bool spectrum_validate = false;
  c_spectrum->add_flag("--validate", spectrum_validate,
                       "append independent eigensolver columns");

  CurveArgs curve_args;
  auto add_curve_opts = [&](CLI::App* cmd) {
    cmd->add_option("--catalog", curve_args.catalog)->required();
    cmd->add_option("--molecule", curve_args.molecule)->required();
    cmd->add_option("--ch", curve_args.ch);
    cmd->add_option("--out", curve_args.out);
    cmd->add_option("--n", curve_args.n_r, "vibrational quantum number");
    cmd->add_option("--energy", curve_args.energy, "energy in cm^-1 (cases III/IV)");
    cmd->add_option("--rmin", curve_args.rmin, "left edge in A");
    cmd->add_option("--rmax", curve_args.rmax, "right edge in A");
    cmd->add_option("--samples", curve_args.samples, "number of grid points");
  };

  auto* c_wavefunction =
      app.add_subcommand("wavefunction", "radial wavefunction samples (CSV)");
  add_curve_opts(c_wavefunction);

  auto* c_curve = app.add_subcommand("curve", "potential or wavefunction samples (CSV)");
  std::string curve_what = "potential";
  c_curve->add_option("--what", curve_what, "potential|wavefunction");
  add_curve_opts(c_curve);

  auto* c_table1 = app.add_subcommand(
      "table1", "minimal c_h thresholds for the stock molecules (self-testing)");
  c_table1->add_option("--out", out_path);

  auto* c_validate = app.add_subcommand(
      "validate", "solve and cross-check against the independent eigensolver");
  add_common(c_validate, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classify->parsed()) {
      auto entry = find_entry(catalog_path, molecule);
      emit("name\tcase\tthreshold\tr0\tnote\n" +
               th::cli::cmd_classify(entry, ch_override),
           out_path);
      return kExitOk;
    }
    if (c_spectrum->parsed()) {
      auto entry = find_entry(catalog_path, molecule);
      auto out = th::cli::cmd_spectrum(entry.to_params(ch_override),
                                       spectrum_validate);
      emit(out.tsv, out_path);
      if (out.report.completeness_warning) {
        std::cerr << "warning: root count disagrees with the eigensolver\n";
        return kExitNumerical;
      }
      return kExitOk;
    }
    if (c_wavefunction->parsed())
      return run_curve(curve_args, th::cli::CurveKind::wavefunction);
    if (c_curve->parsed()) {
      if (curve_what != "potential" && curve_what != "wavefunction")
        throw th::ParseError("--what must be potential or wavefunction");
      return run_curve(curve_args, curve_what == "potential"
                                       ? th::cli::CurveKind::potential
                                       : th::cli::CurveKind::wavefunction);
    }
    if (c_table1->parsed()) {
      auto res = th::cli::cmd_table1();
      emit(res.text, out_path);
      if (!res.ok) {
        std::cerr << "table1 self-test FAILED: thresholds drifted from the "
                     "reference column\n";
        return kExitSelfTest;
      }
      return kExitOk;
    }
    if (c_validate->parsed()) {
      auto entry = find_entry(catalog_path, molecule);
      auto out = th::cli::cmd_spectrum(entry.to_params(ch_override), true);
      emit(out.tsv, out_path);
      const auto& rep = out.report;
      bool ok = rep.oracle && rep.oracle->counts_match &&
                rep.oracle->max_rel_dev <= 1e-6;
      if (!ok) {
        std::cerr << "validate: solver and eigensolver disagree";
        if (rep.oracle)
          std::cerr << " (count " << rep.states.size() << " vs "
                    << rep.oracle->count << ", max rel dev "
                    << th::cli::format_sci(rep.oracle->max_rel_dev) << ")";
        std::cerr << '\n';
        return kExitNumerical;
      }
      std::cerr << "validate: OK, max rel dev "
                << th::cli::format_sci(rep.oracle->max_rel_dev) << '\n';
      return kExitOk;
    }
  } catch (const th::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const th::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const th::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
