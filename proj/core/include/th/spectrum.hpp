#pragma once

#include <optional>
#include <vector>

#include "th/model.hpp"
#include "th/specfun.hpp"

namespace th::spectrum {

/// The characteristic exponents realized at one energy. For c_h = 0 the
/// c_h-dependent fields diverge and are stored as +inf (-inf for
/// delta_minus); lambda is always finite for E < D.
struct Exponents {
  double lambda;          // sqrt(d~ - eps) / b_h
  double delta_plus;      // 1/2 + sqrt(1/4 + (d~/b_h^2)(1 - 1/c_h)^2); the delta of case I
  double delta_minus;     // 1 - delta_plus
  double gamma;           // sqrt(d~/c_h^2 - eps) / b_h
  double delta_bar_plus;  // 1/2 + sqrt(1/4 + (d~/b_h^2)(1 + 1/|c_h|)^2)
  double gamma_bar_plus;  // equals gamma
};

/// Requires 0 <= E < D; throws DomainError at or above dissociation.
Exponents exponents_at(const model::ScaledParams& sp, double E_cm1);

enum class Method { closed_form, transcend_iii, transcend_iv, morse_closed };
const char* to_string(Method m);

struct BoundState {
  int n_r;         // vibrational quantum number / node count
  double E;        // cm^-1
  double eps;      // 1/A^2
  Exponents exps;
  Method method;
  bool marginal = false;  // within 1e-8 D of dissociation
};

/// Per-root bookkeeping for the transcendental solvers.
struct RootDiag {
  int index = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  bool converged = true;
  bool marginal = false;
  int wf_nodes = -1;  // sampled wavefunction sign changes; -1 = not checked
};

struct OracleCheck {
  std::vector<double> energies;  // Numerov eigenvalues, ascending
  std::vector<double> rel_dev;   // |E_solver - E_oracle| / E_oracle per level
  int count = 0;
  bool counts_match = true;
  double max_rel_dev = 0.0;
};

struct SpectrumReport {
  model::MoleculeParams params;
  model::Regime regime;
  std::vector<BoundState> states;  // ascending E, n_r = 0, 1, ...
  int n_r_max = -1;                // -1 when the spectrum is empty
  std::vector<RootDiag> diagnostics;
  std::optional<OracleCheck> oracle;
  bool completeness_warning = false;
};

struct SolveOptions {
  /// Full per-level Numerov comparison attached as OracleCheck.
  bool validate_with_oracle = false;
  /// Cheap completeness check for the transcendental cases: compare the
  /// root count with the oracle's eigenvalue count; on mismatch re-scan
  /// once at 10x density, then warn.
  bool count_check = true;
  /// Sample each wavefunction and record its node count in RootDiag.
  bool check_nodes = false;
  int scan_points = 4001;
  int oracle_points = 20000;
};

/// Dispatch on classify_regime: closed form (I), transcendental roots
/// (III, IV) or the Morse ladder (V).
SpectrumReport solve(const model::MoleculeParams& p, const SolveOptions& opts = {});

// --- case I: closed form ---------------------------------------------------
SpectrumReport energy_closed_case_i(const model::MoleculeParams& p,
                                    const SolveOptions& opts = {});
/// Highest bound n_r, or -1 when no state fits.
int count_case_i(const model::MoleculeParams& p);
/// Normalized radial wavefunction; requires r > r0.
double wavefunction_case_i(const model::MoleculeParams& p, int n_r, double r);

// --- case III: 0 < c_h < e^{-b_h r_e} --------------------------------------
specfun::SeriesResult transcend_value_case_iii(const model::MoleculeParams& p,
                                               double E);
SpectrumReport energy_roots_case_iii(const model::MoleculeParams& p,
                                     const SolveOptions& opts = {});
/// Unnormalized (C = 1); requires r >= 0.
double wavefunction_case_iii(const model::MoleculeParams& p, double E, double r);

// --- case IV: -1 < c_h < 0 ---------------------------------------------------
specfun::SeriesResult transcend_value_case_iv(const model::MoleculeParams& p,
                                              double E);
SpectrumReport energy_roots_case_iv(const model::MoleculeParams& p,
                                    const SolveOptions& opts = {});
double wavefunction_case_iv(const model::MoleculeParams& p, double E, double r);

// --- case V: c_h = 0 (Morse) -------------------------------------------------
SpectrumReport energy_morse(const model::MoleculeParams& p,
                            const SolveOptions& opts = {});
double wavefunction_morse(const model::MoleculeParams& p, int n_r, double r);

/// "Largest integer inferior to x": strictly below, so 3.0 -> 2.
int largest_integer_below(double x);

}  // namespace th::spectrum
