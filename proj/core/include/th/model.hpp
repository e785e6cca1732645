#pragma once

#include <optional>
#include <string>

namespace th::model {

/// Physical description of one diatomic system.
/// Units: D in cm^-1, r_e in Angstrom, b_h in 1/Angstrom, mu in amu.
/// c_h is the dimensionless shape parameter, |c_h| < 1.
struct MoleculeParams {
  std::string name;
  double D = 0.0;
  double r_e = 0.0;
  double b_h = 0.0;
  double c_h = 0.0;
  double mu = 0.0;
};

/// Throws DomainError naming the offending field.
void validate(const MoleculeParams& p);

/// Inverse-length^2 quantities every formula consumes.
struct ScaledParams {
  double d_tilde;  // 2 mu D / hbar^2, in 1/A^2
  double bh;       // 1/A
  double ch;       // dimensionless
  double re;       // A
  double conv;     // hbar^2/(2 mu), in cm^-1 A^2; E = conv * eps
};

ScaledParams scale(const MoleculeParams& p);
double scale_energy(const ScaledParams& sp, double E_cm1);  // -> eps, 1/A^2

enum class CaseId { I, II, III, IV, V };
const char* to_string(CaseId id);

/// Which solution regime applies, with the valid radial domain.
/// Case II is the (0, r0) companion segment of case I; classify_regime
/// never returns it and nothing is ever solved there.
struct Regime {
  CaseId case_id;
  double domain_lo;            // 0, or r0 in case I
  double domain_hi;            // +infinity
  double threshold;            // e^{-b_h r_e}
  std::optional<double> r0;    // singular radius, present iff c_h > 0
};

/// |c_h| below this is treated as exactly zero (case V); parsed input
/// rarely hits float zero on the nose.
inline constexpr double kCaseVTol = 1e-12;

/// Potential evaluation this close (in A) to r0 is an error instead of
/// a huge number, so quadrature never sees infinities.
inline constexpr double kSingularityGuard = 1e-12;

Regime classify_regime(const MoleculeParams& p);

/// e^{-b_h r_e}: the smallest positive c_h for which the closed-form
/// (case I) spectrum applies.
double threshold_ch(const MoleculeParams& p);

/// Tietz-Hua potential D [(1 - e^{-b_h(r-r_e)}) / (1 - c_h e^{-b_h(r-r_e)})]^2.
double potential_th(const MoleculeParams& p, double r);

/// Morse potential D (1 - e^{-beta (r-r_e)})^2.
double potential_morse(double D, double beta, double r_e, double r);

/// Morse constant from the shape parameters: beta = b_h / (1 - c_h).
double morse_beta(double b_h, double c_h);

}  // namespace th::model
