#include "th/model.hpp"

#include <cmath>
#include <limits>

#include "th/constants.hpp"
#include "th/errors.hpp"

namespace th::model {

void validate(const MoleculeParams& p) {
  auto bad = [&](const char* field, const char* req) {
    throw DomainError("molecule '" + p.name + "': " + field + " must satisfy " + req);
  };
  if (!(std::isfinite(p.D) && p.D > 0.0)) bad("D", "D > 0");
  if (!(std::isfinite(p.r_e) && p.r_e > 0.0)) bad("r_e", "r_e > 0");
  if (!(std::isfinite(p.b_h) && p.b_h > 0.0)) bad("b_h", "b_h > 0");
  if (!(std::isfinite(p.mu) && p.mu > 0.0)) bad("mu", "mu > 0");
  if (!(std::isfinite(p.c_h) && std::fabs(p.c_h) < 1.0)) bad("c_h", "|c_h| < 1");
}

ScaledParams scale(const MoleculeParams& p) {
  validate(p);
  double conv = constants::conv_cm1_A2(p.mu);
  return {p.D / conv, p.b_h, p.c_h, p.r_e, conv};
}

double scale_energy(const ScaledParams& sp, double E_cm1) {
  return E_cm1 / sp.conv;
}

const char* to_string(CaseId id) {
  switch (id) {
    case CaseId::I: return "I";
    case CaseId::II: return "II";
    case CaseId::III: return "III";
    case CaseId::IV: return "IV";
    case CaseId::V: return "V";
  }
  return "?";
}

Regime classify_regime(const MoleculeParams& p) {
  validate(p);
  const double inf = std::numeric_limits<double>::infinity();
  double thr = std::exp(-p.b_h * p.r_e);
  if (std::fabs(p.c_h) < kCaseVTol)
    return {CaseId::V, 0.0, inf, thr, std::nullopt};
  if (p.c_h > 0.0) {
    double r0 = p.r_e + std::log(p.c_h) / p.b_h;
    if (p.c_h >= thr)  // boundary value itself belongs to case I
      return {CaseId::I, r0, inf, thr, r0};
    return {CaseId::III, 0.0, inf, thr, r0};
  }
  return {CaseId::IV, 0.0, inf, thr, std::nullopt};
}

double threshold_ch(const MoleculeParams& p) {
  return std::exp(-p.b_h * p.r_e);
}

double potential_th(const MoleculeParams& p, double r) {
  if (!(r > 0.0)) throw DomainError("potential_th: r must be positive");
  double dr = r - p.r_e;
  double num = -std::expm1(-p.b_h * dr);
  double den;
  if (p.c_h > 0.0) {
    double r0 = p.r_e + std::log(p.c_h) / p.b_h;
    if (std::fabs(r - r0) < kSingularityGuard)
      throw SingularityError("potential_th: r within the guard band of r0");
    // c_h e^{-b_h (r - r_e)} = e^{-b_h (r - r0)}, so the denominator is
    // exact near the singular radius.
    den = -std::expm1(-p.b_h * (r - r0));
  } else {
    den = 1.0 - p.c_h * std::exp(-p.b_h * dr);
  }
  double q = num / den;
  return p.D * q * q;
}

double potential_morse(double D, double beta, double r_e, double r) {
  if (!(r >= 0.0)) throw DomainError("potential_morse: r must be >= 0");
  double q = -std::expm1(-beta * (r - r_e));
  return D * q * q;
}

double morse_beta(double b_h, double c_h) {
  if (!(std::fabs(c_h) < 1.0)) throw DomainError("morse_beta: |c_h| < 1 required");
  return b_h / (1.0 - c_h);
}

}  // namespace th::model
