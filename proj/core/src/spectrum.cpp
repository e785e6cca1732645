#include "th/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "th/errors.hpp"
#include "th/oracle.hpp"

namespace th::spectrum {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kMarginalBand = 1e-8;  // of D, below dissociation
constexpr double kRootRelTol = 1e-12;
constexpr int kRootMaxIter = 200;

model::Regime require_case(const model::MoleculeParams& p, model::CaseId want,
                           const char* who) {
  auto regime = model::classify_regime(p);
  if (regime.case_id != want)
    throw DomainError(std::string(who) + ": molecule '" + p.name +
                      "' is not in the required regime");
  return regime;
}

// Hypergeometric argument sets for the two transcendental quantization
// conditions. delta and gamma individually grow like 1/|c_h|, so their
// differences are formed through (X - Y)/(sqrt X + sqrt Y) instead of
// subtracting two large square roots.
struct HypArgs {
  double a, b, c;  // series parameters
};

HypArgs args_case_iii(const model::ScaledParams& sp, double eps) {
  double b2 = sp.bh * sp.bh;
  double lambda = std::sqrt(sp.d_tilde - eps) / sp.bh;
  double X = 0.25 + sp.d_tilde / b2 * (1.0 - 1.0 / sp.ch) * (1.0 - 1.0 / sp.ch);
  double Y = (sp.d_tilde / (sp.ch * sp.ch) - eps) / b2;
  double sX = std::sqrt(X), sY = std::sqrt(Y);
  double diff = (0.25 + sp.d_tilde / b2 * (1.0 - 2.0 / sp.ch) + eps / b2) /
                (sX + sY);  // = delta_plus - gamma - 1/2
  return {lambda + 0.5 + diff, lambda + 0.5 + sX + sY, 2.0 * lambda + 1.0};
}

HypArgs args_case_iv(const model::ScaledParams& sp, double eps) {
  double b2 = sp.bh * sp.bh;
  double ac = std::fabs(sp.ch);
  double lambda = std::sqrt(sp.d_tilde - eps) / sp.bh;
  double X = 0.25 + sp.d_tilde / b2 * (1.0 + 1.0 / ac) * (1.0 + 1.0 / ac);
  double Y = (sp.d_tilde / (ac * ac) - eps) / b2;
  double sX = std::sqrt(X), sY = std::sqrt(Y);
  double diff = (0.25 + sp.d_tilde / b2 * (1.0 + 2.0 / ac) + eps / b2) /
                (sX + sY);  // = delta_bar_plus - gamma_bar_plus - 1/2
  return {lambda + 0.5 - diff, lambda + 0.5 + sX + sY, 2.0 * lambda + 1.0};
}

// ---- bracketing root refinement (Brent), tolerant of +-inf samples --------

struct BrentOut {
  double root;
  int iterations;
  bool converged;
};

template <class F>
BrentOut brent_root(F&& f, double a, double b, double fa, double fb) {
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < kRootMaxIter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    double tol1 = kRootRelTol * std::fabs(b) + 1e-300;
    double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return {b, it, true};
    bool bisect = true;
    if (std::fabs(e) >= tol1 && std::isfinite(fa) && std::isfinite(fb) &&
        std::isfinite(fc) && std::fabs(fa) > std::fabs(fb)) {
      double p, q, s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (std::isfinite(p) && std::isfinite(q) &&
          2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q),
                             std::fabs(e * q))) {
        e = d;
        d = p / q;
        bisect = false;
      }
    }
    if (bisect) {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol1 ? d : std::copysign(tol1, xm);
    fb = f(b);
    if (std::isnan(fb)) return {b, it, false};
  }
  return {b, kRootMaxIter, false};
}

struct ScanHit {
  double lo, hi;   // bracket; lo == hi means an exact zero sample
  double flo, fhi;
};

std::vector<ScanHit> scan_for_brackets(const std::function<double(double)>& f,
                                       double e_lo, double e_hi, int n) {
  std::vector<ScanHit> hits;
  double prev_e = 0.0, prev_f = kNan;
  bool have_prev = false;
  for (int i = 0; i < n; ++i) {
    double e = e_lo + (e_hi - e_lo) * i / (n - 1);
    double fe = f(e);
    if (std::isnan(fe)) {
      have_prev = false;
      continue;
    }
    if (fe == 0.0) {
      hits.push_back({e, e, 0.0, 0.0});
      have_prev = false;
      continue;
    }
    if (have_prev && std::signbit(fe) != std::signbit(prev_f))
      hits.push_back({prev_e, e, prev_f, fe});
    prev_e = e;
    prev_f = fe;
    have_prev = true;
  }
  return hits;
}

// ---- shared report assembly -------------------------------------------------

oracle::PotentialFn potential_of(const model::MoleculeParams& p) {
  return [p](double r) { return model::potential_th(p, r); };
}

void attach_oracle(SpectrumReport& rep, const SolveOptions& opts) {
  auto grid = oracle::make_grid(rep.regime, rep.params, opts.oracle_points);
  double conv = model::scale(rep.params).conv;
  auto eig = oracle::numerov_refined(potential_of(rep.params), grid, conv,
                                     static_cast<int>(rep.states.size()) + 3);
  OracleCheck chk;
  chk.count = static_cast<int>(eig.size());
  chk.counts_match = eig.size() == rep.states.size();
  size_t m = std::min(eig.size(), rep.states.size());
  for (size_t i = 0; i < m; ++i) {
    chk.energies.push_back(eig[i].E);
    double dev = std::fabs(rep.states[i].E - eig[i].E) /
                 std::max(std::fabs(eig[i].E), 1e-300);
    chk.rel_dev.push_back(dev);
    chk.max_rel_dev = std::max(chk.max_rel_dev, dev);
  }
  rep.oracle = std::move(chk);
  if (!rep.oracle->counts_match) rep.completeness_warning = true;
}

void attach_nodes(SpectrumReport& rep,
                  const std::function<double(const BoundState&, double)>& wf) {
  double lo = rep.regime.case_id == model::CaseId::I
                  ? rep.regime.domain_lo +
                        std::max(1e-6, 1e-4 * (rep.params.r_e - rep.regime.domain_lo))
                  : std::max(1e-4, 1e-3 * rep.params.r_e);
  double hi = rep.params.r_e + 40.0 / rep.params.b_h;
  const int n = 3000;
  if (rep.diagnostics.size() < rep.states.size())
    rep.diagnostics.resize(rep.states.size());
  for (size_t k = 0; k < rep.states.size(); ++k) {
    // All nodes live between the classical turning points. Left of the
    // inner turning point the closed-form wavefunction is dominated by
    // the exponentially growing admixture a finitely-converged root
    // always carries, so the count starts at the turning point.
    double start = lo;
    for (int i = 0; i < n; ++i) {
      double r = lo + (hi - lo) * i / (n - 1);
      double v;
      try {
        v = model::potential_th(rep.params, r);
      } catch (const SingularityError&) {
        continue;
      }
      if (v < rep.states[k].E) {
        start = r;
        break;
      }
    }
    std::vector<double> vals(n);
    double peak = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = start + (hi - start) * i / (n - 1);
      try {
        vals[i] = wf(rep.states[k], r);
      } catch (const ConvergenceError&) {
        vals[i] = kNan;
      }
      if (std::isfinite(vals[i])) peak = std::max(peak, std::fabs(vals[i]));
    }
    // Samples far below the peak sit at the evaluation noise floor;
    // their signs are meaningless, so they do not participate.
    for (double& v : vals)
      if (std::fabs(v) < 1e-10 * peak) v = 0.0;
    rep.diagnostics[k].index = static_cast<int>(k);
    rep.diagnostics[k].wf_nodes = oracle::count_nodes(vals);
  }
}

BoundState make_state(const model::ScaledParams& sp, double D, int n, double E,
                      Method method) {
  BoundState st;
  st.n_r = n;
  st.E = E;
  st.eps = model::scale_energy(sp, E);
  st.exps = exponents_at(sp, E);
  st.method = method;
  st.marginal = (D - E) < kMarginalBand * D;
  return st;
}

// Scan (1e-9 D, D(1 - 1e-9)) for sign changes of the quantization
// function and polish each bracket.
SpectrumReport transcend_solve(const model::MoleculeParams& p,
                               const model::Regime& regime, Method method,
                               const std::function<double(double)>& f,
                               const SolveOptions& opts) {
  auto sp = model::scale(p);
  SpectrumReport rep;
  rep.params = p;
  rep.regime = regime;

  auto run_scan = [&](int points) {
    rep.states.clear();
    rep.diagnostics.clear();
    double e_lo = 1e-9 * p.D;
    double e_hi = p.D * (1.0 - 1e-9);
    auto hits = scan_for_brackets(f, e_lo, e_hi, points);
    int idx = 0;
    for (const auto& h : hits) {
      RootDiag diag;
      diag.index = idx;
      diag.bracket_lo = h.lo;
      diag.bracket_hi = h.hi;
      double root;
      if (h.lo == h.hi) {
        root = h.lo;
        diag.iterations = 0;
        diag.converged = true;
      } else {
        auto out = brent_root(f, h.lo, h.hi, h.flo, h.fhi);
        root = out.root;
        diag.iterations = out.iterations;
        diag.converged = out.converged;
      }
      auto st = make_state(sp, p.D, idx, root, method);
      diag.marginal = st.marginal;
      rep.states.push_back(st);
      rep.diagnostics.push_back(diag);
      ++idx;
    }
  };

  run_scan(opts.scan_points);

  if (opts.count_check) {
    auto grid = oracle::make_grid(regime, p, opts.oracle_points);
    int expected = oracle::numerov_count_below(potential_of(p), grid, sp.conv,
                                               p.D * (1.0 - 1e-9));
    if (expected != static_cast<int>(rep.states.size())) {
      run_scan((opts.scan_points - 1) * 10 + 1);
      if (expected != static_cast<int>(rep.states.size()))
        rep.completeness_warning = true;
    }
  }

  rep.n_r_max = static_cast<int>(rep.states.size()) - 1;
  if (opts.validate_with_oracle) attach_oracle(rep, opts);
  return rep;
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::transcend_iii: return "transcend_iii";
    case Method::transcend_iv: return "transcend_iv";
    case Method::morse_closed: return "morse_closed";
  }
  return "?";
}

int largest_integer_below(double x) {
  if (!(std::fabs(x) < 1e9))
    throw DomainError("largest_integer_below: out of range");
  double f = std::floor(x);
  if (f == x) f -= 1.0;
  return static_cast<int>(f);
}

Exponents exponents_at(const model::ScaledParams& sp, double E_cm1) {
  if (!(E_cm1 >= 0.0))
    throw DomainError("exponents_at: E must be >= 0");
  double eps = model::scale_energy(sp, E_cm1);
  if (!(eps < sp.d_tilde))
    throw DomainError("exponents_at: E at or above dissociation");
  Exponents ex;
  double b2 = sp.bh * sp.bh;
  ex.lambda = std::sqrt(sp.d_tilde - eps) / sp.bh;
  if (std::fabs(sp.ch) < model::kCaseVTol) {
    ex.gamma = ex.delta_plus = ex.delta_bar_plus = ex.gamma_bar_plus = kInf;
    ex.delta_minus = -kInf;
    return ex;
  }
  double ac = std::fabs(sp.ch);
  ex.gamma = std::sqrt(sp.d_tilde / (sp.ch * sp.ch) - eps) / sp.bh;
  ex.delta_plus =
      0.5 + std::sqrt(0.25 + sp.d_tilde / b2 * (1.0 - 1.0 / sp.ch) *
                                 (1.0 - 1.0 / sp.ch));
  ex.delta_minus = 1.0 - ex.delta_plus;
  ex.delta_bar_plus =
      0.5 + std::sqrt(0.25 + sp.d_tilde / b2 * (1.0 + 1.0 / ac) * (1.0 + 1.0 / ac));
  ex.gamma_bar_plus = ex.gamma;
  return ex;
}

// ---- case I -----------------------------------------------------------------

namespace {

struct CaseIBasics {
  model::ScaledParams sp;
  double delta;  // E-independent exponent
  double K;      // (d~/b^2)(1/c^2 - 1) = gamma^2 - lambda^2
};

CaseIBasics case_i_basics(const model::MoleculeParams& p) {
  auto sp = model::scale(p);
  double b2 = sp.bh * sp.bh;
  double delta = 0.5 + std::sqrt(0.25 + sp.d_tilde / b2 * (1.0 - 1.0 / sp.ch) *
                                            (1.0 - 1.0 / sp.ch));
  double K = sp.d_tilde / b2 * (1.0 / (sp.ch * sp.ch) - 1.0);
  return {sp, delta, K};
}

double case_i_energy(const CaseIBasics& cb, double D, int n) {
  double q = (n + cb.delta) - cb.K / (n + cb.delta);
  return D - cb.sp.conv * cb.sp.bh * cb.sp.bh / 4.0 * q * q;
}

}  // namespace

int count_case_i(const model::MoleculeParams& p) {
  require_case(p, model::CaseId::I, "count_case_i");
  auto cb = case_i_basics(p);
  double t = std::sqrt(cb.K) - cb.delta;
  if (t <= 0.0) return -1;
  return std::max(-1, largest_integer_below(t));
}

SpectrumReport energy_closed_case_i(const model::MoleculeParams& p,
                                    const SolveOptions& opts) {
  auto regime = require_case(p, model::CaseId::I, "energy_closed_case_i");
  auto cb = case_i_basics(p);
  SpectrumReport rep;
  rep.params = p;
  rep.regime = regime;
  rep.n_r_max = count_case_i(p);
  for (int n = 0; n <= rep.n_r_max; ++n)
    rep.states.push_back(
        make_state(cb.sp, p.D, n, case_i_energy(cb, p.D, n), Method::closed_form));
  if (opts.validate_with_oracle) attach_oracle(rep, opts);
  if (opts.check_nodes)
    attach_nodes(rep, [&p](const BoundState& st, double r) {
      return wavefunction_case_i(p, st.n_r, r);
    });
  return rep;
}

double wavefunction_case_i(const model::MoleculeParams& p, int n_r, double r) {
  auto regime = require_case(p, model::CaseId::I, "wavefunction_case_i");
  int nmax = count_case_i(p);
  if (n_r < 0 || n_r > nmax)
    throw DomainError("wavefunction_case_i: n_r outside the bound spectrum");
  double r0 = *regime.r0;
  if (!(r > r0))
    throw DomainError("wavefunction_case_i: r must exceed r0");
  auto cb = case_i_basics(p);
  double E = case_i_energy(cb, p.D, n_r);
  double lambda = std::sqrt(cb.sp.d_tilde - model::scale_energy(cb.sp, E)) / cb.sp.bh;
  double delta = cb.delta;

  // s~ = c_h e^{-b_h (r - r_e)} = e^{-b_h (r - r0)}
  double st = std::exp(-p.b_h * (r - r0));
  double one_minus = -std::expm1(-p.b_h * (r - r0));
  double n = n_r;
  double ln_norm =
      0.5 * (std::log(2.0 * p.b_h * lambda * (n + lambda + delta) / (n + delta)) +
             specfun::ln_gamma(n + 1.0) + specfun::ln_gamma(n + 2.0 * lambda + 2.0 * delta) -
             specfun::ln_gamma(n + 2.0 * lambda + 1.0) - specfun::ln_gamma(n + 2.0 * delta));
  double pj = specfun::jacobi_p(n_r, 2.0 * lambda, 2.0 * delta - 1.0, 1.0 - 2.0 * st);
  if (pj == 0.0) return 0.0;
  double lm = ln_norm + lambda * std::log(st) + delta * std::log(one_minus) +
              std::log(std::fabs(pj));
  return std::copysign(std::exp(lm), pj);
}

// ---- case III ---------------------------------------------------------------

specfun::SeriesResult transcend_value_case_iii(const model::MoleculeParams& p,
                                               double E) {
  require_case(p, model::CaseId::III, "transcend_value_case_iii");
  if (!(E > 0.0 && E < p.D))
    throw DomainError("transcend_value_case_iii: need 0 < E < D");
  auto sp = model::scale(p);
  auto args = args_case_iii(sp, model::scale_energy(sp, E));
  double z0 = p.c_h * std::exp(p.b_h * p.r_e);
  return specfun::gauss_2f1(args.a, args.b, args.c, z0);
}

SpectrumReport energy_roots_case_iii(const model::MoleculeParams& p,
                                     const SolveOptions& opts) {
  auto regime = require_case(p, model::CaseId::III, "energy_roots_case_iii");
  auto f = [&p](double E) -> double {
    try {
      return transcend_value_case_iii(p, E).value;
    } catch (const ConvergenceError&) {
      return kNan;
    }
  };
  auto rep = transcend_solve(p, regime, Method::transcend_iii, f, opts);
  if (opts.check_nodes)
    attach_nodes(rep, [&p](const BoundState& st, double r) {
      return wavefunction_case_iii(p, st.E, r);
    });
  return rep;
}

double wavefunction_case_iii(const model::MoleculeParams& p, double E, double r) {
  require_case(p, model::CaseId::III, "wavefunction_case_iii");
  if (!(r >= 0.0)) throw DomainError("wavefunction_case_iii: r must be >= 0");
  if (!(E > 0.0 && E < p.D))
    throw DomainError("wavefunction_case_iii: need 0 < E < D");
  auto sp = model::scale(p);
  double eps = model::scale_energy(sp, E);
  auto args = args_case_iii(sp, eps);
  double lambda = std::sqrt(sp.d_tilde - eps) / sp.bh;
  double delta_plus = 0.5 * (args.a + args.b) - lambda;
  // s = c_h e^{-b_h (r - r_e)} = e^{-b_h (r - r0)}, r0 < 0 here
  double r0 = p.r_e + std::log(p.c_h) / p.b_h;
  double s = std::exp(-p.b_h * (r - r0));
  double one_minus = -std::expm1(-p.b_h * (r - r0));
  if (s == 0.0) return 0.0;
  auto F = specfun::gauss_2f1(args.a, args.b, args.c, s);
  if (F.value == 0.0) return 0.0;
  double lm = lambda * std::log(s) + delta_plus * std::log(one_minus) +
              std::log(std::fabs(F.value));
  return std::copysign(std::exp(lm), F.value);
}

// ---- case IV ----------------------------------------------------------------

specfun::SeriesResult transcend_value_case_iv(const model::MoleculeParams& p,
                                              double E) {
  require_case(p, model::CaseId::IV, "transcend_value_case_iv");
  if (!(E > 0.0 && E < p.D))
    throw DomainError("transcend_value_case_iv: need 0 < E < D");
  auto sp = model::scale(p);
  auto args = args_case_iv(sp, model::scale_energy(sp, E));
  double ac = std::fabs(p.c_h);
  double z0 = ac / (std::exp(-p.b_h * p.r_e) + ac);
  return specfun::gauss_2f1(args.a, args.b, args.c, z0);
}

SpectrumReport energy_roots_case_iv(const model::MoleculeParams& p,
                                    const SolveOptions& opts) {
  auto regime = require_case(p, model::CaseId::IV, "energy_roots_case_iv");
  auto f = [&p](double E) -> double {
    try {
      return transcend_value_case_iv(p, E).value;
    } catch (const ConvergenceError&) {
      return kNan;
    }
  };
  auto rep = transcend_solve(p, regime, Method::transcend_iv, f, opts);
  if (opts.check_nodes)
    attach_nodes(rep, [&p](const BoundState& st, double r) {
      return wavefunction_case_iv(p, st.E, r);
    });
  return rep;
}

double wavefunction_case_iv(const model::MoleculeParams& p, double E, double r) {
  require_case(p, model::CaseId::IV, "wavefunction_case_iv");
  if (!(r >= 0.0)) throw DomainError("wavefunction_case_iv: r must be >= 0");
  if (!(E > 0.0 && E < p.D))
    throw DomainError("wavefunction_case_iv: need 0 < E < D");
  auto sp = model::scale(p);
  double eps = model::scale_energy(sp, E);
  auto args = args_case_iv(sp, eps);
  double lambda = std::sqrt(sp.d_tilde - eps) / sp.bh;
  double gamma_bar = std::sqrt(sp.d_tilde / (sp.ch * sp.ch) - eps) / sp.bh;
  double ac = std::fabs(p.c_h);
  double em = std::exp(-p.b_h * (r - p.r_e));
  double s = ac * em / (1.0 + ac * em);
  double one_minus = 1.0 / (1.0 + ac * em);
  if (s == 0.0) return 0.0;
  auto F = specfun::gauss_2f1(args.a, args.b, args.c, s);
  if (F.value == 0.0) return 0.0;
  double lm = lambda * std::log(s) + gamma_bar * std::log(one_minus) +
              std::log(std::fabs(F.value));
  return std::copysign(std::exp(lm), F.value);
}

// ---- case V (Morse) -----------------------------------------------------------

SpectrumReport energy_morse(const model::MoleculeParams& p,
                            const SolveOptions& opts) {
  auto regime = require_case(p, model::CaseId::V, "energy_morse");
  auto sp = model::scale(p);
  double beta = p.b_h;  // c_h = 0
  double sbar = std::sqrt(sp.d_tilde) / beta;
  SpectrumReport rep;
  rep.params = p;
  rep.regime = regime;
  double t = sbar - 0.5;
  rep.n_r_max = t <= 0.0 ? -1 : std::max(-1, largest_integer_below(t));
  for (int n = 0; n <= rep.n_r_max; ++n) {
    double q = n + 0.5 - sbar;
    double E = p.D - sp.conv * beta * beta * q * q;
    rep.states.push_back(make_state(sp, p.D, n, E, Method::morse_closed));
  }
  if (opts.validate_with_oracle) attach_oracle(rep, opts);
  if (opts.check_nodes)
    attach_nodes(rep, [&p](const BoundState& st, double r) {
      return wavefunction_morse(p, st.n_r, r);
    });
  return rep;
}

double wavefunction_morse(const model::MoleculeParams& p, int n_r, double r) {
  require_case(p, model::CaseId::V, "wavefunction_morse");
  if (!(r >= 0.0)) throw DomainError("wavefunction_morse: r must be >= 0");
  auto sp = model::scale(p);
  double beta = p.b_h;
  double sbar = std::sqrt(sp.d_tilde) / beta;
  int nmax = std::max(-1, largest_integer_below(sbar - 0.5));
  if (n_r < 0 || n_r > nmax)
    throw DomainError("wavefunction_morse: n_r outside the bound spectrum");
  double q = n_r + 0.5 - sbar;
  double E = p.D - sp.conv * beta * beta * q * q;
  double kappa = std::sqrt(sp.d_tilde - model::scale_energy(sp, E));
  double dr = r - p.r_e;
  double decay = std::exp(-beta * dr);
  double y = 2.0 * std::sqrt(sp.d_tilde) / beta * decay;
  auto F = specfun::kummer_1f1(-static_cast<double>(n_r),
                               2.0 * kappa / beta + 1.0, y);
  if (F.value == 0.0) return 0.0;
  double lm = -kappa * dr - 0.5 * y + std::log(std::fabs(F.value));
  return std::copysign(std::exp(lm), F.value);
}

SpectrumReport solve(const model::MoleculeParams& p, const SolveOptions& opts) {
  switch (model::classify_regime(p).case_id) {
    case model::CaseId::I: return energy_closed_case_i(p, opts);
    case model::CaseId::III: return energy_roots_case_iii(p, opts);
    case model::CaseId::IV: return energy_roots_case_iv(p, opts);
    case model::CaseId::V: return energy_morse(p, opts);
    case model::CaseId::II: break;  // classify_regime never yields II
  }
  throw DomainError("solve: unsupported regime");
}

}  // namespace th::spectrum
