#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "th/model.hpp"

// Independent verification path: a Numerov shooting eigensolver for
// y'' = ((V - E)/conv) y with hard walls at both grid ends, plus
// quadrature and node-count helpers. Deliberately shares no numerical
// machinery with th::spectrum.
namespace th::oracle {

struct GridSpec {
  double r_lo = 0.0;   // A
  double r_hi = 0.0;   // A
  int n_points = 20000;
};

/// Grid for a regime's natural domain: the hard wall sits just right of
/// r0 for case I and effectively at the origin otherwise;
/// r_hi = r_e + 40/b_h covers the wavefunction decay scale.
GridSpec make_grid(const model::Regime& regime, const model::MoleculeParams& p,
                   int n_points = 20000);

struct EigenState {
  double E = 0.0;  // cm^-1
  int nodes = 0;
};

using PotentialFn = std::function<double(double)>;

/// Eigenvalues located by node-count bisection, ascending; nodes come
/// back as 0, 1, 2, ... Each converges to |dE| <= 1e-9 of the search
/// window. The window ends at e_max, which defaults (NaN) to the
/// potential value at the right grid edge, i.e. bound states only; pass
/// an explicit cap for wall-dominated problems like a flat box.
std::vector<EigenState> numerov_eigen(
    const PotentialFn& V, const GridSpec& grid, double conv, int max_states,
    double e_max = std::numeric_limits<double>::quiet_NaN());

/// Number of eigenvalues strictly below E: one Numerov sweep.
int numerov_count_below(const PotentialFn& V, const GridSpec& grid, double conv,
                        double E);

/// numerov_eigen on the given grid and on its twice-refined version,
/// combined by h^4 Richardson extrapolation.
std::vector<EigenState> numerov_refined(
    const PotentialFn& V, const GridSpec& grid, double conv, int max_states,
    double e_max = std::numeric_limits<double>::quiet_NaN());

/// Integral of f^2 over [a, b] by adaptive composite Simpson quadrature,
/// absolute tolerance 1e-10.
double quad_norm(const std::function<double(double)>& f, double a, double b);

/// Strict sign changes in a sampled function, ignoring exact zeros.
int count_nodes(std::span<const double> values);

}  // namespace th::oracle
