#include "th/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "th/errors.hpp"

namespace th::oracle {
namespace {

std::vector<double> sample_potential(const PotentialFn& V, const GridSpec& g) {
  if (g.n_points < 1000)
    throw DomainError("numerov: grid needs at least 1000 points");
  if (!(g.r_lo < g.r_hi) || !std::isfinite(g.r_lo) || !std::isfinite(g.r_hi))
    throw DomainError("numerov: bad grid bounds");
  std::vector<double> v(g.n_points);
  double h = (g.r_hi - g.r_lo) / (g.n_points - 1);
  for (int i = 0; i < g.n_points; ++i) {
    v[i] = V(g.r_lo + i * h);
    if (!std::isfinite(v[i]))
      throw DomainError("numerov: potential sample is not finite");
  }
  return v;
}

// Outward sweep counting wavefunction sign changes. h^2 (V-E)/conv is
// clamped at 6 on the repulsive side: the two-step recurrence stays
// non-oscillatory only for h^2 f < 12, and samples that deep in the
// forbidden region carry no weight in any bound state.
int sweep_nodes(const std::vector<double>& v, double h, double conv, double E) {
  const double qcap = 6.0;
  const double h2c = h * h / conv;
  const int n = static_cast<int>(v.size());
  double q_prev = std::min(h2c * (v[0] - E), qcap);
  double q_cur = std::min(h2c * (v[1] - E), qcap);
  double y0 = 0.0, y1 = 1e-200;
  int sign = 1, count = 0;
  for (int i = 1; i + 1 < n; ++i) {
    double q_next = std::min(h2c * (v[i + 1] - E), qcap);
    double y2 = (2.0 * y1 * (1.0 + 5.0 * q_cur / 12.0) -
                 y0 * (1.0 - q_prev / 12.0)) /
                (1.0 - q_next / 12.0);
    if (y2 != 0.0) {
      int s2 = y2 > 0.0 ? 1 : -1;
      if (s2 != sign) ++count;
      sign = s2;
    }
    y0 = y1;
    y1 = y2;
    q_prev = q_cur;
    q_cur = q_next;
    double a = std::fabs(y1);
    if (a > 1e150) {
      y0 /= a;
      y1 /= a;
    }
  }
  return count;
}

std::vector<EigenState> eigen_on_samples(const std::vector<double>& v,
                                         const GridSpec& g, double conv,
                                         int max_states, double e_cap) {
  double h = (g.r_hi - g.r_lo) / (g.n_points - 1);
  double vmin = *std::min_element(v.begin(), v.end());
  double e_top = std::isnan(e_cap) ? v.back() : e_cap;
  double width = e_top - vmin;
  if (!(width > 0.0))
    throw std::runtime_error(
        "numerov: search window is empty (no well below the energy cap)");
  double e_min = vmin + 1e-13 * width;
  double e_max = e_top - 1e-12 * width;
  if (sweep_nodes(v, h, conv, e_min) != 0)
    throw std::runtime_error("numerov: node count nonzero at the window bottom");

  int total = std::min(sweep_nodes(v, h, conv, e_max), max_states);
  std::vector<EigenState> out;
  out.reserve(total);
  double lo_floor = e_min;
  const double tol = 1e-9 * width;
  for (int k = 0; k < total; ++k) {
    double a = lo_floor, b = e_max;
    int iter = 0;
    while (b - a > tol && ++iter < 200) {
      double m = 0.5 * (a + b);
      if (sweep_nodes(v, h, conv, m) >= k + 1)
        b = m;
      else
        a = m;
    }
    out.push_back({0.5 * (a + b), k});
    lo_floor = a;
  }
  return out;
}

}  // namespace

GridSpec make_grid(const model::Regime& regime, const model::MoleculeParams& p,
                   int n_points) {
  double r_lo = regime.case_id == model::CaseId::I
                    ? regime.domain_lo * (1.0 + 1e-9) + 1e-9
                    : 1e-6;
  return {r_lo, p.r_e + 40.0 / p.b_h, n_points};
}

std::vector<EigenState> numerov_eigen(const PotentialFn& V, const GridSpec& grid,
                                      double conv, int max_states, double e_max) {
  auto v = sample_potential(V, grid);
  return eigen_on_samples(v, grid, conv, max_states, e_max);
}

int numerov_count_below(const PotentialFn& V, const GridSpec& grid, double conv,
                        double E) {
  auto v = sample_potential(V, grid);
  double h = (grid.r_hi - grid.r_lo) / (grid.n_points - 1);
  return sweep_nodes(v, h, conv, E);
}

std::vector<EigenState> numerov_refined(const PotentialFn& V,
                                        const GridSpec& grid, double conv,
                                        int max_states, double e_max) {
  auto coarse = numerov_eigen(V, grid, conv, max_states, e_max);
  GridSpec fine = grid;
  fine.n_points = 2 * grid.n_points - 1;  // halves h exactly
  auto refined = numerov_eigen(V, fine, conv, max_states, e_max);
  size_t m = std::min(coarse.size(), refined.size());
  std::vector<EigenState> out;
  out.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    double e = refined[i].E + (refined[i].E - coarse[i].E) / 15.0;
    out.push_back({e, refined[i].nodes});
  }
  return out;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double fa, double b, double fb, double m, double fm,
                        double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = g(lm), frm = g(rm);
  if (!std::isfinite(flm) || !std::isfinite(frm))
    throw DomainError("quad_norm: integrand sample is not finite");
  double h = b - a;
  double left = h / 12.0 * (fa + 4.0 * flm + fm);
  double right = h / 12.0 * (fm + 4.0 * frm + fb);
  double both = left + right;
  double err = (both - whole) / 15.0;
  if (depth <= 0)
    throw ConvergenceError("quad_norm: adaptive subdivision limit reached",
                           both, std::fabs(err), 0);
  if (std::fabs(err) <= tol) return both + err;
  return adaptive_simpson(g, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(g, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double quad_norm(const std::function<double(double)>& f, double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("quad_norm: bad interval");
  auto g = [&f](double r) {
    double y = f(r);
    return y * y;
  };
  // Composite start so narrow peaks cannot hide from the error estimate.
  const int panels = 64;
  const double tol = 1e-10;
  double h = (b - a) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    double x0 = a + i * h, x1 = x0 + h, xm = 0.5 * (x0 + x1);
    double f0 = g(x0), f1 = g(x1), fm = g(xm);
    if (!std::isfinite(f0) || !std::isfinite(f1) || !std::isfinite(fm))
      throw DomainError("quad_norm: integrand sample is not finite");
    double whole = h / 6.0 * (f0 + 4.0 * fm + f1);
    total += adaptive_simpson(g, x0, f0, x1, f1, xm, fm, whole, tol / panels, 48);
  }
  return total;
}

int count_nodes(std::span<const double> values) {
  int count = 0, sign = 0;
  for (double v : values) {
    if (v == 0.0 || !std::isfinite(v)) continue;
    int s = v > 0.0 ? 1 : -1;
    if (sign != 0 && s != sign) ++count;
    sign = s;
  }
  return count;
}

}  // namespace th::oracle
