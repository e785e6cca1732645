#pragma once

// Special-function kernel: log-gamma, Gauss 2F1, Kummer 1F1 and Jacobi
// polynomials, tuned for the large-parameter ranges the quantization
// equations produce. All functions are pure; safe to call from any thread.

namespace th::specfun {

/// Outcome of a hypergeometric series evaluation.
struct SeriesResult {
  double value = 0.0;
  /// Conservative absolute error bound: magnitude of the last term plus
  /// roundoff scaled by the summation peak. Finite whenever value is.
  double est_abs_error = 0.0;
  int terms_used = 0;
  /// True when the double-double accumulator pass was taken because the
  /// plain compensated sum lost too many digits to cancellation.
  bool escalated = false;
};

inline constexpr int kTermCap = 20000;
inline constexpr double kSeriesRelTol = 1e-12;

/// Natural log of Gamma(x), x > 0. Lanczos (g = 7, 9 terms), relative
/// error below 1e-13 for x up to 1e4.
double ln_gamma(double x);

/// log|Gamma(x)| for any non-pole real x; *sign receives the sign of
/// Gamma(x). Returns +inf at non-positive integers (poles), sign +1.
double ln_gamma_signed(double x, int* sign);

/// 2F1(a, b, c; z) for z in [0, 1).
///
/// Route selection: exact finite sum when a or b is a non-positive
/// integer; otherwise the Euler transformation is applied first whenever
/// it shortens the sign-alternating stretch of the series (with smaller
/// |a| + |b| as the tie-break), then the defining series up to z = 0.97
/// and the 1-z connection formula beyond, flipping c-a-b negative via
/// Euler first. A near-integer c-a-b in the connection formula is lifted
/// by shifting c by 3e-8, which costs up to ~1e-7 relative error
/// (reflected in est_abs_error).
///
/// Throws PoleError when c is a non-positive integer, DomainError for
/// z outside [0, 1), ConvergenceError when the term cap is exhausted.
/// A value too large for double comes back as +-inf with infinite error
/// bound; the sign is still meaningful.
SeriesResult gauss_2f1(double a, double b, double c, double z);

/// 1F1(a, c; z). Negative z is routed through the Kummer transformation
/// e^z 1F1(c-a, c; -z) to keep the sum one-signed. Good to ~1e-10
/// relative for |z| <= 200.
SeriesResult kummer_1f1(double a, double c, double z);

/// Jacobi polynomial P_n^(alpha,beta)(x) by the three-term recurrence.
/// Requires n >= 0, alpha > -1, beta > -1, x in [-1, 1].
double jacobi_p(int n, double alpha, double beta, double x);

}  // namespace th::specfun
