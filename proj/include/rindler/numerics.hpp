#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "rindler/errors.hpp"

namespace rindler::numerics {

using cdouble = std::complex<double>;

// Shared quadrature knobs. eps_schedule drives oscillatory_limit; it must be
// positive and strictly decreasing. truncation_T bounds the log of the
// largest abscissa probed by the semi-infinite rule (tau up to e^T).
struct QuadratureConfig {
  std::vector<double> eps_schedule{0.1, 0.05, 0.025, 0.0125, 0.00625};
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_refinements = 15;
  double truncation_T = 700.0;
};

struct QuadResult {
  cdouble value{0.0, 0.0};
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Process-wide multiplier on every integrator's absolute and relative
// tolerance (the CLI's --tol flag plumbs through here; the default is 1).
// Set it once before computing; integrators read it at each convergence
// decision. Throws DomainError unless the scale is positive and finite.
void set_quadrature_tolerance_scale(double scale);
double quadrature_tolerance_scale();

// Integral of f over (0, inf) by the exp-sinh double-exponential rule with
// trapezoid level doubling. The error estimate is the last inter-level
// difference, a deliberate overestimate given the rule's convergence rate.
// Throws NonIntegrableSingularity when a small-tau power probe finds
// f ~ tau^e with e <= -0.98, and TruncationFailure when the transformed
// integrand has not decayed at the truncation boundary.
QuadResult integrate_semi_infinite(const std::function<cdouble(double)>& f,
                                   const QuadratureConfig& cfg = {});

// Distributional limit eps -> 0 of integral f(tau, eps) d tau over (0, inf).
// Each schedule entry is integrated by integrate_semi_infinite, then the
// sequence is polynomial-extrapolated to eps = 0 (Neville). Throws
// ExtrapolationDiverged when the extrapolation diagonal stops contracting.
QuadResult oscillatory_limit(
    const std::function<cdouble(double, double)>& f,
    const QuadratureConfig& cfg = {});

// Adaptive Gauss-Kronrod 15(7) on [lo, hi]. Same singularity probe at the lo
// endpoint when lo == 0.
QuadResult integrate_finite(const std::function<cdouble(double)>& f,
                            double lo, double hi,
                            const QuadratureConfig& cfg = {});

// |Gamma(i nu)|^2 for nu > 0, via the Lanczos log-gamma of 1 + i nu.
// The reflection identity pi / (nu sinh(pi nu)) is reserved as the
// independent check and is not used in the implementation.
double gamma_abs_sq_imag(double nu);

// Principal-branch log Gamma, Re z > 0 (Lanczos, g = 607/128, 14 terms).
cdouble log_gamma(cdouble z);

// Digamma for Re z > 0: recurrence into Re z >= 10, then the Bernoulli
// asymptotic series.
cdouble digamma_complex(cdouble z);

// Partial Mittag-Leffler expansion 1/(pi y) + (2/pi) sum_{k<=terms}
// y/(k^2+y^2) plus the exact tail via Im digamma(terms+1+iy). The corrected
// value equals coth(pi y) to machine accuracy for every terms >= 0.
struct CothPartials {
  double partial;
  double tail_corrected;
};
CothPartials mittag_leffler_coth(double y, int terms);

// Gauss-Legendre nodes and weights on [a, b] (Newton on the recurrence).
void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w);

// Neville extrapolation of (x_i, y_i) to x = 0. Returns the deepest diagonal
// entry and the magnitude of the last diagonal step (error proxy). Throws
// ExtrapolationDiverged when diagonal steps grow twice in a row and the last
// step exceeds diverge_tol.
std::pair<cdouble, double> neville_to_zero(const std::vector<double>& xs,
                                           const std::vector<cdouble>& ys,
                                           double diverge_tol = 1e300);

// Brent root bracketing on [lo, hi]; f(lo) and f(hi) must differ in sign.
double brent_root(const std::function<double(double)>& f, double lo,
                  double hi, double xtol = 1e-12, int max_iter = 200);

// Least-squares slope and intercept of y against x.
struct LineFit {
  double slope;
  double intercept;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace rindler::numerics
