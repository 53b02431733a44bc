#pragma once

// Detector response and self-force observables for a uniformly accelerated
// internal-variable detector, over several independent computational routes
// that the verification layer cross-checks against each other.

#include <string>
#include <variant>
#include <vector>

#include "rindler/correlators.hpp"
#include "rindler/errors.hpp"
#include "rindler/numerics.hpp"
#include "rindler/spacetime.hpp"

namespace rindler::detector {

using rindler::numerics::cdouble;

// alpha(tau) = alpha0 (tau/tau0)^p e^{-tau/tau0}, tau > 0.
struct PowerExpKernel {
  double alpha0 = 1.0;
  double p = 1.0;
  double tau0 = 1.0;
};

// alpha(tau) = kappa e^{-gamma tau} sin(Omega tau).
struct DampedOscillatorKernel {
  double kappa = 1.0;
  double Omega = 1.0;
  double gamma = 1.0;
};

// Piecewise-linear table on an ascending grid starting at tau = 0. Values
// beyond the last node are not extrapolated.
struct TabulatedKernel {
  std::vector<double> tau;
  std::vector<double> alpha;
};

using ResponseKernel =
    std::variant<PowerExpKernel, DampedOscillatorKernel, TabulatedKernel>;

// Throws ConfigError when the kernel parameters violate their invariants.
void validate_kernel(const ResponseKernel& k);

double kernel_value(const ResponseKernel& k, double tau);

// One-sided transform int_0^inf alpha(tau) e^{i omega tau} dtau.
cdouble alpha_freq(const ResponseKernel& k, double omega);

// The transform continued onto the positive imaginary axis, alpha_freq(i s);
// real for real kernels, s >= 0.
double alpha_freq_imag_axis(const ResponseKernel& k, double s);

// Static response int_0^inf alpha(tau) dtau.
double alpha_static(const ResponseKernel& k);

// Dispersion consistency: the imaginary-axis value against the once-
// subtracted integral of the absorptive part.
struct KKCheck {
  double lhs;
  double rhs;
};
KKCheck kramers_kronig_check(const ResponseKernel& k, double p);

struct CouplingParams {
  double q = 1.0;  // coupling strength
  double a = 0.0;  // proper acceleration
};

struct ObservableResult {
  double value = 0.0;
  std::string route;
  double error_estimate = 0.0;
  // Constant separating this implementation from the published closed form
  // of the same quantity; 1.0 when they agree.
  double discrepancy_factor = 1.0;
};

// Absorbed power in the wedge vacuum: (q / pi) int alpha(tau) / tau dtau.
ObservableResult qdot_rindler(const ResponseKernel& k,
                              const CouplingParams& c);

// Absorbed power in the inertial vacuum, direct proper-time integral:
// (q a / 2 pi) int alpha(tau) (1 + 2 / (e^{a tau} - 1)) dtau.
ObservableResult qdot_inertial_time(const ResponseKernel& k,
                                    const CouplingParams& c);

// Same quantity through the frequency-domain series representation with
// n_terms image contributions resummed through the digamma function.
ObservableResult qdot_inertial_series(const ResponseKernel& k,
                                      const CouplingParams& c,
                                      int n_terms = 200);

// Published spectral form (q / pi) int Im alpha_freq(omega)
// coth(coth_argument omega / a) d omega at a caller-chosen argument factor.
ObservableResult qdot_inertial_spectral(const ResponseKernel& k,
                                        const CouplingParams& c,
                                        double coth_argument = 2.0);

// Argument factor that makes the published spectral form reproduce the
// proper-time route at this coupling.
double spectral_fit_coth_argument(const ResponseKernel& k,
                                  const CouplingParams& c);

// Published spectral form evaluated at the fitted argument factor.
ObservableResult qdot_inertial_spectral_fitted(const ResponseKernel& k,
                                               const CouplingParams& c);

// Exact decomposition of the proper-time route: static piece, a coth(pi
// omega / a) spectral piece, and a Matsubara sum with Euler-Maclaurin tail.
// Oracle for the spectral-fit discrepancy.
double qdot_inertial_decomposed(const ResponseKernel& k,
                                const CouplingParams& c,
                                int matsubara_terms = 64);

// Absorbed power assembled from the correlator module's regulated kernels.
ObservableResult qdot_general(const ResponseKernel& k,
                              const CouplingParams& c);

// Vacuum friction force, proper-time quadrature of two independently
// computed thermal factors whose difference is the flat-spectrum -1.
ObservableResult force_inertial(const ResponseKernel& k,
                                const CouplingParams& c);

// Closed form of the same force: -q a alpha_static / pi.
double force_inertial_closed(const ResponseKernel& k,
                             const CouplingParams& c);

// Wedge-vacuum force: right- and left-mover contributions integrated
// independently; the value is their measured cancellation.
ObservableResult force_rindler(const ResponseKernel& k,
                               const CouplingParams& c);

// Force assembled from the correlator module's mixed kernel.
ObservableResult force_general(const ResponseKernel& k,
                               const CouplingParams& c);

}  // namespace rindler::detector
