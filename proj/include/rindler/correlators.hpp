#pragma once

// Vacuum two-point correlators along the uniformly accelerated worldline,
// built from regulated half-line frequency integrals with the regulator
// removed by polynomial extrapolation. Each correlator is a distributional
// boundary value; the extrapolation residual is the honest error bar.

#include <vector>

#include "rindler/errors.hpp"
#include "rindler/numerics.hpp"
#include "rindler/spacetime.hpp"

namespace rindler::correlators {

using rindler::numerics::cdouble;

struct CorrelatorConfig {
  // eta values for the regulator schedule; each integral term uses
  // eps_j = eta_j * |s| for its own phase scale s. Must be positive and
  // strictly decreasing, at least 3 entries.
  std::vector<double> eps_schedule{0.1,     0.05,    0.025,
                                   0.0125,  0.00625, 0.003125};
  // worldline-time offset used to re-verify stationarity of the inertial
  // correlators, and the allowed absolute drift.
  double t_check_shift = 0.7;
  double t_residual_tol = 1e-8;
};

// int_0^inf e^{i omega s - eps omega} d omega, eps > 0.
cdouble regulated_phase_integral(double s, double eps);

// Time-derivative correlator of the inertial vacuum at proper-time
// separation tau, evaluated at worldline time t. Stationary in t; the
// closed form it must reproduce is -(a / 2 pi) coth(a tau / 2).
double inertial_correlator_dt(double tau, double t,
                              const spacetime::WorldlineParams& p,
                              const CorrelatorConfig& cfg = {});

// Same object for the wedge vacuum: -1 / (pi tau), independent of a.
double rindler_correlator_dt(double tau, const CorrelatorConfig& cfg = {});

// Mixed time-space correlator of the inertial vacuum: the constant
// a / (2 pi), independent of tau and t.
double inertial_correlator_dy(double tau, double t,
                              const spacetime::WorldlineParams& p,
                              const CorrelatorConfig& cfg = {});

// The wedge-vacuum mixed correlator separates into right- and left-mover
// contributions that cancel identically. Both are extrapolated
// independently so the cancellation is a measurement, not an assumption.
struct WedgeMixedTerms {
  double right_mover;
  double left_mover;
};
WedgeMixedTerms rindler_correlator_dy_terms(double tau,
                                            const spacetime::WorldlineParams& p,
                                            const CorrelatorConfig& cfg = {});

}  // namespace rindler::correlators
