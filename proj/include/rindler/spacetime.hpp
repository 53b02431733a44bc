#pragma once

#include <cmath>
#include <complex>

#include "rindler/errors.hpp"

namespace rindler::spacetime {

// Proper acceleration of the reference worldline. a = 0 is allowed only by
// operations that define an inertial limit; the chart maps require a > 0.
struct WorldlineParams {
  double a = 1.0;
};

struct InertialPoint {
  double x0 = 0.0;  // inertial time
  double x1 = 0.0;  // inertial position
};

struct RindlerPoint {
  double t = 0.0;  // wedge time
  double y = 0.0;  // distance from the reference worldline (y > -1/a)
};

// Position of the uniformly accelerated reference worldline at proper time
// tau: x0 = sinh(a tau)/a, x1 = cosh(a tau)/a.
InertialPoint worldline_point(const WorldlineParams& p, double tau);

// Chart maps between the right wedge x1 > |x0| and (t, y).
// x0 = (y + 1/a) sinh(a t), x1 = (y + 1/a) cosh(a t).
InertialPoint inertial_from_rindler(const WorldlineParams& p,
                                    const RindlerPoint& r);
// Throws OutsideWedge for points with x1 <= |x0| (left wedge, future/past
// cone) and HorizonPoint on the null boundary itself.
RindlerPoint rindler_from_inertial(const WorldlineParams& p,
                                   const InertialPoint& x);

// g_00 of ds^2 = (1+a y)^2 dt^2 - dy^2; throws at and beyond the horizon
// y <= -1/a.
double metric_factor(const WorldlineParams& p, double y);

// Tortoise-style coordinate xi with d xi = dy / (1 + a y); xi(0) = 0.
// The complex overload exists so derivatives can be probed by complex step.
double conformal_coordinate(const WorldlineParams& p, double y);
std::complex<double> conformal_coordinate(const WorldlineParams& p,
                                          std::complex<double> y);
double inverse_conformal_coordinate(const WorldlineParams& p, double xi);

}  // namespace rindler::spacetime
