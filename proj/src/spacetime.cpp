#include "rindler/spacetime.hpp"

#include <cmath>
#include <sstream>

namespace rindler::spacetime {

namespace {

void require_accelerated(const WorldlineParams& p, const char* op) {
  if (!(p.a > 0.0)) {
    std::ostringstream os;
    os << op << " requires a > 0, got a = " << p.a;
    throw DomainError(os.str());
  }
}

}  // namespace

InertialPoint worldline_point(const WorldlineParams& p, double tau) {
  require_accelerated(p, "worldline_point");
  return InertialPoint{std::sinh(p.a * tau) / p.a, std::cosh(p.a * tau) / p.a};
}

InertialPoint inertial_from_rindler(const WorldlineParams& p,
                                    const RindlerPoint& r) {
  require_accelerated(p, "inertial_from_rindler");
  const double rho = r.y + 1.0 / p.a;
  if (rho == 0.0) throw HorizonPoint("y = -1/a is the horizon");
  if (rho < 0.0) throw OutsideWedge("y < -1/a leaves the wedge");
  return InertialPoint{rho * std::sinh(p.a * r.t), rho * std::cosh(p.a * r.t)};
}

RindlerPoint rindler_from_inertial(const WorldlineParams& p,
                                   const InertialPoint& x) {
  require_accelerated(p, "rindler_from_inertial");
  const double d = (x.x1 - x.x0) * (x.x1 + x.x0);  // x1^2 - x0^2, stably
  const double scale = x.x0 * x.x0 + x.x1 * x.x1;
  if (!(d > 0.0) || x.x1 <= 0.0 || d <= 1e-14 * scale) {
    if (std::abs(d) <= 1e-14 * scale && x.x1 > 0.0) {
      throw HorizonPoint("point lies on the null boundary of the wedge");
    }
    throw OutsideWedge("point is not inside the right wedge x1 > |x0|");
  }
  const double rho = std::sqrt(d);
  return RindlerPoint{std::atanh(x.x0 / x.x1) / p.a, rho - 1.0 / p.a};
}

double metric_factor(const WorldlineParams& p, double y) {
  require_accelerated(p, "metric_factor");
  const double w = 1.0 + p.a * y;
  if (w == 0.0) throw HorizonPoint("metric degenerates at y = -1/a");
  if (w < 0.0) throw OutsideWedge("y < -1/a leaves the wedge");
  return w * w;
}

double conformal_coordinate(const WorldlineParams& p, double y) {
  if (p.a == 0.0) return y;
  require_accelerated(p, "conformal_coordinate");
  const double w = 1.0 + p.a * y;
  if (w == 0.0) throw HorizonPoint("conformal map diverges at y = -1/a");
  if (w < 0.0) throw OutsideWedge("y < -1/a leaves the wedge");
  // log1p keeps the small-a (and small-y) limit xi -> y exact.
  return std::log1p(p.a * y) / p.a;
}

std::complex<double> conformal_coordinate(const WorldlineParams& p,
                                          std::complex<double> y) {
  if (p.a == 0.0) return y;
  require_accelerated(p, "conformal_coordinate");
  const std::complex<double> w = 1.0 + p.a * y;
  if (w.real() <= 0.0 && w.imag() == 0.0) {
    throw OutsideWedge("y <= -1/a leaves the wedge");
  }
  return std::log(w) / p.a;
}

double inverse_conformal_coordinate(const WorldlineParams& p, double xi) {
  if (p.a == 0.0) return xi;
  require_accelerated(p, "inverse_conformal_coordinate");
  return std::expm1(p.a * xi) / p.a;
}

}  // namespace rindler::spacetime
