#include "rindler/correlators.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace rindler::correlators {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kI(0.0, 1.0);

void validate_schedule(const CorrelatorConfig& cfg) {
  const auto& s = cfg.eps_schedule;
  if (s.size() < 3) {
    throw ConfigError("regulator schedule needs at least 3 entries");
  }
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!(s[j] > 0.0)) throw ConfigError("regulator entries must be positive");
    if (j > 0 && !(s[j] < s[j - 1])) {
      throw ConfigError("regulator schedule must be strictly decreasing");
    }
  }
}

// Extrapolate a regulated combination to eta -> 0. eval(eta) assembles the
// full combination with every term regulated at eps = eta * |s_term|.
double limit_of(const CorrelatorConfig& cfg,
                const std::function<cdouble(double)>& eval) {
  std::vector<double> xs;
  std::vector<cdouble> ys;
  xs.reserve(cfg.eps_schedule.size());
  ys.reserve(cfg.eps_schedule.size());
  for (double eta : cfg.eps_schedule) {
    xs.push_back(eta);
    ys.push_back(eval(eta));
  }
  const auto [value, last_step] = numerics::neville_to_zero(xs, ys);
  // The limit of these combinations is real; a surviving imaginary part
  // means the regulator did not cancel and the value cannot be trusted.
  const double scale = std::max(1.0, std::abs(value));
  if (std::abs(value.imag()) > 1e-7 * scale + 10.0 * last_step) {
    throw ExtrapolationDiverged(
        "imaginary part survives the regulator limit");
  }
  return value.real();
}

void require_separation(double tau) {
  if (tau == 0.0 || !std::isfinite(tau)) {
    throw DomainError("correlator needs a nonzero finite separation");
  }
}

void require_accel(const spacetime::WorldlineParams& p) {
  if (!(p.a > 0.0)) throw DomainError("correlator needs a > 0");
}

// Null-chart separations between worldline points tau apart, evaluated at
// worldline time t. s1 carries the retarded branch, s2 the advanced one.
struct NullSeparations {
  double s1, s2;
};
NullSeparations null_separations(double tau, double t, double a) {
  NullSeparations s;
  s.s1 = std::exp(-a * t) * std::expm1(a * tau) / a;
  s.s2 = std::exp(a * t) * (-std::expm1(-a * tau)) / a;
  return s;
}

// exp(w) * regulated phase integral at separation s. Once expm1 overflows
// the separation, the product is below machine precision; its exact limit
// for s -> +-inf is zero.
cdouble weighted_term(double w, double s, double eta) {
  if (!std::isfinite(s)) return cdouble(0.0, 0.0);
  return std::exp(w) * regulated_phase_integral(s, eta * std::abs(s));
}

}  // namespace

cdouble regulated_phase_integral(double s, double eps) {
  if (!(eps > 0.0)) {
    throw DomainError("regulated_phase_integral needs eps > 0");
  }
  return 1.0 / cdouble(eps, -s);
}

double inertial_correlator_dt(double tau, double t,
                              const spacetime::WorldlineParams& p,
                              const CorrelatorConfig& cfg) {
  validate_schedule(cfg);
  require_separation(tau);
  require_accel(p);
  const double a = p.a;
  auto at = [&](double tt) {
    const NullSeparations s = null_separations(tau, tt, a);
    return limit_of(cfg, [&](double eta) {
      return (kI / (2.0 * kPi)) * (weighted_term(-a * tt, s.s1, eta) +
                                   weighted_term(a * tt, s.s2, eta));
    });
  };
  const double here = at(t);
  const double shifted = at(t + cfg.t_check_shift);
  if (std::abs(here - shifted) >
      cfg.t_residual_tol * std::max(1.0, std::abs(here))) {
    throw TDependenceResidual(
        "inertial correlator drifts with worldline time");
  }
  return here;
}

double rindler_correlator_dt(double tau, const CorrelatorConfig& cfg) {
  validate_schedule(cfg);
  require_separation(tau);
  return limit_of(cfg, [&](double eta) {
    return (kI / kPi) *
           regulated_phase_integral(tau, eta * std::abs(tau));
  });
}

double inertial_correlator_dy(double tau, double t,
                              const spacetime::WorldlineParams& p,
                              const CorrelatorConfig& cfg) {
  validate_schedule(cfg);
  require_separation(tau);
  require_accel(p);
  const double a = p.a;
  auto at = [&](double tt) {
    const NullSeparations s = null_separations(tau, tt, a);
    return limit_of(cfg, [&](double eta) {
      return (kI / (2.0 * kPi)) * (weighted_term(-a * tt, s.s1, eta) -
                                   weighted_term(a * tt, s.s2, eta));
    });
  };
  const double here = at(t);
  const double shifted = at(t + cfg.t_check_shift);
  if (std::abs(here - shifted) >
      cfg.t_residual_tol * std::max(1.0, std::abs(here))) {
    throw TDependenceResidual(
        "inertial mixed correlator drifts with worldline time");
  }
  return here;
}

WedgeMixedTerms rindler_correlator_dy_terms(double tau,
                                            const spacetime::WorldlineParams& p,
                                            const CorrelatorConfig& cfg) {
  validate_schedule(cfg);
  require_separation(tau);
  require_accel(p);
  const double a = p.a;
  WedgeMixedTerms out;
  out.right_mover = limit_of(cfg, [&](double eta) {
    return (-kI * a / (2.0 * kPi)) *
           regulated_phase_integral(tau, eta * std::abs(tau));
  });
  out.left_mover = limit_of(cfg, [&](double eta) {
    return (kI * a / (2.0 * kPi)) *
           regulated_phase_integral(tau, eta * std::abs(tau));
  });
  return out;
}

}  // namespace rindler::correlators
