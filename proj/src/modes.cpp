#include "rindler/modes.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

namespace rindler::modes {

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kI(0.0, 1.0);

double mode_norm(double freq) { return 1.0 / std::sqrt(2.0 * kPi * freq); }

void require_positive_freq(double f, const char* op) {
  if (!(f > 0.0)) {
    std::ostringstream os;
    os << op << " requires a positive frequency, got " << f;
    throw DomainError(os.str());
  }
}

// Shared composite-Simpson core. Fields are sampled once on the refined
// (2n-1 point) grid; the coarse sum reuses the even-index samples. coord()
// maps the uniform integration variable to the slice coordinate handed to
// the fields, measure() is the per-node weight of the slice measure.
struct KgOutcome {
  cdouble value;
  double disagreement;
  double edge_ratio;
};

KgOutcome kg_core(const SliceField& f, const SliceField& g, double lo,
                  double hi, int n,
                  const std::function<double(double)>& coord,
                  const std::function<double(double)>& measure) {
  if (n < 5) throw DomainError("slice grid needs at least 5 points");
  if (!(hi > lo)) throw DomainError("slice grid needs hi > lo");
  if (n % 2 == 0) ++n;
  const int m = 2 * n - 1;
  const double h = (hi - lo) / (m - 1);
  std::vector<cdouble> integrand(m);
  double peak = 0.0;
  for (int j = 0; j < m; ++j) {
    const double u = lo + h * j;
    const double x = coord(u);
    const cdouble fv = f.value(x), fd = f.d0(x);
    const cdouble gv = g.value(x), gd = g.d0(x);
    integrand[j] = (std::conj(fv) * gd - std::conj(fd) * gv) * measure(u);
    peak = std::max(peak, std::abs(integrand[j]));
  }
  auto simpson = [&](int stride) {
    const double hh = h * stride;
    cdouble s = integrand[0] + integrand[m - 1];
    for (int j = stride; j < m - 1; j += stride) {
      s += integrand[j] * ((j / stride) % 2 == 1 ? 4.0 : 2.0);
    }
    return s * (hh / 3.0);
  };
  const cdouble coarse = simpson(2);
  const cdouble fine = simpson(1);
  KgOutcome out;
  out.value = 0.5 * kI * fine;
  out.disagreement = 0.5 * std::abs(fine - coarse);
  const double edge =
      std::max(std::abs(integrand[0]), std::abs(integrand[m - 1]));
  out.edge_ratio = peak > 0.0 ? edge / peak : 0.0;
  return out;
}

}  // namespace

cdouble minkowski_mode(const ModeSpec& m, const spacetime::InertialPoint& x) {
  require_positive_freq(m.freq, "minkowski_mode");
  if (m.frame != Frame::Inertial) {
    throw DomainError("minkowski_mode expects an inertial-frame spec");
  }
  const double s = (m.direction == Direction::Right) ? x.x0 - x.x1
                                                     : x.x0 + x.x1;
  const double sgn = (m.sign == FreqSign::Minus) ? -1.0 : 1.0;
  return std::exp(kI * (sgn * m.freq * s)) * mode_norm(m.freq);
}

cdouble minkowski_mode_rindler_coords(const ModeSpec& m,
                                      const spacetime::WorldlineParams& p,
                                      const spacetime::RindlerPoint& r) {
  return minkowski_mode(m, spacetime::inertial_from_rindler(p, r));
}

cdouble rindler_mode(const ModeSpec& m, const spacetime::WorldlineParams& p,
                     const spacetime::RindlerPoint& r) {
  require_positive_freq(m.freq, "rindler_mode");
  if (m.frame != Frame::Rindler) {
    throw DomainError("rindler_mode expects a wedge-frame spec");
  }
  const double w = 1.0 + p.a * r.y;
  if (w == 0.0) throw HorizonPoint("mode evaluated on the horizon");
  if (w < 0.0) throw OutsideWedge("mode evaluated beyond the horizon");
  const double dir_sgn = (m.direction == Direction::Right) ? 1.0 : -1.0;
  const double t_sgn = (m.sign == FreqSign::Minus) ? -1.0 : 1.0;
  // Right/Minus is (1+ay)^{+i nu} e^{-i nu t}; the other cells follow by
  // flipping the direction factor, the frequency sign, or both.
  const double space_sgn = dir_sgn * (-t_sgn);
  const double phase = m.freq * (space_sgn * std::log(w) + t_sgn * r.t);
  return std::exp(kI * phase) * mode_norm(m.freq);
}

cdouble kg_inner_inertial(const SliceField& f, const SliceField& g,
                          const SliceGrid& grid, double tol) {
  const KgOutcome out =
      kg_core(f, g, grid.lo, grid.hi, grid.n, [](double u) { return u; },
              [](double) { return 1.0; });
  if (out.edge_ratio > 1e-3) {
    throw GridTooCoarse("slice window clips the integrand (edge ratio " +
                        std::to_string(out.edge_ratio) + ")");
  }
  if (out.disagreement > tol * std::max(1.0, std::abs(out.value))) {
    throw GridTooCoarse("Simpson refinement disagreement exceeds tolerance");
  }
  return out.value;
}

cdouble kg_inner_rindler(const SliceField& f, const SliceField& g,
                         const spacetime::WorldlineParams& p,
                         const SliceGrid& grid_xi, double tol) {
  if (!(p.a > 0.0)) throw DomainError("kg_inner_rindler requires a > 0");
  const KgOutcome out = kg_core(
      f, g, grid_xi.lo, grid_xi.hi, grid_xi.n,
      [&](double xi) { return spacetime::inverse_conformal_coordinate(p, xi); },
      [&](double) { return p.a; });
  if (out.edge_ratio > 1e-3) {
    throw HorizonClipping("wedge window clips the integrand (edge ratio " +
                          std::to_string(out.edge_ratio) + ")");
  }
  if (out.disagreement > tol * std::max(1.0, std::abs(out.value))) {
    throw GridTooCoarse("Simpson refinement disagreement exceeds tolerance");
  }
  return out.value;
}

SliceField conjugate_field(const SliceField& f) {
  SliceField out;
  out.value = [fn = f.value](double x) { return std::conj(fn(x)); };
  out.d0 = [fn = f.d0](double x) { return std::conj(fn(x)); };
  return out;
}

WavePacket::WavePacket(double center_, double width_, double support_cut_)
    : center(center_), width(width_), support_cut(support_cut_) {
  if (!(width > 0.0)) throw DomainError("packet width must be positive");
  if (!(support_cut >= 0.0)) {
    throw DomainError("packet support cut must be non-negative");
  }
  if (!(center - 3.0 * width > support_cut)) {
    throw DomainError(
        "packet violates center - 3 width > support_cut; the band would "
        "spill into non-positive frequencies");
  }
}

double WavePacket::amplitude(double nu) const {
  if (nu <= support_cut) return 0.0;
  // L2 mass removed by the cut is restored by the erfc factor, keeping the
  // packet exactly unit-normalized on (support_cut, infinity).
  const double renorm =
      std::sqrt(2.0 / std::erfc((support_cut - center) / width));
  const double gauss = std::pow(kPi * width * width, -0.25) *
                       std::exp(-(nu - center) * (nu - center) /
                                (2.0 * width * width));
  return renorm * gauss;
}

void WavePacket::band_nodes(int n, std::vector<double>& nu,
                            std::vector<double>& w) const {
  const double lo = std::max(support_cut, center - 9.0 * width);
  const double hi = center + 9.0 * width;
  numerics::gauss_legendre(n, lo, hi, nu, w);
}

namespace {

struct PacketQuad {
  std::vector<double> nu, glw, amp;
};

std::shared_ptr<PacketQuad> make_packet_quad(const WavePacket& packet,
                                             int n) {
  auto q = std::make_shared<PacketQuad>();
  packet.band_nodes(n, q->nu, q->glw);
  q->amp.resize(q->nu.size());
  for (std::size_t k = 0; k < q->nu.size(); ++k) {
    q->amp[k] = packet.amplitude(q->nu[k]);
  }
  return q;
}

}  // namespace

SliceField packet_field_inertial(const WavePacket& packet, Direction dir,
                                 double slice_x0, int quad_nodes) {
  auto q = make_packet_quad(packet, quad_nodes);
  const double dsgn = (dir == Direction::Right) ? -1.0 : 1.0;
  // Minus-family packet: sum_k A_k e^{-i nu_k (x0 -+ x1)} / sqrt(2 pi nu_k).
  auto eval = [q, dsgn, slice_x0](double x1, bool deriv) {
    const double s = slice_x0 + dsgn * x1;
    cdouble acc = 0.0;
    for (std::size_t k = 0; k < q->nu.size(); ++k) {
      const double nuk = q->nu[k];
      cdouble term = q->glw[k] * q->amp[k] * mode_norm(nuk) *
                     std::exp(cdouble(0.0, -nuk * s));
      if (deriv) term *= cdouble(0.0, -nuk);
      acc += term;
    }
    return acc;
  };
  SliceField f;
  f.value = [eval](double x) { return eval(x, false); };
  f.d0 = [eval](double x) { return eval(x, true); };
  return f;
}

SliceField packet_field_rindler(const WavePacket& packet,
                                const spacetime::WorldlineParams& p,
                                Direction dir, double slice_t,
                                int quad_nodes) {
  if (!(p.a > 0.0)) throw DomainError("packet_field_rindler requires a > 0");
  auto q = make_packet_quad(packet, quad_nodes);
  const double space_sgn = (dir == Direction::Right) ? 1.0 : -1.0;
  const double a = p.a;
  auto eval = [q, space_sgn, slice_t, a](double y, bool deriv) {
    const double w = 1.0 + a * y;
    if (w <= 0.0) throw OutsideWedge("packet evaluated beyond the horizon");
    const double z = std::log(w);
    cdouble acc = 0.0;
    for (std::size_t k = 0; k < q->nu.size(); ++k) {
      const double nuk = q->nu[k];
      cdouble term = q->glw[k] * q->amp[k] * mode_norm(nuk) *
                     std::exp(cdouble(0.0, nuk * (space_sgn * z - slice_t)));
      if (deriv) term *= cdouble(0.0, -nuk);
      acc += term;
    }
    return acc;
  };
  SliceField f;
  f.value = [eval](double y) { return eval(y, false); };
  f.d0 = [eval](double y) { return eval(y, true); };
  return f;
}

SliceField mode_field_inertial(const ModeSpec& m, double slice_x0) {
  const ModeSpec spec = m;
  SliceField f;
  f.value = [spec, slice_x0](double x1) {
    return minkowski_mode(spec, {slice_x0, x1});
  };
  const double fsgn = (m.sign == FreqSign::Minus) ? -1.0 : 1.0;
  f.d0 = [spec, slice_x0, fsgn](double x1) {
    return cdouble(0.0, fsgn * spec.freq) *
           minkowski_mode(spec, {slice_x0, x1});
  };
  return f;
}

SliceField mode_field_rindler(const ModeSpec& m,
                              const spacetime::WorldlineParams& p,
                              double slice_t) {
  const ModeSpec spec = m;
  const spacetime::WorldlineParams pp = p;
  SliceField f;
  f.value = [spec, pp, slice_t](double y) {
    return rindler_mode(spec, pp, {slice_t, y});
  };
  const double fsgn = (m.sign == FreqSign::Minus) ? -1.0 : 1.0;
  f.d0 = [spec, pp, slice_t, fsgn](double y) {
    return cdouble(0.0, fsgn * spec.freq) *
           rindler_mode(spec, pp, {slice_t, y});
  };
  return f;
}

BogolyubovPair bogolyubov_pair(double nu, double omega,
                               const spacetime::WorldlineParams& p,
                               BogolyubovVariant variant, Direction dir) {
  require_positive_freq(nu, "bogolyubov_pair");
  require_positive_freq(omega, "bogolyubov_pair");
  if (!(p.a > 0.0)) throw DomainError("bogolyubov_pair requires a > 0");
  const double a = p.a;
  // Everything is assembled in log space so the e^{+-pi nu/2} factors can
  // never overflow on their own.
  const cdouble log_gamma_inu =
      numerics::log_gamma(cdouble(1.0, nu)) - std::log(cdouble(0.0, nu));
  const double dphase = (dir == Direction::Right) ? 1.0 : -1.0;
  const cdouble lg =
      (dir == Direction::Right) ? log_gamma_inu : std::conj(log_gamma_inu);
  const cdouble log_nu_phase =
      cdouble(0.0, dphase * nu * std::log(a / omega));
  BogolyubovPair out;
  if (variant == BogolyubovVariant::Canonical) {
    const double log_pref =
        0.5 * std::log(nu) - std::log(2.0 * kPi) - 0.5 * std::log(omega);
    const cdouble base = log_pref + log_nu_phase + lg;
    out.beta = -std::exp(base - 0.5 * kPi * nu);
    out.alpha = std::exp(base + 0.5 * kPi * nu);
    return out;
  }
  const double log_pref = 0.5 * std::log(a * nu) - std::log(kPi) +
                          0.5 * std::log(a / omega);
  const cdouble base = log_pref + log_nu_phase + lg;
  if (variant == BogolyubovVariant::PublishedGrowing) {
    out.beta = std::exp(base + 0.5 * kPi * nu);
    out.alpha = std::exp(base - 0.5 * kPi * nu);
  } else {  // PublishedDecaying
    out.beta = std::exp(base - 0.5 * kPi * nu);
    out.alpha = std::exp(base + 0.5 * kPi * nu);
  }
  return out;
}

cdouble bogolyubov_beta(double nu, double omega,
                        const spacetime::WorldlineParams& p,
                        BogolyubovVariant variant) {
  return bogolyubov_pair(nu, omega, p, variant).beta;
}

double bogolyubov_alpha_abs(double nu, double omega,
                            const spacetime::WorldlineParams& p,
                            BogolyubovVariant variant) {
  return std::abs(bogolyubov_pair(nu, omega, p, variant).alpha);
}

namespace {

// Fourier transforms of the packet band entering the rotated-contour
// overlaps. Tm/Tp carry e^{-pi nu/2} (contour rotated into the upper half
// plane, beta-type), Um/Up carry e^{+pi nu/2} (lower half plane, alpha-type).
// The trailing m/p marks the nu^{-1/2} / nu^{+1/2} weight.
struct SliceTransforms {
  Eigen::ArrayXd z;
  Eigen::ArrayXd ez;
  Eigen::ArrayXcd Tm, Tp, Um, Up;
};

SliceTransforms build_transforms(const WavePacket& packet, double zeta_lo,
                                 double zeta_hi, double dz, int nu_nodes) {
  SliceTransforms tr;
  const int m = static_cast<int>(std::floor((zeta_hi - zeta_lo) / dz)) + 1;
  tr.z = Eigen::ArrayXd::LinSpaced(m, zeta_lo, zeta_lo + dz * (m - 1));
  tr.ez = tr.z.exp();
  tr.Tm = Eigen::ArrayXcd::Zero(m);
  tr.Tp = Eigen::ArrayXcd::Zero(m);
  tr.Um = Eigen::ArrayXcd::Zero(m);
  tr.Up = Eigen::ArrayXcd::Zero(m);
  std::vector<double> nu, glw;
  packet.band_nodes(nu_nodes, nu, glw);
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  for (int k = 0; k < nu_nodes; ++k) {
    const double nuk = nu[k];
    const double wk = glw[k] * packet.amplitude(nuk) * norm;
    if (wk == 0.0) continue;
    const double decay = std::exp(-0.5 * kPi * nuk);
    const double grow = std::exp(0.5 * kPi * nuk);
    const double r_m = wk / std::sqrt(nuk);
    const double r_p = wk * std::sqrt(nuk);
    const Eigen::ArrayXcd phase =
        (tr.z.cast<cdouble>() * cdouble(0.0, nuk)).exp();
    tr.Tm += (r_m * decay) * phase;
    tr.Tp += (r_p * decay) * phase;
    tr.Um += (r_m * grow) * phase;
    tr.Up += (r_p * grow) * phase;
  }
  return tr;
}

struct ExtractedRow {
  cdouble beta, alpha, cross;
};

ExtractedRow extract_at(const SliceTransforms& tr, double dz, double omega) {
  // Trapezoid over the log-coordinate grid; the e^{-omega e^z} damp factor
  // ends the sum long before the grid does.
  const int m = static_cast<int>(tr.z.size());
  cdouble sb = 0.0, sa = 0.0, sc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double xj = omega * tr.ez[j];
    if (xj > 745.0) break;
    const double damp = std::exp(-xj);
    const double wj = (j == 0 || j == m - 1) ? 0.5 : 1.0;
    sb += wj * damp * (xj * tr.Tm[j] + kI * tr.Tp[j]);
    sa += wj * damp * (xj * tr.Um[j] + kI * tr.Up[j]);
    sc += wj * damp * (kI * xj * tr.Um[j] + tr.Up[j]);
  }
  const double nw = mode_norm(omega) * dz;
  ExtractedRow row;
  row.beta = 0.5 * kI * nw * sb;
  row.alpha = -0.5 * kI * nw * sa;
  row.cross = 0.5 * nw * sc;
  return row;
}

void check_extraction_inputs(const WavePacket& packet,
                             const spacetime::WorldlineParams& p,
                             const ExtractionGrid& grid, const char* op) {
  if (std::abs(p.a - 1.0) > 1e-12) {
    throw DomainError(std::string(op) +
                      " is defined at a = 1, where the printed wedge modes "
                      "solve the wave equation");
  }
  const double need = 6.0 / packet.width;
  if (grid.zeta_hi < need || -grid.zeta_lo < need) {
    throw GridTooCoarse(
        "extraction window does not cover the packet transform; need "
        "|zeta| >= 6 / width on both sides");
  }
  if (!(grid.dz > 0.0) || grid.nu_nodes < 16) {
    throw DomainError(std::string(op) + ": degenerate extraction grid");
  }
}

}  // namespace

std::vector<MixingRow> bogolyubov_numeric(const WavePacket& packet,
                                          const spacetime::WorldlineParams& p,
                                          Direction dir,
                                          const std::vector<double>& omegas,
                                          const ExtractionGrid& grid) {
  check_extraction_inputs(packet, p, grid, "bogolyubov_numeric");
  if (omegas.empty()) throw DomainError("bogolyubov_numeric: empty omega list");
  for (double w : omegas) require_positive_freq(w, "bogolyubov_numeric");

  const SliceTransforms coarse = build_transforms(
      packet, grid.zeta_lo, grid.zeta_hi, grid.dz, grid.nu_nodes);
  const SliceTransforms fine =
      build_transforms(packet, grid.zeta_lo, grid.zeta_hi, grid.dz * 0.5,
                       (grid.nu_nodes * 3) / 2);

  std::vector<MixingRow> rows;
  rows.reserve(omegas.size());
  for (double w : omegas) {
    const ExtractedRow rc = extract_at(coarse, grid.dz, w);
    const ExtractedRow rf = extract_at(fine, grid.dz * 0.5, w);
    MixingRow row;
    row.omega = w;
    row.error_estimate =
        std::max(std::abs(rf.beta - rc.beta), std::abs(rf.alpha - rc.alpha));
    if (dir == Direction::Right) {
      row.alpha = rf.alpha;
      row.beta = rf.beta;
    } else {
      // The left-moving extraction mirrors the right one with conjugated
      // wedge phases; the coefficients conjugate accordingly.
      row.alpha = std::conj(rf.alpha);
      row.beta = std::conj(rf.beta);
    }
    rows.push_back(row);
  }
  return rows;
}

cdouble minkowski_self_mixing(const WavePacket& packet_omega, double omega,
                              const SliceGrid& grid) {
  require_positive_freq(omega, "minkowski_self_mixing");
  const SliceField pkt =
      packet_field_inertial(packet_omega, Direction::Right, 0.0);
  const ModeSpec u{Frame::Inertial, Direction::Right, FreqSign::Minus, omega};
  const SliceField ubar = conjugate_field(mode_field_inertial(u, 0.0));
  // beta-type overlap: -inner(conj(u_omega), packet); exactly zero because
  // both factors live on positive frequencies.
  return -kg_inner_inertial(ubar, pkt, grid);
}

cdouble cross_direction_mixing(const WavePacket& packet_nu, double omega,
                               const spacetime::WorldlineParams& p,
                               const ExtractionGrid& grid) {
  require_positive_freq(omega, "cross_direction_mixing");
  check_extraction_inputs(packet_nu, p, grid, "cross_direction_mixing");
  const SliceTransforms tr = build_transforms(
      packet_nu, grid.zeta_lo, grid.zeta_hi, grid.dz, grid.nu_nodes);
  return extract_at(tr, grid.dz, omega).cross;
}

double occupation_spectrum(double nu) {
  require_positive_freq(nu, "occupation_spectrum");
  const double x = 2.0 * kPi * nu;
  if (x > 700.0) return 0.0;
  return 1.0 / std::expm1(x);
}

namespace {

// omega-independent part of the chosen beta variant:
// beta(nu, omega) = c(nu) omega^{-1/2} e^{-i nu ln(omega/a)} (right-moving).
cdouble beta_band_coefficient(double nu, double a, BogolyubovVariant v) {
  const cdouble gamma_inu =
      std::exp(numerics::log_gamma(cdouble(1.0, nu))) / cdouble(0.0, nu);
  switch (v) {
    case BogolyubovVariant::Canonical:
      return -(std::sqrt(nu) / (2.0 * kPi)) * std::exp(-0.5 * kPi * nu) *
             gamma_inu;
    case BogolyubovVariant::PublishedDecaying:
      return (a * std::sqrt(nu) / kPi) * std::exp(-0.5 * kPi * nu) *
             gamma_inu;
    case BogolyubovVariant::PublishedGrowing:
      return (a * std::sqrt(nu) / kPi) * std::exp(0.5 * kPi * nu) * gamma_inu;
  }
  throw DomainError("unknown variant");
}

}  // namespace

SmearedNumber smeared_number_expectation(const WavePacket& packet,
                                         const spacetime::WorldlineParams& p,
                                         double omega_cut,
                                         BogolyubovVariant variant,
                                         Direction dir) {
  if (!(p.a > 0.0)) {
    throw DomainError("smeared_number_expectation requires a > 0");
  }
  if (!(omega_cut > 0.0)) {
    throw DomainError("smeared_number_expectation requires omega_cut > 0");
  }
  const double z_cut = std::log(omega_cut / p.a);
  const double sigma = packet.width;
  if (z_cut < 6.0 / sigma) {
    throw WindowTooNarrow(
        "omega_cut truncates the packet transform; need ln(omega_cut/a) >= "
        "6 / width");
  }

  const int nu_nodes = 600;
  std::vector<double> nu, glw;
  packet.band_nodes(nu_nodes, nu, glw);
  std::vector<cdouble> coef(nu.size());
  std::vector<double> amp(nu.size());
  double mean_occ = 0.0;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    amp[k] = packet.amplitude(nu[k]);
    coef[k] = beta_band_coefficient(nu[k], p.a, variant);
    // Left-moving coefficients conjugate the wedge phases, so the band
    // transform is the pointwise conjugate of the right-moving one.
    if (dir == Direction::Left) coef[k] = std::conj(coef[k]);
    mean_occ += glw[k] * amp[k] * amp[k] * occupation_spectrum(nu[k]);
  }
  const double dsgn = (dir == Direction::Right) ? -1.0 : 1.0;

  // N = integral over z < z_cut of |G(z)|^2, G the band transform of the
  // packet against the variant coefficient.
  const double z_lo = -10.0 / sigma;
  const double z_hi = std::min(z_cut, 10.0 / sigma);
  const int m = 4001;
  const double dz = (z_hi - z_lo) / (m - 1);
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    const double z = z_lo + dz * j;
    cdouble G = 0.0;
    for (std::size_t k = 0; k < nu.size(); ++k) {
      G += glw[k] * amp[k] * coef[k] *
           std::exp(cdouble(0.0, dsgn * nu[k] * z));
    }
    const double w = (j == 0 || j == m - 1) ? 0.5 : 1.0;
    total += w * std::norm(G);
  }
  total *= dz;

  SmearedNumber out;
  out.value = total;
  out.packet_mean_occupation = mean_occ;
  out.ratio_to_mean = total / mean_occ;
  return out;
}

NonequivalenceResult nonequivalence_diagnostic(
    double nu_lo, double nu_hi, double omega_min, double omega_cut,
    const spacetime::WorldlineParams& p, BogolyubovVariant variant) {
  if (!(nu_hi > nu_lo) || !(nu_lo > 0.0)) {
    throw DomainError("nonequivalence_diagnostic needs 0 < nu_lo < nu_hi");
  }
  if (!(omega_cut > omega_min) || !(omega_min > 0.0)) {
    throw DomainError(
        "nonequivalence_diagnostic needs 0 < omega_min < omega_cut");
  }
  std::vector<double> nu, glw;
  numerics::gauss_legendre(200, nu_lo, nu_hi, nu, glw);
  double band = 0.0;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    band += glw[k] * std::norm(beta_band_coefficient(nu[k], p.a, variant));
  }
  // |beta|^2 = |c(nu)|^2 / omega, so the omega window contributes exactly
  // one factor of ln(omega_cut / omega_min): logarithmic growth in the cut.
  NonequivalenceResult out;
  out.value = band * std::log(omega_cut / omega_min);
  out.slope_per_log = band;
  return out;
}

}  // namespace rindler::modes
