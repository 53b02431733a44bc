#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rindler/errors.hpp"
#include "rindler/numerics.hpp"
#include "rindler/spacetime.hpp"

namespace rindler::modes {

using numerics::cdouble;

enum class Frame { Inertial, Rindler };
enum class Direction { Right, Left };   // propagation direction
enum class FreqSign { Plus, Minus };    // Minus is the positive-norm family

struct ModeSpec {
  Frame frame = Frame::Inertial;
  Direction direction = Direction::Right;
  FreqSign sign = FreqSign::Minus;
  double freq = 1.0;  // omega (inertial) or nu (wedge), > 0
};

// Plane wave e^{-+ i omega (x0 -+ x1)} / sqrt(2 pi omega); the Minus sign
// label is the annihilation family, Right propagation depends on x0 - x1.
cdouble minkowski_mode(const ModeSpec& m, const spacetime::InertialPoint& x);

// Same mode evaluated through the wedge chart; must agree with
// minkowski_mode at the mapped point identically.
cdouble minkowski_mode_rindler_coords(const ModeSpec& m,
                                      const spacetime::WorldlineParams& p,
                                      const spacetime::RindlerPoint& r);

// Wedge mode (1 + a y)^{+- i nu} e^{-+ i nu t} / sqrt(2 pi nu); the
// propagation direction fixes the sign pairing between the two factors.
cdouble rindler_mode(const ModeSpec& m, const spacetime::WorldlineParams& p,
                     const spacetime::RindlerPoint& r);

// A field restricted to a constant-time slice: value and time derivative as
// functions of the slice coordinate (x1 for inertial slices, y for wedge
// slices).
struct SliceField {
  std::function<cdouble(double)> value;
  std::function<cdouble(double)> d0;
};

struct SliceGrid {
  double lo = -14.0;
  double hi = 14.0;
  int n = 4001;  // forced odd internally (composite Simpson)
};

// Klein-Gordon product (i/2) integral of [conj(f) d0 g - d0 conj(f) g] with
// the slice measure (dx1, or dy/(y + 1/a)). Conjugation sits on the first
// argument. Integration is composite Simpson at n and 2n points; a
// disagreement beyond tol raises GridTooCoarse, and integrand mass on the
// window edge raises GridTooCoarse / HorizonClipping.
cdouble kg_inner_inertial(const SliceField& f, const SliceField& g,
                          const SliceGrid& grid, double tol = 1e-6);
cdouble kg_inner_rindler(const SliceField& f, const SliceField& g,
                         const spacetime::WorldlineParams& p,
                         const SliceGrid& grid_xi, double tol = 1e-6);

SliceField conjugate_field(const SliceField& f);

// Gaussian frequency packet, L2-normalized over (support_cut, infinity).
// Invariant: center - 3 width > support_cut >= 0.
struct WavePacket {
  WavePacket(double center, double width, double support_cut = 0.0);
  double center;
  double width;
  double support_cut;
  double amplitude(double nu) const;  // 0 below the cut
  // Quadrature nodes covering the packet band (support_cut-aware).
  void band_nodes(int n, std::vector<double>& nu,
                  std::vector<double>& w) const;
};

// Slice fields for packets of annihilation-family modes.
SliceField packet_field_inertial(const WavePacket& packet, Direction dir,
                                 double slice_x0, int quad_nodes = 400);
SliceField packet_field_rindler(const WavePacket& packet,
                                const spacetime::WorldlineParams& p,
                                Direction dir, double slice_t,
                                int quad_nodes = 400);
// Single-mode slice fields.
SliceField mode_field_inertial(const ModeSpec& m, double slice_x0);
SliceField mode_field_rindler(const ModeSpec& m,
                              const spacetime::WorldlineParams& p,
                              double slice_t);

// Closed-form mixing coefficients between wedge frequency nu and inertial
// frequency omega.
//
// PublishedGrowing is the pair exactly as published: both coefficients
// carry (sqrt(a nu)/pi) (a/omega)^{i nu + 1/2} Gamma(i nu), the beta with
// the growing exponential e^{+pi nu/2} and the alpha with e^{-pi nu/2}.
// PublishedDecaying swaps the two
// exponentials (the thermally consistent assignment at the published
// normalization). Canonical is the delta-orthonormal slice-extraction
// result; it obeys |alpha|^2 - |beta|^2 = 1/(2 pi omega) and detailed
// balance |beta/alpha| = e^{-pi nu}.
enum class BogolyubovVariant { PublishedGrowing, PublishedDecaying, Canonical };

struct BogolyubovPair {
  cdouble alpha;
  cdouble beta;
};

BogolyubovPair bogolyubov_pair(
    double nu, double omega, const spacetime::WorldlineParams& p,
    BogolyubovVariant variant = BogolyubovVariant::PublishedGrowing,
    Direction dir = Direction::Right);
cdouble bogolyubov_beta(
    double nu, double omega, const spacetime::WorldlineParams& p,
    BogolyubovVariant variant = BogolyubovVariant::PublishedGrowing);
double bogolyubov_alpha_abs(
    double nu, double omega, const spacetime::WorldlineParams& p,
    BogolyubovVariant variant = BogolyubovVariant::PublishedGrowing);

// Grid used by the numeric extraction: the wedge slice coordinate is probed
// on ln(x) in [zeta_lo, zeta_hi] with spacing dz, the packet band with
// nu_nodes Gauss-Legendre nodes. The refinement pass (half dz, 3/2 nodes)
// feeds the per-row error estimate.
struct ExtractionGrid {
  double zeta_lo = -42.0;
  double zeta_hi = 42.0;
  double dz = 0.01;
  int nu_nodes = 900;
};

struct MixingRow {
  double omega;
  cdouble alpha;
  cdouble beta;
  double error_estimate;
};

// Numeric Bogolyubov coefficients of a wedge packet against inertial modes,
// from the slice Klein-Gordon overlaps evaluated on a rotated contour
// (the i-epsilon limit in closed form; Jordan sectors are checked by the
// packet's Gaussian band). Restricted to a = 1, where the printed wedge
// modes solve the wave equation. Normalization is Canonical by construction;
// comparisons against other variants must rescale.
std::vector<MixingRow> bogolyubov_numeric(const WavePacket& packet,
                                          const spacetime::WorldlineParams& p,
                                          Direction dir,
                                          const std::vector<double>& omegas,
                                          const ExtractionGrid& grid = {});

// Null checks. A Minkowski packet has no beta-type overlap with Minkowski
// modes (direct slice quadrature), and a right-moving wedge packet has no
// overlap of either type with left-moving Minkowski modes (the rotated
// representation cancels through Gamma(1 + i nu) = i nu Gamma(i nu)).
cdouble minkowski_self_mixing(const WavePacket& packet_omega, double omega,
                              const SliceGrid& grid);
cdouble cross_direction_mixing(const WavePacket& packet_nu, double omega,
                               const spacetime::WorldlineParams& p,
                               const ExtractionGrid& grid = {});

// Thermal occupation 1/(e^{2 pi nu} - 1) of wedge frequency nu.
double occupation_spectrum(double nu);

// Number expectation of a smeared wedge mode in the inertial vacuum,
// integrating |beta|^2 against the packet in the log-frequency variable up
// to ln(omega_cut / a). Throws WindowTooNarrow when the cut truncates the
// packet transform (needs ln(omega_cut/a) >= 6 / width).
struct SmearedNumber {
  double value;
  double packet_mean_occupation;  // band average of occupation_spectrum
  double ratio_to_mean;           // value / packet_mean_occupation
};
SmearedNumber smeared_number_expectation(
    const WavePacket& packet, const spacetime::WorldlineParams& p,
    double omega_cut,
    BogolyubovVariant variant = BogolyubovVariant::PublishedDecaying,
    Direction dir = Direction::Right);

// Integral of |beta|^2 over a wedge-frequency band and an inertial window
// [omega_min, omega_cut]; grows linearly in ln(omega_cut). slope_per_log is
// measured by an e-fold doubling of the cut.
struct NonequivalenceResult {
  double value;
  double slope_per_log;
};
NonequivalenceResult nonequivalence_diagnostic(
    double nu_lo, double nu_hi, double omega_min, double omega_cut,
    const spacetime::WorldlineParams& p,
    BogolyubovVariant variant = BogolyubovVariant::PublishedDecaying);

}  // namespace rindler::modes
