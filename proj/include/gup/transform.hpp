#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gup/spectral.hpp"

namespace gup {

/// Position-space probability density sampled on a symmetric uniform
/// grid x_j = x0 + j dx, together with a rigorous bound on the mass
/// outside the window (from the total variation of the band-limited
/// amplitude: |phi(x)| <= TV / (sqrt(2 pi) |x|)).
struct PositionDensity {
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<double> values;
    double tail_mass_bound = 0.0;

    double node(std::size_t j) const { return x0 + j * dx; }
    double x_max() const { return -x0; }

    /// Simpson mass of the windowed density.
    double mass() const;
    /// Simpson integral of x^order * density over the window.
    double moment(int order) const;
};

/// Fourier amplitudes phi(x) = (1/sqrt(2 pi)) sum_i exp(i k_i x) psi_i h
/// of a band-limited state at arbitrary positions (trapezoid in k; the
/// integrand vanishes at the band edges).
std::vector<std::complex<double>> position_amplitudes(
    const Wavefunction& state, const std::vector<double>& xs);

/// Windowed position density on [-x_max, x_max] with m samples
/// (m is rounded up to odd so Simpson applies).  Requires a normalized
/// state, m >= 128, and x_max below pi / spacing: the sampled transform
/// is periodic with period 2 pi / spacing, so wider windows would scoop
/// up alias replicas of the density instead of its tail.
PositionDensity to_position(const Wavefunction& state, double x_max, int m);

struct AdaptiveDensityOptions {
    double mass_tail = 1e-6;        ///< stop once 1 - mass <= this
    double divergence_growth = 0.05;///< second-moment growth flagging divergence
    int samples_per_period = 16;    ///< resolution relative to pi / k_max
    int max_mass_levels = 12;       ///< window doublings toward the mass target
    bool variance_stage = false;    ///< keep doubling until the second moment
                                    ///< is Cauchy within variance_rel
    double variance_rel = 1e-4;
    double variance_window_cap = 300.0;  ///< in units of the initial window
};

struct AdaptiveDensity {
    PositionDensity density;
    bool divergent = false;
    double mass = 0.0;
    int levels = 0;  ///< window doublings performed
};

/// Window-doubling driver: starts at x_max = 40 / k_max and doubles
/// until the Simpson mass reaches the target.  A window-to-window
/// second-moment growth above divergence_growth marks the density
/// variance-divergent.  With variance_stage set, doubling continues
/// until the second moment is Cauchy under doubling.  Running out of
/// room -- the configured window cap, or the alias-free half-period
/// pi / spacing of the k-grid -- before the stopping rule holds also
/// reports divergence: "could not certify at this sampling".
AdaptiveDensity adaptive_position_density(
    const Wavefunction& state, const AdaptiveDensityOptions& opts = {});

/// Position variance of a band-limited state, or nullopt when the
/// adaptive window flags divergence or cannot certify the second
/// moment inside this grid's alias-free range (slowly decaying tails
/// need a finer k-grid to widen that range).
std::optional<double> position_variance(const Wavefunction& state);

/// Particle-in-box basis mode sin(c_n (k + k_max)) / sqrt(k_max),
/// c_n = pi n / (2 k_max), sampled on the grid.  Exactly orthonormal
/// under the discrete weighted inner product.
Wavefunction box_mode(int mode_index, const Grid& grid);

/// Closed-form position amplitude of box mode n:
///   phi_n(x) = e^{-i k_max x} c_n (1 - (-1)^n e^{2 i k_max x})
///              / (sqrt(2 pi k_max) (c_n^2 - x^2)),
/// evaluated in a sinc-factored form that is exact through the
/// removable singularities at x = +-c_n.  Real and even for odd n,
/// imaginary and odd for even n.
std::complex<double> phi_box(int mode_index, double k_max, double x);

}  // namespace gup
