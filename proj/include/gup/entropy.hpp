#pragma once

#include <optional>
#include <vector>

#include "gup/transform.hpp"

namespace gup {

/// Digamma function for positive argument (recurrence + asymptotic
/// series); exposed because the analytic momentum entropy needs it and
/// tests pin it against classic values.
double digamma(double x);

/// Differential entropy of the momentum-space density |psi(k)|^2,
/// -sum |psi|^2 log |psi|^2 h, in nats.  0 log 0 := 0.
double shannon_entropy_k(const Wavefunction& state);

/// The same entropy evaluated on the momentum side: amplitudes are
/// carried to p-coordinates through the map and integrated against the
/// deformed measure dp / f(p), whose cell weights are computed by
/// quadrature between half-node momenta.  Agrees with
/// shannon_entropy_k by the substitution identity.
double shannon_entropy_p(const Wavefunction& state, const MomentumMap& map);

struct EntropyEstimate {
    double value = 0.0;
    double error_estimate = 0.0;  ///< includes the tail-entropy bound
    bool warning = false;         ///< tail estimate exceeded 1e-3
};

/// Windowed position entropy -integral w log w dx (Simpson), with the
/// mass outside the window bounded through the band-limited decay
/// envelope and folded into the error estimate, not the value.
EntropyEstimate shannon_entropy_x(const PositionDensity& density);

/// Closed-form momentum entropy of the family psi ~ cos(sqrt(beta) k)^gamma:
/// h_k = log(sqrt(pi/beta) Gamma(gamma+1/2) / Gamma(gamma+1))
///       + gamma (psi0(gamma+1) - psi0(gamma+1/2)).
double analytic_hk(double beta, double gamma);

/// Independent check of analytic_hk: adaptive quadrature of the same
/// entropy integral, no special functions involved.
double family_hk_numeric(double beta, double gamma);

/// Position entropy of the family state, from the Gamma-function closed
/// form of its position density, integrated over a window that doubles
/// until the analytic tail-entropy estimate drops below tail_target
/// (the estimate itself is then added, so the returned value is the
/// converged integral, not a windowed one).  Valid for gamma >= 0;
/// gamma = 0 is the uniform state.
double family_hx(double beta, double gamma, double tail_target = 1e-4);

/// Momentum-space family state sampled on an n-node grid.
Wavefunction family_state(double beta, double gamma, int n);

/// Min-entropy -log(ess sup w) of a sampled density, with a parabolic
/// fit through the peak triple to recover maxima between nodes.
double min_entropy(const std::vector<double>& density);
double min_entropy(const PositionDensity& density);
double min_entropy_k(const Wavefunction& state);

/// Entropic minimal length -log(k_max / pi); empty when the cut-off
/// (and with it the minimal length) is absent.
std::optional<double> min_entropy_minlength(const MomentumMap& map);

/// Truncated Cauchy-Schwarz optimizer for the min-entropy minimal
/// length: the best position-peak density reachable with N box modes
/// is sum_{n<=N} |phi_n(0)|^2.  raw = -log of that partial sum;
/// refined extrapolates the partial sum's O(1/N) tail away first.
/// Both approach -log(k_max/pi) from above.
struct OptimizerEstimate {
    int modes = 0;
    double raw = 0.0;
    double refined = 0.0;
};
OptimizerEstimate min_entropy_optimizer(double k_max, int modes);

/// Momentum-entropy ceiling and the induced position-entropy floor:
/// (log(2 k_max), 1 - log(2 k_max / pi)).  Infinite cut-off flags the
/// pair as (+inf, -inf).
struct EntropicBounds {
    double h_p_max = 0.0;
    double h_x_lower = 0.0;
    bool finite = false;
};
EntropicBounds entropic_bounds(const MomentumMap& map);

/// Minimize the family position entropy over a gamma grid (KMM only;
/// the family is specific to that modification).  The reported minimum
/// is conjectured, not proven, to bound all states.
struct MinlengthEstimate {
    double gamma_star = 0.0;
    double h_x_min = 0.0;
};
MinlengthEstimate shannon_minlength_estimate(const MomentumMap& map,
                                             const std::vector<double>& gammas);

}  // namespace gup
