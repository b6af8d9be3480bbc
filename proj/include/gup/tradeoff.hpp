#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gup/spectral.hpp"

namespace gup {

/// One point of the variance trade-off curve: u is the ground energy
/// of H_lambda = -lambda d^2/dk^2 + (1-lambda) p(k)^2, and delta_x,
/// delta_p are the variances of the minimizing state.
struct TradeoffPoint {
    double lambda = 0.0;
    double u = 0.0;
    double delta_x = 0.0;
    double delta_p = 0.0;
};

struct TradeoffCurve {
    Modification modification;
    std::vector<TradeoffPoint> points;  ///< ascending in lambda
};

struct SolverConfig {
    int n = 2047;        ///< coarsest grid; refinements use 2n+1, 4n+3
    double tol = 1e-8;   ///< eigenvalue bisection tolerance (relative)
    bool extrapolate = true;
};

/// Chebyshev-spaced lambda grid on [lambda_min, lambda_max], endpoints
/// included; clusters points near both ends where the curve bends.
std::vector<double> chebyshev_lambda_grid(int count, double lambda_min = 1e-3,
                                          double lambda_max = 1.0);

/// Sweep the trade-off curve for a modification with a finite cut-off.
/// Each lambda is solved on three nested grids (n, 2n+1, 4n+3) and the
/// (u, delta_x, delta_p) triple is extrapolated with weights
/// (1, -6, 8)/3, which cancels both the O(h) boundary-flux term of the
/// momentum-variance quadrature and the O(h^2) stencil error while
/// preserving the exact identity lambda dx + (1-lambda) dp = u.
TradeoffCurve sweep_tradeoff(const MomentumMap& map,
                             const std::vector<double>& lambdas,
                             const SolverConfig& cfg = {});

/// Analytic curve for the unmodified commutator (f == 1), where the
/// trade-off has the closed form u = sqrt(lambda(1-lambda)) and the
/// product delta_x delta_p = 1/4 everywhere.  At lambda = 1 the point
/// degenerates to (u, dx, dp) = (0, 0, inf).
std::vector<TradeoffPoint> heisenberg_curve(const std::vector<double>& lambdas);

/// Smallest position variance over the curve: pi^2 / (4 k_max^2).
/// Empty when the cut-off diverges (no minimal length).
std::optional<double> minimal_length_variance(const MomentumMap& map);

/// Closed-form point of the KMM curve, parameterized by the exponent
/// gamma of the cos^gamma ground-state family.  Requires gamma > 1/2;
/// at gamma <= 1/2 the position variance diverges.
struct KmmPoint {
    double gamma = 0.0;
    double lambda = 0.0;
    double u = 0.0;
    double delta_x = 0.0;
    double delta_p = 0.0;
};
KmmPoint kmm_analytic(double beta, double gamma);

/// State-independent lower bound on delta_x at a given momentum
/// variance: f(sqrt(delta_p))^2 / (4 delta_p).  Valid for every state;
/// touches the optimal curve only where the curve is exactly quadratic.
double suboptimal_bound(const Modification& mod, double delta_p);

/// KMM special case of the bound in closed form,
/// (1 + beta delta_p)^2 / (4 delta_p).
double kmm_variance_bound(double beta, double delta_p);

/// Lower-left convex boundary of a point cloud: the subset of hull
/// vertices no other hull point dominates (smaller in both
/// coordinates).  Input pairs are (delta_x, delta_p); the result is
/// ascending in x with strictly decreasing y.
std::vector<std::array<double, 2>> lower_convex_hull(
    std::vector<std::array<double, 2>> points);

}  // namespace gup
