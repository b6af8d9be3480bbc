#include "gup/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gup/errors.hpp"

namespace gup {

std::vector<double> chebyshev_lambda_grid(int count, double lambda_min,
                                          double lambda_max) {
    if (count < 2) throw validation_error("lambda grid needs at least 2 points");
    if (!(lambda_min > 0.0 && lambda_min < lambda_max && lambda_max <= 1.0))
        throw validation_error("lambda grid bounds must satisfy 0 < min < max <= 1");
    std::vector<double> grid(count);
    const double mid = 0.5 * (lambda_min + lambda_max);
    const double half = 0.5 * (lambda_max - lambda_min);
    const double pi = std::acos(-1.0);
    for (int j = 0; j < count; ++j)
        grid[j] = mid - half * std::cos(pi * j / (count - 1));
    grid.front() = lambda_min;
    grid.back() = lambda_max;
    return grid;
}

namespace {

struct GridSolve {
    double energy;
    double dx;
    double dp;
};

// Solve one lambda on one grid with the node momenta squared already
// tabulated; returns the Rayleigh energy and the discrete variances.
GridSolve solve_on_grid(double lambda, const Grid& grid,
                        const std::vector<double>& p_sq, double tol) {
    const double h = grid.spacing();
    Tridiagonal T;
    T.diag.resize(grid.n);
    T.offdiag.assign(grid.n - 1, -lambda / (h * h));
    const double kinetic = 2.0 * lambda / (h * h);
    const double v_cap = (1.0 - lambda) * p_sq.front();
    for (int i = 0; i < grid.n; ++i)
        T.diag[i] = kinetic + std::min((1.0 - lambda) * p_sq[i], v_cap);

    const EigenResult pair = smallest_eigenpair(T, tol);

    double nrm = 0.0;
    for (double v : pair.vector) nrm += v * v;
    nrm *= h;

    double dx = pair.vector.front() * pair.vector.front() +
                pair.vector.back() * pair.vector.back();
    for (int i = 0; i + 1 < grid.n; ++i) {
        const double d = pair.vector[i + 1] - pair.vector[i];
        dx += d * d;
    }
    dx /= h * nrm;

    double dp = 0.0;
    for (int i = 0; i < grid.n; ++i)
        dp += p_sq[i] * pair.vector[i] * pair.vector[i];
    dp *= h / nrm;

    return {pair.eigenvalue, dx, dp};
}

}  // namespace

TradeoffCurve sweep_tradeoff(const MomentumMap& map,
                             const std::vector<double>& lambdas,
                             const SolverConfig& cfg) {
    if (!map.has_cutoff())
        throw domain_error(
            "sweep_tradeoff: no cut-off; use heisenberg_curve for f == 1");
    if (cfg.n < 16) throw validation_error("sweep_tradeoff: n too small");

    const int levels = cfg.extrapolate ? 3 : 1;
    std::vector<Grid> grids;
    std::vector<std::vector<double>> p_sq(levels);
    int n = cfg.n;
    for (int l = 0; l < levels; ++l) {
        grids.push_back(Grid{map.k_max, n});
        p_sq[l].resize(n);
        for (int i = 0; i < n; ++i) {
            const double p = map.p_of_k(grids[l].node(i));
            p_sq[l][i] = p * p;
        }
        n = 2 * n + 1;
    }

    TradeoffCurve curve;
    curve.modification = map.modification;
    curve.points.reserve(lambdas.size());

    for (double lambda : lambdas) {
        if (!(lambda >= 0.0 && lambda <= 1.0))
            throw domain_error("sweep_tradeoff: lambda outside [0, 1]");
        GridSolve s[3];
        for (int l = 0; l < levels; ++l)
            s[l] = solve_on_grid(lambda, grids[l], p_sq[l], cfg.tol);

        TradeoffPoint pt;
        pt.lambda = lambda;
        if (cfg.extrapolate) {
            // Affine weights (1, -6, 8)/3 across h, h/2, h/4 cancel the
            // first- and second-order error terms jointly for all three
            // observables, keeping their linear identity intact.
            pt.u = (s[0].energy - 6.0 * s[1].energy + 8.0 * s[2].energy) / 3.0;
            pt.delta_x = (s[0].dx - 6.0 * s[1].dx + 8.0 * s[2].dx) / 3.0;
            pt.delta_p = (s[0].dp - 6.0 * s[1].dp + 8.0 * s[2].dp) / 3.0;
        } else {
            pt.u = s[0].energy;
            pt.delta_x = s[0].dx;
            pt.delta_p = s[0].dp;
        }
        curve.points.push_back(pt);
    }
    return curve;
}

std::vector<TradeoffPoint> heisenberg_curve(const std::vector<double>& lambdas) {
    std::vector<TradeoffPoint> pts;
    pts.reserve(lambdas.size());
    for (double lambda : lambdas) {
        if (!(lambda >= 0.0 && lambda <= 1.0))
            throw domain_error("heisenberg_curve: lambda outside [0, 1]");
        TradeoffPoint pt;
        pt.lambda = lambda;
        if (lambda == 1.0) {
            pt.u = 0.0;
            pt.delta_x = 0.0;
            pt.delta_p = std::numeric_limits<double>::infinity();
        } else {
            pt.u = std::sqrt(lambda * (1.0 - lambda));
            pt.delta_x = 0.5 * std::sqrt((1.0 - lambda) / lambda);
            pt.delta_p = 0.5 * std::sqrt(lambda / (1.0 - lambda));
        }
        pts.push_back(pt);
    }
    return pts;
}

std::optional<double> minimal_length_variance(const MomentumMap& map) {
    if (!map.has_cutoff()) return std::nullopt;
    const double pi = std::acos(-1.0);
    return pi * pi / (4.0 * map.k_max * map.k_max);
}

KmmPoint kmm_analytic(double beta, double gamma) {
    if (!(beta > 0.0)) throw validation_error("kmm_analytic: beta must be positive");
    if (!(gamma > 0.5))
        throw domain_error(
            "kmm_analytic: position variance diverges for gamma <= 1/2");
    KmmPoint pt;
    pt.gamma = gamma;
    pt.lambda = 1.0 / (1.0 + beta * beta * gamma * (gamma - 1.0));
    pt.u = pt.lambda * beta * gamma;
    pt.delta_x = beta * gamma * gamma / (2.0 * gamma - 1.0);
    pt.delta_p = 1.0 / (beta * (2.0 * gamma - 1.0));
    return pt;
}

double suboptimal_bound(const Modification& mod, double delta_p) {
    if (!(delta_p > 0.0))
        throw domain_error("suboptimal_bound: delta_p must be positive");
    if (std::isinf(delta_p)) return 0.0;
    const double g = mod.f(std::sqrt(delta_p));
    return g * g / (4.0 * delta_p);
}

double kmm_variance_bound(double beta, double delta_p) {
    if (!(delta_p > 0.0))
        throw domain_error("kmm_variance_bound: delta_p must be positive");
    if (std::isinf(delta_p)) return 0.0;
    const double g = 1.0 + beta * delta_p;
    return g * g / (4.0 * delta_p);
}

std::vector<std::array<double, 2>> lower_convex_hull(
    std::vector<std::array<double, 2>> points) {
    // Drop non-finite points; they cannot bound anything from below.
    points.erase(std::remove_if(points.begin(), points.end(),
                                [](const std::array<double, 2>& p) {
                                    return !std::isfinite(p[0]) ||
                                           !std::isfinite(p[1]);
                                }),
                 points.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 1) return points;

    // Andrew's monotone chain, lower hull only.
    std::vector<std::array<double, 2>> hull;
    for (const auto& p : points) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            const double cross = (b[0] - a[0]) * (p[1] - a[1]) -
                                 (b[1] - a[1]) * (p[0] - a[0]);
            if (cross <= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    // Keep the dominance-minimal face: ascending x, strictly falling y.
    std::vector<std::array<double, 2>> face;
    for (const auto& p : hull) {
        if (face.empty() || p[1] < face.back()[1]) face.push_back(p);
    }
    return face;
}

}  // namespace gup
