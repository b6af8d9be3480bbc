#include "gup/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gup/errors.hpp"

namespace gup {

double Wavefunction::norm_sq_weighted() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    return s * grid.spacing();
}

void Wavefunction::normalize() {
    const double n2 = norm_sq_weighted();
    if (!(n2 > 0.0)) throw domain_error("normalize: zero state");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : values) v *= inv;
}

Tridiagonal assemble_hamiltonian(const MomentumMap& map, double lambda,
                                 const Grid& grid) {
    if (grid.n < 16) throw validation_error("grid too coarse (n < 16)");
    Tridiagonal T;
    T.diag.resize(grid.n);
    T.offdiag.assign(grid.n - 1, 0.0);

    const double h = grid.spacing();
    const double kinetic = 2.0 * lambda / (h * h);
    const double hopping = -lambda / (h * h);

    // The potential grows toward the band edges; clip it at its value
    // on the innermost node so the matrix stays finite even when p(k)
    // blows up steeply near the cut-off.
    const double p_edge = map.p_of_k(grid.node(0));
    const double v_cap = (1.0 - lambda) * p_edge * p_edge;

    for (int i = 0; i < grid.n; ++i) {
        const double p = map.p_of_k(grid.node(i));
        const double v = std::min((1.0 - lambda) * p * p, v_cap);
        T.diag[i] = kinetic + v;
    }
    for (int i = 0; i + 1 < grid.n; ++i) T.offdiag[i] = hopping;
    return T;
}

int eigenvalues_below(const Tridiagonal& T, double sigma) {
    // LDL^T pivot signs; guarded against vanishing pivots.
    const std::size_t n = T.diag.size();
    int count = 0;
    double d = T.diag[0] - sigma;
    const double tiny = std::numeric_limits<double>::min() * 4.0;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(d) < tiny) d = (d < 0.0) ? -tiny : tiny;
        const double b = T.offdiag[i - 1];
        d = (T.diag[i] - sigma) - b * b / d;
        if (d < 0.0) ++count;
    }
    return count;
}

namespace {

// Solve (T - sigma I) x = b for tridiagonal T with partial pivoting.
// Plain Thomas elimination is unstable exactly where inverse iteration
// needs it (near-singular shifts), so rows are swapped on demand; the
// second superdiagonal fill-in is carried explicitly.
void shifted_solve(const Tridiagonal& T, double sigma, std::vector<double>& x) {
    const std::size_t n = T.diag.size();
    std::vector<double> a(n), b(n, 0.0), c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) a[i] = T.diag[i] - sigma;
    for (std::size_t i = 0; i + 1 < n; ++i) b[i] = T.offdiag[i];

    const double tiny = std::numeric_limits<double>::min() * 4.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double sub = T.offdiag[i];  // row i+1, column i
        if (std::abs(a[i]) >= std::abs(sub)) {
            if (std::abs(a[i]) < tiny) a[i] = (a[i] < 0.0) ? -tiny : tiny;
            const double m = sub / a[i];
            a[i + 1] -= m * b[i];
            if (i + 2 < n) b[i + 1] -= m * c[i];
            x[i + 1] -= m * x[i];
        } else {
            // Swap rows i and i+1.
            const double m = a[i] / sub;
            double ai = sub, bi = a[i + 1], ci = (i + 2 < n) ? b[i + 1] : 0.0;
            a[i + 1] = b[i] - m * bi;
            b[i + 1] = c[i] - m * ci;
            c[i + 1] = 0.0;
            a[i] = ai;
            b[i] = bi;
            c[i] = ci;
            std::swap(x[i], x[i + 1]);
            x[i + 1] -= m * x[i];
        }
    }
    // Back substitution.
    if (std::abs(a[n - 1]) < tiny) a[n - 1] = (a[n - 1] < 0.0) ? -tiny : tiny;
    x[n - 1] /= a[n - 1];
    if (n >= 2) {
        x[n - 2] = (x[n - 2] - b[n - 2] * x[n - 1]) / a[n - 2];
    }
    for (std::size_t ii = n; ii >= 3; --ii) {
        const std::size_t i = ii - 3;
        x[i] = (x[i] - b[i] * x[i + 1] - c[i] * x[i + 2]) / a[i];
    }
}

double rayleigh_quotient(const Tridiagonal& T, const std::vector<double>& v) {
    const std::size_t n = v.size();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double Tv = T.diag[i] * v[i];
        if (i > 0) Tv += T.offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) Tv += T.offdiag[i] * v[i + 1];
        num += v[i] * Tv;
        den += v[i] * v[i];
    }
    return num / den;
}

}  // namespace

EigenResult smallest_eigenpair(const Tridiagonal& T, double rel_tol) {
    const std::size_t n = T.diag.size();
    if (n == 0) throw validation_error("empty matrix");

    // Gershgorin bracket.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(T.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(T.offdiag[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }

    // Bisect for the smallest eigenvalue.
    int iters = 0;
    while (hi - lo > rel_tol * std::max(1.0, std::abs(lo) + std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (eigenvalues_below(T, mid) >= 1)
            hi = mid;
        else
            lo = mid;
        if (++iters > 200) throw solver_error("bisection stalled");
    }

    // Inverse iteration shifted just below the eigenvalue.
    EigenResult res;
    res.vector.assign(n, 1.0 / std::sqrt(double(n)));
    const double sigma = lo;
    for (int sweep = 0; sweep < 3; ++sweep) {
        shifted_solve(T, sigma, res.vector);
        double norm = 0.0;
        for (double v : res.vector) norm += v * v;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw solver_error("inverse iteration broke down");
        for (double& v : res.vector) v /= norm;
        ++iters;
    }
    res.eigenvalue = rayleigh_quotient(T, res.vector);
    res.iterations = iters;
    return res;
}

GroundState ground_state(const MomentumMap& map, double lambda,
                         const Grid& grid, double tol) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw domain_error("ground_state: lambda outside [0, 1]");
    if (!map.has_cutoff())
        throw domain_error("ground_state: modification has no cut-off");

    const Tridiagonal T = assemble_hamiltonian(map, lambda, grid);
    EigenResult pair = smallest_eigenpair(T, tol);

    // Second solve at halved spacing for the Richardson estimate.
    const Grid fine{grid.k_max, 2 * grid.n + 1};
    const Tridiagonal Tf = assemble_hamiltonian(map, lambda, fine);
    const EigenResult fine_pair = smallest_eigenpair(Tf, tol);

    GroundState gs;
    gs.lambda = lambda;
    gs.energy = pair.eigenvalue;
    gs.refinement_estimate =
        (4.0 * fine_pair.eigenvalue - pair.eigenvalue) / 3.0;
    gs.wavefunction.grid = grid;
    gs.wavefunction.values.resize(grid.n);

    // Fix the sign so the nodeless ground state is positive.
    const double center = pair.vector[grid.n / 2];
    const double flip = (center < 0.0) ? -1.0 : 1.0;
    for (int i = 0; i < grid.n; ++i)
        gs.wavefunction.values[i] = flip * pair.vector[i];
    gs.wavefunction.normalize();
    return gs;
}

Variances compute_variances(const GroundState& state, const MomentumMap& map) {
    const Grid& grid = state.wavefunction.grid;
    const auto& psi = state.wavefunction.values;
    const double h = grid.spacing();

    // Dirichlet quadratic form, including the two boundary edges where
    // the state vanishes.
    double dx = std::norm(psi.front()) + std::norm(psi.back());
    for (int i = 0; i + 1 < grid.n; ++i) dx += std::norm(psi[i + 1] - psi[i]);
    dx /= h;

    double dp = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double p = map.p_of_k(grid.node(i));
        dp += p * p * std::norm(psi[i]);
    }
    dp *= h;

    return {dx, dp};
}

}  // namespace gup
