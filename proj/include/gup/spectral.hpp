#pragma once

#include <complex>
#include <vector>

#include "gup/momentum_map.hpp"

namespace gup {

/// Uniform interior grid on the band [-k_max, k_max]: n nodes
/// k_i = -k_max + (i+1) h with spacing h = 2 k_max / (n + 1), so both
/// band edges are Dirichlet boundary points, not nodes.
struct Grid {
    double k_max = 0.0;
    int n = 0;

    double spacing() const { return 2.0 * k_max / (n + 1); }
    double node(int i) const { return -k_max + (i + 1) * spacing(); }
};

/// Band-limited state sampled on a Grid, normalized so that
/// sum_i |psi_i|^2 h = 1.
struct Wavefunction {
    Grid grid;
    std::vector<std::complex<double>> values;

    double norm_sq_weighted() const;
    void normalize();
};

/// Ground state of the trade-off Hamiltonian at one lambda.
struct GroundState {
    double lambda = 0.0;
    double energy = 0.0;              ///< eigenvalue on the requested grid
    double refinement_estimate = 0.0; ///< Richardson value from n and 2n+1
    Wavefunction wavefunction;
};

/// Symmetric tridiagonal matrix: diag has n entries, offdiag n-1.
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag;
};

/// Discretize H = -lambda d^2/dk^2 + (1 - lambda) p(k)^2 with Dirichlet
/// walls at +-k_max: diag_i = 2 lambda / h^2 + V_i, offdiag = -lambda/h^2,
/// with the potential clipped at its value on the innermost node.
Tridiagonal assemble_hamiltonian(const MomentumMap& map, double lambda,
                                 const Grid& grid);

/// Number of eigenvalues strictly below sigma (Sturm count).
int eigenvalues_below(const Tridiagonal& T, double sigma);

struct EigenResult {
    double eigenvalue = 0.0;
    std::vector<double> vector;  ///< unit 2-norm
    int iterations = 0;
};

/// Smallest eigenvalue and eigenvector via Sturm bisection followed by
/// inverse iteration; the returned eigenvalue is the Rayleigh quotient
/// of the converged vector.
EigenResult smallest_eigenpair(const Tridiagonal& T, double rel_tol = 1e-8);

/// Ground state at the requested grid, with a Richardson refinement of
/// the energy obtained from a second solve at 2n+1 nodes (h -> h/2).
/// The wavefunction is real, positive at the band center, and
/// normalized in the weighted norm.
GroundState ground_state(const MomentumMap& map, double lambda,
                         const Grid& grid, double tol = 1e-8);

struct Variances {
    double delta_x = 0.0;
    double delta_p = 0.0;
};

/// Grid variances of the state: delta_x as the discrete Dirichlet form
/// sum |psi_{i+1} - psi_i|^2 / h (band edges count as zeros), which is
/// the exact quadratic form of the kinetic stencil, and delta_p as
/// sum p(k_i)^2 |psi_i|^2 h.  With these forms the identity
/// lambda delta_x + (1 - lambda) delta_p = energy holds to rounding.
Variances compute_variances(const GroundState& state, const MomentumMap& map);

}  // namespace gup
