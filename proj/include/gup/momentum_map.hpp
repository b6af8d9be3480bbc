#pragma once

#include <vector>

#include "gup/modification.hpp"

namespace gup {

/// Momentum cut-off k_max = integral of dp / f(p) over the positive
/// half-line.  Returns +infinity when the integral diverges (detected
/// by probing doubling tail windows up to p = 1e12 / sqrt(beta)).
/// Throws accuracy_error if the requested tolerance cannot be
/// certified within the quadrature budget.
double compute_kmax(const Modification& mod, double tol = 1e-12);

/// Tabulated, invertible map between wavenumber k and momentum p for
/// one modification, built from k(p) = integral_0^p dp'/f(p').
///
/// The table anchors a log-spaced set of momenta; evaluation between
/// anchors re-integrates from the nearest anchor and polishes with
/// safeguarded Newton (F'(p) = 1/f(p) is known in closed form), so the
/// round-trip residual is held below inversion_tolerance rather than
/// depending on interpolation quality.
struct MomentumMap {
    Modification modification;
    double k_max = 0.0;
    std::vector<double> p_table;  ///< anchor momenta, ascending, p_table[0] = 0
    std::vector<double> k_table;  ///< k(p_table[j]), same length
    double inversion_tolerance = 1e-12;

    bool has_cutoff() const;

    /// p(k).  Odd in k; throws domain_error for |k| >= k_max.
    double p_of_k(double k) const;

    /// k(p).  Odd in p; |k(p)| < k_max for all finite p.
    double k_of_p(double p) const;
};

MomentumMap build_momentum_map(const Modification& mod, double tol = 1e-12);

}  // namespace gup
