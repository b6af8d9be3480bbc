#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gup/entropy.hpp"
#include "gup/tradeoff.hpp"
#include "gup/transform.hpp"

namespace gup {

/// Configuration of a random-state scan of the uncertainty region.
struct ScanConfig {
    MomentumMap map;
    int state_count = 10000;
    int mode_count = 12;
    std::uint64_t seed = 42;
};

/// Deterministic keyed random state: complex Gaussian coefficients over
/// the first mode_count box modes, derived from (seed, index) through a
/// counter-based generator, so state i is reproducible in isolation.
Wavefunction random_state(const ScanConfig& cfg, int index);

struct ScanRecord {
    int index = 0;
    double h_x = 0.0;
    double h_k = 0.0;
    double delta_x = 0.0;
    double delta_p = 0.0;
    bool divergent_x = false;
};

/// Evaluate entropies and variances for state_count keyed random
/// states.  Records come back ordered by index regardless of
/// evaluation order.
std::vector<ScanRecord> scan(const ScanConfig& cfg);

/// Violation counts of every bound the scan can be checked against,
/// plus the lower convex hull of the (delta_x, delta_p) cloud.
/// Margins absorb the numerical tolerances of the solver and the
/// quadratures; see the fields' comments.
struct RegionReport {
    long bb = 0;              ///< h_x + h_k < log(pi e) - 1e-4
    long ceiling = 0;         ///< h_k > log(2 k_max) + 1e-6
    long boundary = 0;        ///< (h_x, h_k) below the family frontier - 5e-3
    long heisenberg = 0;      ///< dx * dp < 1/4 (relative margin 1e-9)
    long suboptimal = 0;      ///< dx below the f(sqrt(dp))^2/(4 dp) bound - 1e-6
    long curve_dominance = 0; ///< dx below the optimal curve at matched dp,
                              ///< beyond 1e-3 relative
    double divergent_fraction = 0.0;
    std::vector<std::array<double, 2>> hull;
};

RegionReport region_report(const std::vector<ScanRecord>& records,
                           const MomentumMap& map);

}  // namespace gup
