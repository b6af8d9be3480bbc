#include <cmath>
#include <vector>

#include "doctest.h"
#include "gup/entropy.hpp"
#include "gup/errors.hpp"
#include "gup/sampler.hpp"
#include "gup/tradeoff.hpp"
#include "gup/transform.hpp"

using namespace gup;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

ScanConfig small_config(int states = 50) {
    ScanConfig cfg;
    cfg.map = build_momentum_map(Modification::kmm(1.0));
    cfg.state_count = states;
    cfg.mode_count = 12;
    cfg.seed = 42;
    return cfg;
}

ScanRecord make_record(int index, double h_x, double h_k, double dx,
                       double dp, bool divergent = false) {
    ScanRecord r;
    r.index = index;
    r.h_x = h_x;
    r.h_k = h_k;
    r.delta_x = dx;
    r.delta_p = dp;
    r.divergent_x = divergent;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// keyed random states
// ---------------------------------------------------------------------------

TEST_CASE("random states are reproducible in isolation") {
    const ScanConfig cfg = small_config();
    const Wavefunction a = random_state(cfg, 7);
    const Wavefunction b = random_state(cfg, 7);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        CHECK(a.values[i].real() == b.values[i].real());
        CHECK(a.values[i].imag() == b.values[i].imag());
    }
    CHECK(a.norm_sq_weighted() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("states differ across indices and seeds") {
    const ScanConfig cfg = small_config();
    ScanConfig reseeded = cfg;
    reseeded.seed = 43;
    const Wavefunction a = random_state(cfg, 0);
    const Wavefunction b = random_state(cfg, 1);
    const Wavefunction c = random_state(reseeded, 0);
    double ab = 0.0, ac = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        ab += std::abs(a.values[i] - b.values[i]);
        ac += std::abs(a.values[i] - c.values[i]);
    }
    CHECK(ab > 1e-3);
    CHECK(ac > 1e-3);
}

TEST_CASE("configuration is validated") {
    ScanConfig cfg = small_config();
    CHECK_THROWS_AS(random_state(cfg, -1), validation_error);
    CHECK_THROWS_AS(random_state(cfg, cfg.state_count), validation_error);
    cfg.mode_count = 0;
    CHECK_THROWS_AS(scan(cfg), validation_error);
    cfg.mode_count = 12;
    cfg.state_count = 0;
    CHECK_THROWS_AS(scan(cfg), validation_error);
    ScanConfig flat = cfg;
    flat.state_count = 5;
    flat.map = build_momentum_map(Modification::even_polynomial({}));
    CHECK_THROWS_AS(scan(flat), domain_error);
}

// ---------------------------------------------------------------------------
// scan records
// ---------------------------------------------------------------------------

TEST_CASE("a small scan respects every bound") {
    const ScanConfig cfg = small_config();
    const std::vector<ScanRecord> records = scan(cfg);
    REQUIRE(records.size() == 50);

    const double h_k_ceiling = std::log(2.0 * cfg.map.k_max);
    for (const ScanRecord& r : records) {
        CHECK(std::isfinite(r.h_k));
        CHECK(std::isfinite(r.h_x));
        CHECK(std::isfinite(r.delta_x));
        CHECK(std::isfinite(r.delta_p));
        CHECK(r.h_k <= h_k_ceiling + 1e-6);
        CHECK(r.delta_x * r.delta_p >= 0.25 * (1.0 - 1e-9));
        CHECK(r.delta_x >=
              suboptimal_bound(cfg.map.modification, r.delta_p) *
                  (1.0 - 1e-6));
    }

    const RegionReport rep = region_report(records, cfg.map);
    CHECK(rep.bb == 0);
    CHECK(rep.ceiling == 0);
    CHECK(rep.boundary == 0);
    CHECK(rep.heisenberg == 0);
    CHECK(rep.suboptimal == 0);
    CHECK(rep.curve_dominance == 0);
    CHECK(rep.divergent_fraction >= 0.0);
    CHECK(rep.divergent_fraction <= 1.0);

    REQUIRE(rep.hull.size() >= 1);
    for (std::size_t i = 1; i < rep.hull.size(); ++i) {
        CHECK(rep.hull[i][0] > rep.hull[i - 1][0]);   // delta_x increases
        CHECK(rep.hull[i][1] < rep.hull[i - 1][1]);   // delta_p decreases
    }
}

TEST_CASE("scan output is deterministic") {
    const ScanConfig cfg = small_config(20);
    const std::vector<ScanRecord> first = scan(cfg);
    const std::vector<ScanRecord> second = scan(cfg);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].h_x == second[i].h_x);
        CHECK(first[i].h_k == second[i].h_k);
        CHECK(first[i].delta_x == second[i].delta_x);
        CHECK(first[i].delta_p == second[i].delta_p);
        CHECK(first[i].divergent_x == second[i].divergent_x);
    }
}

TEST_CASE("scan quantities agree with the reference pipeline") {
    const ScanConfig cfg = small_config(8);
    const std::vector<ScanRecord> records = scan(cfg);

    for (int index : {0, 3}) {
        const ScanRecord& rec = records[static_cast<std::size_t>(index)];
        const Wavefunction state = random_state(cfg, index);

        // momentum entropy: same grid, independent accumulation
        CHECK(std::abs(rec.h_k - shannon_entropy_k(state)) < 1e-9);

        if (!rec.divergent_x) {
            // position variance: mode algebra vs windowed moments,
            // certified at a coarse Cauchy level that fits inside the
            // alias-free window of the scan grid
            AdaptiveDensityOptions vopts;
            vopts.variance_stage = true;
            vopts.variance_rel = 1e-2;
            const AdaptiveDensity vd = adaptive_position_density(state, vopts);
            REQUIRE_FALSE(vd.divergent);
            const double mu = vd.density.moment(1) / vd.mass;
            const double wvar = vd.density.moment(2) / vd.mass - mu * mu;
            CHECK(std::abs(rec.delta_x - wvar) <
                  5e-2 * std::max(1.0, rec.delta_x));
            // position entropy: shared ladder vs one-shot window
            const AdaptiveDensity den = adaptive_position_density(state);
            if (!den.divergent) {
                const EntropyEstimate est = shannon_entropy_x(den.density);
                CHECK(std::abs(rec.h_x - est.value) < 1e-3);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// region report counters
// ---------------------------------------------------------------------------

TEST_CASE("crafted records trip each counter once") {
    const MomentumMap map = build_momentum_map(Modification::kmm(1.0));
    std::vector<ScanRecord> records;
    // momentum entropy above the band ceiling
    records.push_back(make_record(0, 2.5, std::log(kPi) + 1.0, 1.0, 1.0));
    // product bound, suboptimal bound and optimal curve all undercut
    records.push_back(make_record(1, 2.5, 0.5, 0.1, 0.5));
    // entropic sum and family frontier undercut
    records.push_back(make_record(2, 0.5, 0.5, 1.0, 1.0));
    // divergent marker: position entropy is exempt, variances still count
    records.push_back(make_record(3, -100.0, 0.5, 2.0, 0.3, true));

    const RegionReport rep = region_report(records, map);
    CHECK(rep.ceiling == 1);
    CHECK(rep.heisenberg == 1);
    CHECK(rep.suboptimal == 1);
    CHECK(rep.curve_dominance == 1);
    CHECK(rep.bb == 1);
    CHECK(rep.boundary == 1);
    CHECK(rep.divergent_fraction == doctest::Approx(0.25).epsilon(1e-14));

    REQUIRE(rep.hull.size() == 2);
    CHECK(rep.hull[0][0] == doctest::Approx(0.1));
    CHECK(rep.hull[0][1] == doctest::Approx(0.5));
    CHECK(rep.hull[1][0] == doctest::Approx(2.0));
    CHECK(rep.hull[1][1] == doctest::Approx(0.3));
}

TEST_CASE("region report requires a cut-off") {
    const MomentumMap flat = build_momentum_map(Modification::even_polynomial({}));
    const std::vector<ScanRecord> records{make_record(0, 1.0, 1.0, 1.0, 1.0)};
    CHECK_THROWS_AS(region_report(records, flat), domain_error);
}
