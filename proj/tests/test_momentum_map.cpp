#include <cmath>

#include "doctest.h"
#include "gup/errors.hpp"
#include "gup/momentum_map.hpp"

using namespace gup;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

// ---------------------------------------------------------------------------
// cut-off values
// ---------------------------------------------------------------------------

TEST_CASE("kmm cut-off scales as pi / (2 sqrt(beta))") {
    for (double beta : {0.25, 1.0, 4.0}) {
        const double k = compute_kmax(Modification::kmm(beta));
        CHECK(std::abs(k * std::sqrt(beta) - 0.5 * kPi) < 1e-12);
    }
}

TEST_CASE("cosh cut-off equals the kmm one at matched beta") {
    // integral of sech over the half-line is also pi/2
    const double k = compute_kmax(Modification::cosh_type(1.0));
    CHECK(std::abs(k - 0.5 * kPi) < 1e-10);
}

TEST_CASE("quartic cut-off") {
    const double k = compute_kmax(Modification::quartic(1.0));
    CHECK(std::abs(k - 1.1107207345395915) < 1e-10);  // pi sqrt(2) / 4
    // beta scaling
    const double k4 = compute_kmax(Modification::quartic(4.0));
    CHECK(std::abs(k4 - 0.5 * k) < 1e-10);
}

TEST_CASE("unmodified commutator has no cut-off") {
    const double k = compute_kmax(Modification::even_polynomial({}));
    CHECK(std::isinf(k));
    CHECK_FALSE(build_momentum_map(Modification::even_polynomial({})).has_cutoff());
}

// ---------------------------------------------------------------------------
// the map and its inverse
// ---------------------------------------------------------------------------

TEST_CASE("kmm map is the tangent") {
    const MomentumMap map = build_momentum_map(Modification::kmm(1.0));
    CHECK(map.has_cutoff());
    for (double k : {0.1, 0.5, 1.0, 1.4, 1.55})
        CHECK(map.p_of_k(k) == doctest::Approx(std::tan(k)).epsilon(1e-11));
    for (double p : {0.2, 1.0, 10.0, 1e4})
        CHECK(map.k_of_p(p) == doctest::Approx(std::atan(p)).epsilon(1e-12));
}

TEST_CASE("cosh map matches the inverse gudermannian") {
    const MomentumMap map = build_momentum_map(Modification::cosh_type(1.0));
    for (double k : {0.3, 0.9, 1.3})
        CHECK(map.p_of_k(k) ==
              doctest::Approx(std::asinh(std::tan(k))).epsilon(1e-10));
}

TEST_CASE("round trip holds at the inversion tolerance") {
    const MomentumMap map = build_momentum_map(Modification::quartic(1.0));
    for (double k = -map.k_max * 0.999; k < map.k_max; k += map.k_max / 7.3) {
        const double p = map.p_of_k(k);
        CHECK(std::abs(map.k_of_p(p) - k) < 1e-10);
    }
}

TEST_CASE("map is odd") {
    const MomentumMap map = build_momentum_map(Modification::kmm(0.5));
    for (double k : {0.2, 0.8, 1.9}) {
        if (k >= map.k_max) continue;
        CHECK(map.p_of_k(-k) == doctest::Approx(-map.p_of_k(k)).epsilon(1e-14));
    }
    CHECK(map.p_of_k(0.0) == 0.0);
}

TEST_CASE("dp/dk equals the modification along the map") {
    const MomentumMap map = build_momentum_map(Modification::cosh_type(1.0));
    const double h = 1e-6;
    for (double k : {0.2, 0.7, 1.2}) {
        const double fd = (map.p_of_k(k + h) - map.p_of_k(k - h)) / (2.0 * h);
        const double f = map.modification.f(map.p_of_k(k));
        CHECK(fd == doctest::Approx(f).epsilon(1e-7));
    }
}

TEST_CASE("momenta beyond the anchor table still invert") {
    const MomentumMap map = build_momentum_map(Modification::kmm(1.0));
    const double k = map.k_max - 1e-11;
    const double p = map.p_of_k(k);
    CHECK(p > 1e9);
    CHECK(std::abs(map.k_of_p(p) - k) < 1e-12);
}

TEST_CASE("identity map for the unmodified commutator") {
    const MomentumMap map = build_momentum_map(Modification::even_polynomial({}));
    CHECK(map.p_of_k(0.7) == 0.7);
    CHECK(map.k_of_p(-123.0) == -123.0);
}

// ---------------------------------------------------------------------------
// domain errors
// ---------------------------------------------------------------------------

TEST_CASE("evaluating at or beyond the cut-off throws") {
    const MomentumMap map = build_momentum_map(Modification::kmm(1.0));
    CHECK_THROWS_AS(map.p_of_k(map.k_max), domain_error);
    CHECK_THROWS_AS(map.p_of_k(-map.k_max * 1.5), domain_error);
    CHECK_NOTHROW(map.p_of_k(map.k_max * (1.0 - 1e-12)));
}
