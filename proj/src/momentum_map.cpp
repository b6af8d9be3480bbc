#include "gup/momentum_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gup/quadrature.hpp"

namespace gup {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double inv_f(const Modification& mod, double p) { return 1.0 / mod.f(p); }

// Characteristic momentum scale of the modification.
double mod_scale(const Modification& mod) {
    if (mod.kind == ModKind::EvenPolynomial) {
        // Use the top coefficient to set the scale where f departs from 1.
        for (auto it = mod.coefficients.rbegin(); it != mod.coefficients.rend(); ++it)
            if (*it > 0.0) {
                const std::size_t m =
                    mod.coefficients.rend() - it;  // degree index
                return std::pow(1.0 / *it, 1.0 / (2.0 * m));
            }
        return 1.0;
    }
    return 1.0 / std::sqrt(mod.beta);
}

// Analytic upper bound on the tail integral of 1/f over [P, inf).
// Each family's f dominates a pure power/exponential from below.
double tail_bound(const Modification& mod, double P) {
    switch (mod.kind) {
        case ModKind::KMM:
            return 1.0 / (mod.beta * P);
        case ModKind::Cosh:
            return 2.0 / std::sqrt(mod.beta) * std::exp(-std::sqrt(mod.beta) * P);
        case ModKind::Quartic:
            return 4.0 / (3.0 * mod.beta * mod.beta * P * P * P);
        case ModKind::EvenPolynomial: {
            for (auto it = mod.coefficients.rbegin();
                 it != mod.coefficients.rend(); ++it) {
                if (*it > 0.0) {
                    const std::size_t m = mod.coefficients.rend() - it;
                    return std::pow(P, 1.0 - 2.0 * m) / (*it * (2.0 * m - 1.0));
                }
            }
            return kInf;
        }
    }
    return kInf;
}

}  // namespace

double compute_kmax(const Modification& mod, double tol) {
    if (!(tol > 0.0)) throw validation_error("compute_kmax: tol must be positive");

    const double scale = mod_scale(mod);

    if (!mod.grows()) {
        // No growth at infinity: probe doubling windows for a decaying
        // tail.  A flat f keeps contributing ~P per window, so this
        // walks to the resolution cap and reports divergence.
        double P = scale;
        while (P < 1e12 * scale) {
            const QuadResult win =
                integrate_adaptive([&](double p) { return inv_f(mod, p); }, P,
                                   2.0 * P, tol, 1e-12);
            if (win.value <= tol) {
                // Tail died off numerically after all; fall through to
                // direct evaluation below the probe point.
                const QuadResult head = integrate_adaptive(
                    [&](double p) { return inv_f(mod, p); }, 0.0, 2.0 * P,
                    0.5 * tol, 1e-14);
                return head.value;
            }
            P *= 2.0;
        }
        return kInf;
    }

    // Growth certified: pick P with an analytic tail bound below tol/2,
    // then integrate the head to the other half of the budget.
    double P = scale;
    while (tail_bound(mod, P) > 0.5 * tol) {
        P *= 2.0;
        if (!std::isfinite(P))
            throw accuracy_error("compute_kmax: tail bound never met", kInf, kInf);
    }
    const QuadResult head =
        integrate_adaptive([&](double p) { return inv_f(mod, p); }, 0.0, P,
                           0.4 * tol, 1e-14, 20000);
    return head.value;
}

bool MomentumMap::has_cutoff() const { return std::isfinite(k_max); }

MomentumMap build_momentum_map(const Modification& mod, double tol) {
    MomentumMap map;
    map.modification = mod;
    map.inversion_tolerance = std::max(tol, 1e-13);
    map.k_max = compute_kmax(mod, std::min(tol, 1e-12));

    if (!std::isfinite(map.k_max)) {
        // Divergent cut-off.  The only admissible member of this class
        // is f == 1, where the map is the identity; anything else is
        // inadmissible and has no well-defined band-limited picture.
        for (double a : mod.coefficients)
            if (a != 0.0)
                throw validation_error(
                    "build_momentum_map: divergent cut-off for an "
                    "inadmissible modification");
        return map;  // identity map, empty tables
    }

    const double scale = mod_scale(mod);
    const double h_min = 2.0 * map.k_max / (16384.0 + 2.0);
    const double coverage = h_min / 8.0;
    const int per_decade = 32;

    map.p_table.push_back(0.0);
    map.k_table.push_back(0.0);

    double p_prev = 0.0;
    double k_acc = 0.0;
    double decade_lo = 1e-4 * scale;
    const double p_cap = 1e9 * scale;

    while (map.k_max - k_acc > coverage && decade_lo < p_cap) {
        for (int i = 1; i <= per_decade; ++i) {
            const double p = decade_lo * std::pow(10.0, double(i) / per_decade);
            const QuadResult seg =
                integrate_adaptive([&](double q) { return inv_f(mod, q); },
                                   p_prev, p, 1e-15, 1e-13);
            k_acc += seg.value;
            map.p_table.push_back(p);
            map.k_table.push_back(k_acc);
            p_prev = p;
            if (map.k_max - k_acc <= coverage) break;
        }
        decade_lo *= 10.0;
    }

    // Guard against accumulated rounding nudging the last anchors past
    // the cut-off: k(p) < k_max for every finite p.
    for (double& k : map.k_table)
        k = std::min(k, std::nextafter(map.k_max, 0.0));

    return map;
}

namespace {

// k(p) for p >= anchor j, accumulating from the tabulated anchor.
double k_from_anchor(const MomentumMap& map, std::size_t j, double p) {
    const QuadResult seg = integrate_adaptive(
        [&](double q) { return 1.0 / map.modification.f(q); },
        map.p_table[j], p, 1e-15, 1e-13);
    return map.k_table[j] + seg.value;
}

}  // namespace

double MomentumMap::k_of_p(double p) const {
    if (!has_cutoff()) return p;  // identity modification
    if (p == 0.0) return 0.0;
    const double ap = std::abs(p);
    // Last anchor at or below ap.
    auto it = std::upper_bound(p_table.begin(), p_table.end(), ap);
    const std::size_t j = (it - p_table.begin()) - 1;
    double k = (p_table[j] == ap) ? k_table[j] : k_from_anchor(*this, j, ap);
    k = std::min(k, std::nextafter(k_max, 0.0));
    return std::copysign(k, p);
}

double MomentumMap::p_of_k(double k) const {
    if (!has_cutoff()) return k;  // identity modification
    const double ak = std::abs(k);
    if (ak >= k_max) {
        std::ostringstream msg;
        msg << "p_of_k: |k| = " << ak << " outside the band (k_max = " << k_max
            << ")";
        throw domain_error(msg.str());
    }
    if (k == 0.0) return 0.0;

    // Bracket [p_lo, p_hi] with k(p_lo) <= ak <= k(p_hi).
    std::size_t j;
    double p_lo, p_hi, k_lo, k_hi;
    auto kit = std::upper_bound(k_table.begin(), k_table.end(), ak);
    if (kit == k_table.end()) {
        // Beyond the tabulated range: extend by doubling.
        j = k_table.size() - 1;
        p_lo = p_table[j];
        k_lo = k_table[j];
        p_hi = 2.0 * p_lo;
        k_hi = k_from_anchor(*this, j, p_hi);
        while (k_hi < ak) {
            p_lo = p_hi;
            k_lo = k_hi;
            p_hi *= 2.0;
            if (!std::isfinite(p_hi))
                throw domain_error("p_of_k: k too close to the cut-off");
            k_hi = k_from_anchor(*this, j, p_hi);
        }
    } else {
        j = (kit - k_table.begin()) - 1;
        p_lo = p_table[j];
        k_lo = k_table[j];
        p_hi = p_table[j + 1];
        k_hi = k_table[j + 1];
    }

    // Seed with a secant in log-momentum when possible (the anchors are
    // log-spaced), then polish with Newton on F(p) = k(p) - ak, whose
    // derivative 1/f(p) is exact.  Bisection safeguards every step.
    double p;
    if (p_lo > 0.0) {
        const double t = (ak - k_lo) / (k_hi - k_lo);
        p = p_lo * std::pow(p_hi / p_lo, t);
    } else {
        p = ak;  // near the origin f ~ 1, so p ~ k
        p = std::min(std::max(p, p_lo), p_hi);
    }

    const double tol_k = 0.25 * inversion_tolerance * (1.0 + std::abs(p_hi));
    for (int iter = 0; iter < 64; ++iter) {
        const double F = k_from_anchor(*this, j, p) - ak;
        if (std::abs(F) <= tol_k) break;
        if (F > 0.0)
            p_hi = p;
        else
            p_lo = p;
        double next = p - F * modification.f(p);
        if (!(next > p_lo && next < p_hi)) next = 0.5 * (p_lo + p_hi);
        if (next == p) break;
        p = next;
    }
    return std::copysign(p, k);
}

}  // namespace gup
