#include "gup/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gup/quadrature.hpp"

namespace gup {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double xlogx(double w) { return (w > 0.0) ? w * std::log(w) : 0.0; }

double simpson_sum(const std::vector<double>& v, double dx) {
    double odd = 0.0, even = 0.0;
    for (std::size_t j = 1; j + 1 < v.size(); j += 2) odd += v[j];
    for (std::size_t j = 2; j + 1 < v.size(); j += 2) even += v[j];
    return dx / 3.0 * (v.front() + v.back() + 4.0 * odd + 2.0 * even);
}

}  // namespace

double digamma(double x) {
    if (!(x > 0.0)) throw domain_error("digamma: requires x > 0");
    // Shift into the asymptotic regime, then use the Bernoulli series.
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // psi(x) ~ ln x - 1/(2x) - sum B_2n / (2n x^(2n))
    const double series =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 -
                                inv2 * (1.0 / 240.0 -
                                        inv2 * (1.0 / 132.0 -
                                                inv2 * 691.0 / 32760.0)))));
    return acc + std::log(x) - 0.5 * inv - series;
}

double shannon_entropy_k(const Wavefunction& state) {
    const double h = state.grid.spacing();
    double s = 0.0;
    for (const auto& v : state.values) s += xlogx(std::norm(v));
    return -s * h;
}

double shannon_entropy_p(const Wavefunction& state, const MomentumMap& map) {
    if (!map.has_cutoff())
        return shannon_entropy_k(state);  // identity map, same measure
    const Grid& grid = state.grid;
    const double h = grid.spacing();
    const Modification& mod = map.modification;

    // Cell measure under dp / f(p): integrate 1/f between the momenta
    // of consecutive half-nodes.  (Each weight equals h up to
    // quadrature error; computing it through the map is what makes
    // this an evaluation on the momentum side rather than an alias of
    // shannon_entropy_k.)
    double s = 0.0;
    double p_lo = map.p_of_k(grid.node(0) - 0.5 * h);
    for (int i = 0; i < grid.n; ++i) {
        const double k_hi = grid.node(i) + 0.5 * h;
        const double p_hi = map.p_of_k(k_hi);
        const QuadResult cell = integrate_adaptive(
            [&](double p) { return 1.0 / mod.f(p); }, p_lo, p_hi, 1e-15, 1e-12);
        s += xlogx(std::norm(state.values[i])) * cell.value;
        p_lo = p_hi;
    }
    return -s;
}

EntropyEstimate shannon_entropy_x(const PositionDensity& density) {
    std::vector<double> integrand(density.values.size());
    for (std::size_t j = 0; j < density.values.size(); ++j)
        integrand[j] = -xlogx(density.values[j]);

    EntropyEstimate est;
    est.value = simpson_sum(integrand, density.dx);

    // Tail entropy through the band-limited envelope w(x) <= C / x^2
    // with C = tail_mass_bound * x_max / 2:
    //   integral_X^inf (C/x^2) log(x^2/C) dx = C (2 log X + 2 - log C) / X.
    const double X = density.x_max();
    const double C = 0.5 * density.tail_mass_bound * X;
    if (C > 0.0 && X > 0.0) {
        const double tail =
            C * (2.0 * std::log(X) + 2.0 - std::log(C)) / X;
        est.error_estimate = std::max(tail, 0.0);
    }
    est.warning = est.error_estimate > 1e-3;
    return est;
}

double analytic_hk(double beta, double gamma) {
    if (!(beta > 0.0)) throw domain_error("analytic_hk: beta must be positive");
    if (!(gamma > 0.0)) throw domain_error("analytic_hk: requires gamma > 0");
    const double log_kappa = 0.5 * std::log(kPi / beta) +
                             std::lgamma(gamma + 0.5) - std::lgamma(gamma + 1.0);
    return log_kappa + gamma * (digamma(gamma + 1.0) - digamma(gamma + 0.5));
}

double family_hk_numeric(double beta, double gamma) {
    if (!(beta > 0.0 && gamma > 0.0))
        throw domain_error("family_hk_numeric: requires beta, gamma > 0");
    const double rb = std::sqrt(beta);
    const double a = 0.5 * kPi / rb;
    const double log_kappa = 0.5 * std::log(kPi / beta) +
                             std::lgamma(gamma + 0.5) - std::lgamma(gamma + 1.0);
    // -2 * integral_0^a u log u dk with u = cos(sqrt(beta) k)^(2 gamma) / kappa.
    auto integrand = [&](double k) {
        const double c = std::cos(rb * k);
        if (c <= 0.0) return 0.0;
        const double log_u = 2.0 * gamma * std::log(c) - log_kappa;
        return -std::exp(log_u) * log_u;
    };
    const QuadResult q = integrate_adaptive(integrand, 0.0, a, 1e-11, 1e-10);
    return 2.0 * q.value;
}

namespace {

// log of the position amplitude integral I(x) for the beta = 1 family,
//   I(x) = pi Gamma(gamma+1) / (2^gamma Gamma(1+(gamma+x)/2) Gamma(1+(gamma-x)/2)),
// switched to the reflection form when the second Gamma argument drops
// near or below zero (x > gamma + 1).  Returns -inf at the zeros.
double family_log_density_beta1(double gamma, double x, double log_kappa) {
    x = std::abs(x);
    const double base = std::lgamma(gamma + 1.0) - gamma * std::log(2.0);
    const double s = 1.0 + 0.5 * (gamma + x);
    const double t = 1.0 + 0.5 * (gamma - x);
    double log_I;
    if (t > 0.5) {
        log_I = std::log(kPi) + base - std::lgamma(s) - std::lgamma(t);
    } else {
        // Gamma(t) = pi / (sin(pi t) Gamma(1 - t)); |sin(pi t)| is
        // evaluated on the reduced argument to keep full precision at
        // large |t|.
        const double sin_pt = std::sin(kPi * (t - std::nearbyint(t)));
        if (sin_pt == 0.0) return -std::numeric_limits<double>::infinity();
        log_I = base + std::log(std::abs(sin_pt)) + std::lgamma(1.0 - t) -
                std::lgamma(s);
    }
    return 2.0 * log_I - std::log(2.0 * kPi) - log_kappa;
}

}  // namespace

double family_hx(double beta, double gamma, double tail_target) {
    if (!(beta > 0.0)) throw domain_error("family_hx: beta must be positive");
    if (!(gamma >= 0.0)) throw domain_error("family_hx: requires gamma >= 0");

    // Work at beta = 1 and shift: the density scales as
    // w_beta(x) = w_1(x / sqrt(beta)) / sqrt(beta), so
    // h_x(beta) = h_x(1) + log(beta)/2.
    const double log_kappa =
        0.5 * std::log(kPi) + std::lgamma(gamma + 0.5) - std::lgamma(gamma + 1.0);
    const double a = 0.5 * kPi;

    // Tail-entropy estimate from the large-x envelope
    // w ~ D x^(-s) sin^2(a(x - gamma)), s = 2 gamma + 2, using the
    // period averages <sin^2> = 1/2 and <sin^2 log sin^2> = (1-log 4)/2.
    const double s_exp = 2.0 * gamma + 2.0;
    const double log_D = 2.0 * std::lgamma(gamma + 1.0) -
                         2.0 * gamma * std::log(2.0) - log_kappa +
                         std::log(4.0 / (2.0 * kPi));
    const double D = std::exp(log_D);
    auto tail_entropy = [&](double X) {
        const double A = D * std::pow(X, 1.0 - s_exp) / (s_exp - 1.0);
        const double B = D * std::pow(X, 1.0 - s_exp) *
                         (std::log(X) / (s_exp - 1.0) +
                          1.0 / ((s_exp - 1.0) * (s_exp - 1.0)));
        return (s_exp * B - log_D * A) + (std::log(4.0) - 1.0) * A;
    };

    const double dx = 1.0 / 32.0;  // 64 samples per oscillation period
    double X = 40.0 / a;
    while (tail_entropy(X) > tail_target && X < 1e7) X *= 2.0;

    const int m = 2 * int(std::ceil(X / dx / 2.0)) + 1;  // odd count on [0, X]
    std::vector<double> integrand(m);
    const double step = X / (m - 1);
    for (int j = 0; j < m; ++j) {
        const double lw = family_log_density_beta1(gamma, j * step, log_kappa);
        integrand[j] = std::isfinite(lw) ? -std::exp(lw) * lw : 0.0;
    }
    const double windowed = 2.0 * simpson_sum(integrand, step);
    return windowed + tail_entropy(X) + 0.5 * std::log(beta);
}

Wavefunction family_state(double beta, double gamma, int n) {
    if (!(beta > 0.0 && gamma >= 0.0))
        throw domain_error("family_state: requires beta > 0, gamma >= 0");
    const double rb = std::sqrt(beta);
    Wavefunction wf;
    wf.grid = Grid{0.5 * kPi / rb, n};
    wf.values.resize(n);
    for (int i = 0; i < n; ++i) {
        const double c = std::cos(rb * wf.grid.node(i));
        wf.values[i] = (c > 0.0) ? std::pow(c, gamma) : 0.0;
    }
    wf.normalize();
    return wf;
}

namespace {

double peak_value(const std::vector<double>& w) {
    const std::size_t j =
        std::max_element(w.begin(), w.end()) - w.begin();
    const double w0 = w[j];
    if (j == 0 || j + 1 == w.size()) return w0;
    const double wm = w[j - 1], wp = w[j + 1];
    const double denom = 2.0 * w0 - wp - wm;
    if (denom <= 0.0) return w0;  // flat or degenerate: node value is the peak
    const double delta = wp - wm;
    return w0 + delta * delta / (8.0 * denom);
}

}  // namespace

double min_entropy(const std::vector<double>& density) {
    if (density.empty()) throw domain_error("min_entropy: empty density");
    return -std::log(peak_value(density));
}

double min_entropy(const PositionDensity& density) {
    return min_entropy(density.values);
}

double min_entropy_k(const Wavefunction& state) {
    std::vector<double> w(state.values.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::norm(state.values[i]);
    return min_entropy(w);
}

std::optional<double> min_entropy_minlength(const MomentumMap& map) {
    if (!map.has_cutoff()) return std::nullopt;
    return -std::log(map.k_max / kPi);
}

OptimizerEstimate min_entropy_optimizer(double k_max, int modes) {
    if (modes < 2) throw validation_error("min_entropy_optimizer: modes < 2");
    // Cauchy-Schwarz: the largest density at the origin reachable in the
    // span of the first N modes is S_N = sum |phi_n(0)|^2.
    auto partial = [&](int N) {
        double s = 0.0;
        for (int n = 1; n <= N; ++n) s += std::norm(phi_box(n, k_max, 0.0));
        return s;
    };
    OptimizerEstimate est;
    est.modes = modes;
    const double sN = partial(modes);
    est.raw = -std::log(sN);
    // The partial sums approach k_max/pi with an O(1/N) tail; one
    // richardson step on the sums removes it while keeping the
    // estimate on the high side of the limit.
    const double sH = partial(modes / 2);
    est.refined = -std::log(2.0 * sN - sH);
    return est;
}

EntropicBounds entropic_bounds(const MomentumMap& map) {
    EntropicBounds b;
    if (!map.has_cutoff()) {
        b.h_p_max = std::numeric_limits<double>::infinity();
        b.h_x_lower = -std::numeric_limits<double>::infinity();
        b.finite = false;
        return b;
    }
    b.h_p_max = std::log(2.0 * map.k_max);
    b.h_x_lower = 1.0 - std::log(2.0 * map.k_max / kPi);
    b.finite = true;
    return b;
}

MinlengthEstimate shannon_minlength_estimate(const MomentumMap& map,
                                             const std::vector<double>& gammas) {
    if (map.modification.kind != ModKind::KMM)
        throw domain_error(
            "shannon_minlength_estimate: the analytic family is specific to "
            "the kmm modification");
    if (gammas.empty())
        throw validation_error("shannon_minlength_estimate: empty gamma grid");
    MinlengthEstimate best;
    best.h_x_min = std::numeric_limits<double>::infinity();
    for (double g : gammas) {
        const double hx = family_hx(map.modification.beta, g);
        if (hx < best.h_x_min) {
            best.h_x_min = hx;
            best.gamma_star = g;
        }
    }
    return best;
}

}  // namespace gup
