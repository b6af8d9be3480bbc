#include "gup/transform.hpp"

#include <algorithm>
#include <cmath>

#include "gup/errors.hpp"

namespace gup {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double simpson(const std::vector<double>& v, double dx) {
    // Odd sample counts are enforced at construction.
    double odd = 0.0, even = 0.0;
    const std::size_t n = v.size();
    for (std::size_t j = 1; j + 1 < n; j += 2) odd += v[j];
    for (std::size_t j = 2; j + 1 < n; j += 2) even += v[j];
    return dx / 3.0 * (v.front() + v.back() + 4.0 * odd + 2.0 * even);
}

}  // namespace

double PositionDensity::mass() const { return simpson(values, dx); }

double PositionDensity::moment(int order) const {
    std::vector<double> weighted(values.size());
    for (std::size_t j = 0; j < values.size(); ++j)
        weighted[j] = std::pow(node(j), order) * values[j];
    return simpson(weighted, dx);
}

std::vector<std::complex<double>> position_amplitudes(
    const Wavefunction& state, const std::vector<double>& xs) {
    const Grid& grid = state.grid;
    const double h = grid.spacing();
    const double pref = h / std::sqrt(2.0 * kPi);

    std::vector<std::complex<double>> out(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const double x = xs[j];
        // Rotor recurrence over the uniform k-grid: one complex
        // multiply per node instead of a trig call.
        const std::complex<double> step(std::cos(h * x), std::sin(h * x));
        std::complex<double> rot(std::cos(grid.node(0) * x),
                                 std::sin(grid.node(0) * x));
        std::complex<double> acc = rot * state.values[0];
        for (int i = 1; i < grid.n; ++i) {
            rot *= step;
            acc += rot * state.values[i];
        }
        out[j] = pref * acc;
    }
    return out;
}

PositionDensity to_position(const Wavefunction& state, double x_max, int m) {
    if (m < 128) throw validation_error("to_position: m must be >= 128");
    if (!(x_max > 0.0)) throw validation_error("to_position: x_max must be positive");
    // The sampled transform is periodic in x with period 2 pi / h, so
    // amplitudes past the half-period are replicas, not tail.
    if (!(x_max < kPi / state.grid.spacing()))
        throw validation_error(
            "to_position: x_max reaches the alias replicas of the sampled "
            "transform; refine the k-grid or shrink the window");
    if (std::abs(state.norm_sq_weighted() - 1.0) > 1e-10)
        throw domain_error("to_position: state is not normalized");
    if (m % 2 == 0) ++m;  // Simpson needs an odd sample count

    PositionDensity d;
    d.x0 = -x_max;
    d.dx = 2.0 * x_max / (m - 1);

    std::vector<double> xs(m);
    for (int j = 0; j < m; ++j) xs[j] = d.x0 + j * d.dx;
    const auto phi = position_amplitudes(state, xs);
    d.values.resize(m);
    for (int j = 0; j < m; ++j) d.values[j] = std::norm(phi[j]);

    // Total variation of the amplitude, counting the jumps from the
    // implicit zeros at the band edges.
    double tv = std::abs(state.values.front()) + std::abs(state.values.back());
    for (int i = 0; i + 1 < state.grid.n; ++i)
        tv += std::abs(state.values[i + 1] - state.values[i]);
    d.tail_mass_bound = tv * tv / (kPi * x_max);
    return d;
}

AdaptiveDensity adaptive_position_density(const Wavefunction& state,
                                          const AdaptiveDensityOptions& opts) {
    const double k_max = state.grid.k_max;
    const double x0 = 40.0 / k_max;
    const double dx_target = (kPi / k_max) / opts.samples_per_period;
    // Hard ceiling on the window: past the alias half-period the
    // sampled transform repeats itself and the moments pick up whole
    // replica images.
    const double x_wall = kPi / state.grid.spacing();

    // Window ladder X, 2X, 4X, ... at fixed resolution.  Mass always
    // settles for a normalized state; a second moment that keeps
    // climbing once the mass has settled is the divergence signature.
    AdaptiveDensity out;
    double x_max = x0;
    double prev_m2 = 0.0;
    bool prev_mass_met = false;
    bool have_prev = false;

    for (int level = 0;; ++level) {
        const int m = 2 * int(std::ceil(x_max / dx_target)) + 1;
        out.density = to_position(state, x_max, m);
        out.mass = out.density.mass();
        out.levels = level;
        const double m2 = out.density.moment(2);
        const bool mass_met = out.mass >= 1.0 - opts.mass_tail;

        if (have_prev && mass_met && prev_mass_met) {
            const double growth = (m2 - prev_m2) / std::max(prev_m2, 1e-300);
            if (growth > opts.divergence_growth) {
                out.divergent = true;
                return out;
            }
            if (!opts.variance_stage) return out;
            if (growth <= opts.variance_rel) return out;
        }

        if (!mass_met && level >= opts.max_mass_levels) {
            out.divergent = true;  // mass never settled in the budget
            return out;
        }
        if (x_max >= opts.variance_window_cap * x0 || 2.0 * x_max >= x_wall) {
            // Window budget exhausted -- the configured cap or the
            // alias-free range of this k-grid -- before the stopping
            // rule held: the result cannot be certified.
            out.divergent = true;
            return out;
        }
        prev_m2 = m2;
        prev_mass_met = mass_met;
        have_prev = true;
        x_max *= 2.0;
    }
}

std::optional<double> position_variance(const Wavefunction& state) {
    AdaptiveDensityOptions opts;
    opts.variance_stage = true;
    const AdaptiveDensity ad = adaptive_position_density(state, opts);
    if (ad.divergent) return std::nullopt;
    const double mass = ad.mass;
    const double mean = ad.density.moment(1) / mass;
    return ad.density.moment(2) / mass - mean * mean;
}

Wavefunction box_mode(int mode_index, const Grid& grid) {
    if (mode_index < 1) throw validation_error("box_mode: index starts at 1");
    const double a = grid.k_max;
    const double c = kPi * mode_index / (2.0 * a);
    Wavefunction wf;
    wf.grid = grid;
    wf.values.resize(grid.n);
    const double norm = 1.0 / std::sqrt(a);
    for (int i = 0; i < grid.n; ++i)
        wf.values[i] = norm * std::sin(c * (grid.node(i) + a));
    return wf;
}

std::complex<double> phi_box(int mode_index, double k_max, double x) {
    if (mode_index < 1) throw validation_error("phi_box: index starts at 1");
    const double a = k_max;
    const double c = kPi * mode_index / (2.0 * a);

    const double dm = x - c;  // signed distance to the +c peak
    const double dp = x + c;  // signed distance to the -c peak
    const double common = 2.0 * c / std::sqrt(2.0 * kPi * a);

    auto sinc = [](double t) { return (t == 0.0) ? 1.0 : std::sin(t) / t; };

    if (mode_index % 2 == 1) {
        // Real and even; the removable zeros of cos(a x) at +-c are
        // absorbed into a sinc factor around whichever peak is nearer.
        const double sigma = ((mode_index - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        const double value =
            (std::abs(dm) <= std::abs(dp))
                ? sigma * common * a * sinc(a * dm) / dp
                : -sigma * common * a * sinc(a * dp) / dm;
        return {value, 0.0};
    }
    // Imaginary and odd in x.
    const double tau = (mode_index / 2) % 2 == 0 ? 1.0 : -1.0;
    const double value = (std::abs(dm) <= std::abs(dp))
                             ? tau * common * a * sinc(a * dm) / dp
                             : tau * common * a * sinc(a * dp) / dm;
    return {0.0, value};
}

}  // namespace gup
