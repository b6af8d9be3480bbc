#include "gup/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "gup/errors.hpp"

namespace gup {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Keyed counter generator: word c of the stream belonging to state
/// `index`.  Stateless, so any state can be regenerated in isolation
/// and the scan order never influences the draws.
std::uint64_t keyed_word(std::uint64_t seed, std::uint64_t index,
                         std::uint64_t counter) {
    const std::uint64_t key = mix64(seed + kGolden * (index + 1));
    return mix64(key + kGolden * (counter + 1));
}

/// Uniform double in (0, 1] from the top 53 bits of a word.
double uniform01(std::uint64_t word) {
    return static_cast<double>((word >> 11) + 1) * 0x1.0p-53;
}

std::vector<std::complex<double>> mode_coefficients(const ScanConfig& cfg,
                                                    int index) {
    std::vector<std::complex<double>> c(cfg.mode_count);
    double norm_sq = 0.0;
    for (int j = 0; j < cfg.mode_count; ++j) {
        const double u1 = uniform01(keyed_word(cfg.seed, index, 2 * j));
        const double u2 = uniform01(keyed_word(cfg.seed, index, 2 * j + 1));
        const double r = std::sqrt(-2.0 * std::log(u1));
        c[j] = {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
        norm_sq += std::norm(c[j]);
    }
    if (norm_sq <= 0.0) {
        c[0] = 1.0;  // measure-zero fallback
        norm_sq = 1.0;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& v : c) v *= inv;
    return c;
}

void check_config(const ScanConfig& cfg) {
    if (!cfg.map.has_cutoff())
        throw domain_error("scan requires a finite momentum cut-off");
    if (cfg.state_count < 1)
        throw validation_error("scan needs at least one state");
    if (cfg.mode_count < 1 || cfg.mode_count > 256)
        throw validation_error("mode count must lie in [1, 256]");
}

double xlogx(double w) { return (w > 0.0) ? w * std::log(w) : 0.0; }

/// Composite Simpson over an odd-length array of samples.
double simpson(const std::vector<double>& v, double dx) {
    double s = v.front() + v.back();
    for (std::size_t j = 1; j + 1 < v.size(); ++j)
        s += (j % 2 == 1 ? 4.0 : 2.0) * v[j];
    return s * dx / 3.0;
}

constexpr int kScanGrid = 2048;   ///< shared k-grid size
constexpr int kMaxLevels = 14;    ///< position-window doublings

/// Shared position-side sample cache.  Window level l covers
/// [-M0 2^l dx, +M0 2^l dx]; mode values are stored for x >= 0 only and
/// reflected through the modes' parity (odd index -> even function,
/// even index -> odd function).
struct WindowLadder {
    double dx = 0.0;
    int m0 = 0;
    std::vector<std::vector<std::complex<double>>> phi;  // [mode][j], x = j dx

    WindowLadder(double k_max, int modes) {
        dx = kPi / (24.0 * k_max);
        const double x0 = 40.0 / k_max;
        m0 = static_cast<int>(std::ceil(x0 / dx));
        if (m0 % 2 != 0) ++m0;
        phi.resize(modes);
    }

    int points(int level) const { return m0 << level; }

    void ensure(double k_max, int level) {
        const std::size_t need = static_cast<std::size_t>(points(level)) + 1;
        for (std::size_t n = 0; n < phi.size(); ++n) {
            auto& column = phi[n];
            column.reserve(need);
            for (std::size_t j = column.size(); j < need; ++j)
                column.push_back(
                    phi_box(static_cast<int>(n) + 1, k_max, j * dx));
        }
    }
};

/// Position entropy of the state with the given mode coefficients:
/// widen the window until it holds all but 1e-6 of the mass, then
/// integrate -w log w there.  Returns {h_x, certified}.
std::pair<double, bool> position_entropy(
    const std::vector<std::complex<double>>& c, WindowLadder& ladder,
    double k_max) {
    const int modes = static_cast<int>(c.size());
    std::vector<std::complex<double>> amp_pos(1, 0.0), amp_neg(1, 0.0);
    for (int level = 0;; ++level) {
        ladder.ensure(k_max, level);
        const std::size_t m = static_cast<std::size_t>(ladder.points(level));
        amp_pos.resize(m + 1, 0.0);
        amp_neg.resize(m + 1, 0.0);
        // Extend the amplitude arrays over the new sample points only;
        // the inner window is unchanged from the previous level.
        const std::size_t start =
            (level == 0) ? 0 : static_cast<std::size_t>(ladder.points(level - 1)) + 1;
        for (std::size_t j = start; j <= m; ++j) {
            std::complex<double> sp = 0.0, sn = 0.0;
            for (int n = 0; n < modes; ++n) {
                const std::complex<double> v = ladder.phi[n][j];
                sp += c[n] * v;
                // mode n+1: even function for odd index, odd for even
                if (n % 2 == 0)
                    sn += c[n] * v;
                else
                    sn -= c[n] * v;
            }
            amp_pos[j] = sp;
            amp_neg[j] = sn;
        }
        std::vector<double> density(2 * m + 1);
        for (std::size_t j = 0; j <= m; ++j) {
            density[m + j] = std::norm(amp_pos[j]);
            density[m - j] = std::norm(amp_neg[j]);
        }
        const double mass = simpson(density, ladder.dx);
        const bool enough = mass >= 1.0 - 1e-6;
        if (enough || level == kMaxLevels) {
            for (auto& w : density) w = -xlogx(w);
            return {simpson(density, ladder.dx), enough};
        }
    }
}

/// Frontier of the conjectured entropic region for the tan-type map,
/// tabulated once at beta = 1 as (h_k, h_x) pairs sorted by h_k.
const std::vector<std::array<double, 2>>& frontier_table_beta1() {
    static const std::vector<std::array<double, 2>> table = [] {
        std::vector<std::array<double, 2>> t;
        std::vector<double> gammas;
        const double lo = 0.01, hi = 64.0;
        const int count = 48;
        for (int i = 0; i < count; ++i)
            gammas.push_back(lo * std::pow(hi / lo, double(i) / (count - 1)));
        for (double g : gammas)
            t.push_back({analytic_hk(1.0, g), family_hx(1.0, g)});
        // flat-state endpoint (gamma -> 0)
        t.push_back({std::log(kPi), family_hx(1.0, 0.0)});
        std::sort(t.begin(), t.end());
        return t;
    }();
    return table;
}

/// Least admissible h_x at the given h_k: linear interpolation in the
/// frontier table, shifted to the map's beta, falling back to the
/// Hirschman line left of the table.
double frontier_hx(double h_k, double beta) {
    const auto& table = frontier_table_beta1();
    const double shift = 0.5 * std::log(beta);
    const double h1 = h_k + shift;  // back to beta = 1 coordinates
    if (h1 <= table.front()[0]) return 1.0 + std::log(kPi) - h_k;
    if (h1 >= table.back()[0]) return table.back()[1] - shift;
    auto it = std::lower_bound(
        table.begin(), table.end(), std::array<double, 2>{h1, 0.0});
    const auto& b = *it;
    const auto& a = *(it - 1);
    const double t = (h1 - a[0]) / (b[0] - a[0]);
    return a[1] + t * (b[1] - a[1]) - shift;
}

}  // namespace

Wavefunction random_state(const ScanConfig& cfg, int index) {
    check_config(cfg);
    if (index < 0 || index >= cfg.state_count)
        throw validation_error("state index out of range");
    const auto c = mode_coefficients(cfg, index);
    Wavefunction state;
    state.grid = Grid{cfg.map.k_max, kScanGrid};
    state.values.assign(kScanGrid, 0.0);
    for (int n = 0; n < cfg.mode_count; ++n) {
        const Wavefunction mode = box_mode(n + 1, state.grid);
        for (int i = 0; i < kScanGrid; ++i)
            state.values[i] += c[n] * mode.values[i];
    }
    state.normalize();
    return state;
}

std::vector<ScanRecord> scan(const ScanConfig& cfg) {
    check_config(cfg);
    const double a = cfg.map.k_max;
    const Grid grid{a, kScanGrid};
    const double h = grid.spacing();
    const int modes = cfg.mode_count;

    // Shared per-grid data: momentum samples and the mode matrix.
    std::vector<double> p(kScanGrid), p_sq(kScanGrid);
    for (int i = 0; i < kScanGrid; ++i) {
        p[i] = cfg.map.p_of_k(grid.node(i));
        p_sq[i] = p[i] * p[i];
    }
    std::vector<std::vector<double>> modes_on_grid(modes);
    std::vector<double> tilde_c(modes), slope_left(modes), slope_right(modes);
    const double root_a = std::sqrt(a);
    for (int n = 0; n < modes; ++n) {
        tilde_c[n] = kPi * (n + 1) / (2.0 * a);
        modes_on_grid[n].resize(kScanGrid);
        for (int i = 0; i < kScanGrid; ++i)
            modes_on_grid[n][i] =
                std::sin(tilde_c[n] * (grid.node(i) + a)) / root_a;
        slope_left[n] = tilde_c[n] / root_a;
        slope_right[n] = ((n + 1) % 2 == 0 ? 1.0 : -1.0) * tilde_c[n] / root_a;
    }
    // Wall limit of p^2 |psi|^2: |psi|^2 vanishes like the squared
    // distance to the wall, so the limit is |psi'(wall)|^2 times
    // lim (p (k_max - k))^2, probed just inside the cut-off.  The limit
    // is nonzero only when 1/f has a quadratic tail (tan-type maps).
    const double probe = 1e-7 * a;
    const double wall_limit = std::pow(cfg.map.p_of_k(a - probe) * probe, 2);

    WindowLadder ladder(a, modes);
    std::vector<ScanRecord> records(cfg.state_count);
    std::vector<std::complex<double>> psi(kScanGrid);
    for (int index = 0; index < cfg.state_count; ++index) {
        const auto c = mode_coefficients(cfg, index);
        ScanRecord& rec = records[index];
        rec.index = index;

        // Position variance in mode algebra (exact): the position
        // operator acts as i d/dk, and the modes' derivative overlaps
        // are diagonal for <x^2> and closed-form for <x>.
        double x_sq = 0.0;
        for (int n = 0; n < modes; ++n)
            x_sq += std::norm(c[n]) * tilde_c[n] * tilde_c[n];
        double x_mean = 0.0;
        for (int m = 0; m < modes; ++m)
            for (int n = m + 1; n < modes; ++n) {
                const int mm = m + 1, nn = n + 1;
                if ((mm + nn) % 2 == 0) continue;
                const double g =
                    2.0 * mm * nn / (a * double(mm * mm - nn * nn));
                x_mean += -2.0 * g * std::imag(std::conj(c[m]) * c[n]);
            }
        rec.delta_x = x_sq - x_mean * x_mean;

        // Momentum side on the shared grid.
        for (int i = 0; i < kScanGrid; ++i) {
            std::complex<double> s = 0.0;
            for (int n = 0; n < modes; ++n) s += c[n] * modes_on_grid[n][i];
            psi[i] = s;
        }
        std::complex<double> dpsi_l = 0.0, dpsi_r = 0.0;
        for (int n = 0; n < modes; ++n) {
            dpsi_l += c[n] * slope_left[n];
            dpsi_r += c[n] * slope_right[n];
        }
        double p_mean = 0.0, p_second = 0.0, hk = 0.0;
        for (int i = 0; i < kScanGrid; ++i) {
            const double w = std::norm(psi[i]);
            p_mean += p[i] * w;
            p_second += p_sq[i] * w;
            hk += xlogx(w);
        }
        p_mean *= h;
        // Trapezoid end correction: p^2 |psi|^2 has a finite, generally
        // nonzero limit at the walls even though |psi|^2 vanishes there.
        p_second = p_second * h +
                   0.5 * h * wall_limit *
                       (std::norm(dpsi_l) + std::norm(dpsi_r));
        rec.delta_p = p_second - p_mean * p_mean;
        rec.h_k = -hk * h;

        const auto [hx, certified] = position_entropy(c, ladder, a);
        rec.h_x = hx;
        rec.divergent_x = !certified;
    }
    return records;
}

RegionReport region_report(const std::vector<ScanRecord>& records,
                           const MomentumMap& map) {
    if (!map.has_cutoff())
        throw domain_error("region report requires a finite momentum cut-off");
    RegionReport rep;
    const Modification& mod = map.modification;
    const double bb_line = 1.0 + std::log(kPi);
    const double ceiling = std::log(2.0 * map.k_max);
    const bool tan_type = (mod.kind == ModKind::KMM);

    long divergent = 0;
    std::vector<std::array<double, 2>> cloud;
    cloud.reserve(records.size());
    for (const ScanRecord& rec : records) {
        if (rec.divergent_x) ++divergent;
        if (rec.h_k > ceiling + 1e-6) ++rep.ceiling;
        if (!rec.divergent_x) {
            if (rec.h_x + rec.h_k < bb_line - 1e-4) ++rep.bb;
            if (tan_type &&
                rec.h_x < frontier_hx(rec.h_k, mod.beta) - 5e-3)
                ++rep.boundary;
        }
        if (rec.delta_x * rec.delta_p < 0.25 * (1.0 - 1e-9)) ++rep.heisenberg;
        const double sub = suboptimal_bound(mod, rec.delta_p);
        if (rec.delta_x < sub * (1.0 - 1e-6)) ++rep.suboptimal;
        // Optimal-curve value at this state's momentum variance: exact
        // for the tan-type map (where the algebraic bound is tight);
        // for other maps the algebraic bound is the certified envelope.
        double curve = sub;
        if (tan_type && rec.delta_p > 0.0) {
            const double gamma =
                0.5 * (1.0 + 1.0 / (mod.beta * rec.delta_p));
            curve = kmm_analytic(mod.beta, gamma).delta_x;
        }
        if (rec.delta_x < curve * (1.0 - 1e-3)) ++rep.curve_dominance;
        cloud.push_back({rec.delta_x, rec.delta_p});
    }
    rep.divergent_fraction =
        records.empty() ? 0.0 : double(divergent) / double(records.size());
    rep.hull = lower_convex_hull(cloud);
    return rep;
}

}  // namespace gup
