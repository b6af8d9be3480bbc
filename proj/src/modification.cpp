#include "gup/modification.hpp"

#include <cmath>
#include <sstream>

namespace gup {

double Modification::f(double p) const {
    switch (kind) {
        case ModKind::KMM:
            return 1.0 + beta * p * p;
        case ModKind::Cosh:
            return std::cosh(std::sqrt(beta) * p);
        case ModKind::Quartic: {
            const double g = 1.0 + 0.5 * beta * p * p;
            return g * g;
        }
        case ModKind::EvenPolynomial: {
            // Horner in p^2: 1 + a_1 p^2 + a_2 p^4 + ...
            const double q = p * p;
            double acc = 0.0;
            for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
                acc = acc * q + *it;
            return 1.0 + acc * q;
        }
    }
    return 1.0;
}

bool Modification::grows() const {
    if (kind == ModKind::EvenPolynomial) {
        for (double a : coefficients)
            if (a > 0.0) return true;
        return false;
    }
    return true;
}

std::string Modification::kind_name() const {
    switch (kind) {
        case ModKind::KMM: return "kmm";
        case ModKind::Cosh: return "cosh";
        case ModKind::Quartic: return "quartic";
        case ModKind::EvenPolynomial: return "poly";
    }
    return "?";
}

namespace {

void require_positive_beta(double beta, const char* kind) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        std::ostringstream msg;
        msg << kind << ": beta must be positive and finite, got " << beta;
        throw validation_error(msg.str());
    }
}

}  // namespace

Modification Modification::kmm(double beta) {
    require_positive_beta(beta, "kmm");
    return {ModKind::KMM, beta, {}};
}

Modification Modification::cosh_type(double beta) {
    require_positive_beta(beta, "cosh");
    return {ModKind::Cosh, beta, {}};
}

Modification Modification::quartic(double beta) {
    require_positive_beta(beta, "quartic");
    return {ModKind::Quartic, beta, {}};
}

Modification Modification::even_polynomial(std::vector<double> coefficients) {
    Modification m;
    m.kind = ModKind::EvenPolynomial;
    m.beta = 1.0;
    m.coefficients = std::move(coefficients);
    for (double a : m.coefficients) {
        if (!std::isfinite(a)) {
            throw validation_error("poly: coefficients must be finite");
        }
    }
    return m;
}

bool ValidationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

// Sample points for the numerical screens: dense near the origin where
// the assumptions bite hardest, then log-spaced out to p_hi.
std::vector<double> sample_points(double scale, int count, double p_hi) {
    std::vector<double> pts;
    pts.reserve(count);
    const int linear = count / 2;
    for (int i = 1; i <= linear; ++i)
        pts.push_back(scale * 10.0 * i / linear);
    const int logn = count - linear;
    const double lo = std::log(scale * 1e-3);
    const double hi = std::log(p_hi);
    for (int i = 0; i < logn; ++i)
        pts.push_back(std::exp(lo + (hi - lo) * i / (logn - 1)));
    return pts;
}

}  // namespace

ValidationReport validate_modification(const Modification& mod,
                                       int sample_count) {
    if (sample_count < 8) sample_count = 8;
    ValidationReport report;
    const double scale =
        (mod.kind == ModKind::EvenPolynomial) ? 1.0 : 1.0 / std::sqrt(mod.beta);
    // A strongly growing f (the cosh family, steep polynomials) can
    // leave double range well inside the nominal probe window; pull the
    // tail in until the evaluations are representable.
    double p_hi = scale * 1e6;
    while (p_hi > 20.0 * scale && !std::isfinite(mod.f(p_hi))) p_hi *= 0.5;
    const std::vector<double> pts = sample_points(scale, sample_count, p_hi);

    // Assumption 1: f(0) = 1.
    {
        AssumptionCheck c;
        c.assumption = "normalization";
        const double f0 = mod.f(0.0);
        c.passed = std::isfinite(f0) && std::abs(f0 - 1.0) <= 1e-12;
        c.witness_p = 0.0;
        if (!c.passed) {
            std::ostringstream note;
            note << "f(0) = " << f0 << ", expected 1";
            c.note = note.str();
        }
        report.checks.push_back(c);
    }

    // Assumption 2: f is even.
    {
        AssumptionCheck c;
        c.assumption = "evenness";
        c.passed = true;
        c.witness_p = pts.back();
        for (double p : pts) {
            const double fp = mod.f(p);
            const double fm = mod.f(-p);
            if (!std::isfinite(fp) || !std::isfinite(fm)) {
                c.passed = false;
                c.witness_p = p;
                std::ostringstream note;
                note << "f not finite at p = " << p;
                c.note = note.str();
                break;
            }
            if (std::abs(fp - fm) > 1e-12 * std::max(1.0, std::abs(fp))) {
                c.passed = false;
                c.witness_p = p;
                std::ostringstream note;
                note << "f(p) - f(-p) = " << fp - fm << " at p = " << p;
                c.note = note.str();
                break;
            }
        }
        report.checks.push_back(c);
    }

    // Assumption 3: f convex on the positive half-line.  For the
    // polynomial family this is a structural screen on the sign of the
    // coefficients; every family is additionally probed with second
    // differences at the sample points.
    {
        AssumptionCheck c;
        c.assumption = "convexity";
        c.passed = true;
        c.witness_p = pts.back();

        if (mod.kind == ModKind::EvenPolynomial) {
            for (std::size_t n = 0; n < mod.coefficients.size(); ++n) {
                if (mod.coefficients[n] < 0.0) {
                    c.passed = false;
                    c.witness_p = 0.0;
                    std::ostringstream note;
                    note << "coefficient of p^" << 2 * (n + 1) << " is "
                         << mod.coefficients[n] << " < 0";
                    c.note = note.str();
                    break;
                }
            }
        }

        if (c.passed) {
            for (double p : pts) {
                const double dp = std::max(1e-4 * scale, 1e-6 * p);
                const double f0 = mod.f(p);
                const double fp = mod.f(p + dp);
                const double fm = mod.f(std::max(0.0, p - dp));
                if (!std::isfinite(f0) || !std::isfinite(fp) || !std::isfinite(fm)) {
                    c.passed = false;
                    c.witness_p = p;
                    std::ostringstream note;
                    note << "f not finite near p = " << p;
                    c.note = note.str();
                    break;
                }
                const double second = fp - 2.0 * f0 + fm;
                if (second < -1e-8 * std::max(1.0, std::abs(f0))) {
                    c.passed = false;
                    c.witness_p = p;
                    std::ostringstream note;
                    note << "second difference " << second << " at p = " << p;
                    c.note = note.str();
                    break;
                }
            }
        }
        report.checks.push_back(c);
    }

    return report;
}

}  // namespace gup
