#pragma once

#include <string>
#include <vector>

#include "gup/errors.hpp"

namespace gup {

/// The built-in commutator modification families.
enum class ModKind {
    KMM,             ///< f(p) = 1 + beta p^2
    Cosh,            ///< f(p) = cosh(sqrt(beta) p)
    Quartic,         ///< f(p) = (1 + beta p^2 / 2)^2
    EvenPolynomial,  ///< f(p) = 1 + sum_n a_n p^(2n), a_n >= 0
};

/// A modification function f(p) defining the deformed commutator
/// [x, p] = i f(p).  Admissible modifications satisfy f(0) = 1, are
/// even, and are convex on the positive half-line; those properties
/// are what validate_modification screens for.
struct Modification {
    ModKind kind = ModKind::KMM;
    double beta = 1.0;
    /// EvenPolynomial only: coefficients[n-1] multiplies p^(2n).
    std::vector<double> coefficients;

    /// Evaluate f at momentum p.
    double f(double p) const;

    /// True if f grows at infinity (equivalently: the momentum
    /// cut-off integral has a chance of converging).
    bool grows() const;

    std::string kind_name() const;

    static Modification kmm(double beta);
    static Modification cosh_type(double beta);
    static Modification quartic(double beta);
    static Modification even_polynomial(std::vector<double> coefficients);
};

/// Outcome of screening one admissibility assumption.
struct AssumptionCheck {
    std::string assumption;  ///< "normalization", "evenness", "convexity"
    bool passed = false;
    double witness_p = 0.0;  ///< failing point, or largest point examined
    std::string note;
};

struct ValidationReport {
    std::vector<AssumptionCheck> checks;
    bool all_passed() const;
};

/// Screen a modification against the admissibility assumptions by
/// structural inspection plus numerical sampling at sample_count
/// points spanning several orders of magnitude in p.
ValidationReport validate_modification(const Modification& mod,
                                       int sample_count = 256);

}  // namespace gup
