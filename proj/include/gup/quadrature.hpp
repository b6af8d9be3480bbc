#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "gup/errors.hpp"

namespace gup {

/// Result of an adaptive quadrature: the value, a conservative error
/// estimate, and how many panels were used to get there.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule.  Positive
// half of the node set; the rule is symmetric about the midpoint.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr double kGK15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// Weights of the embedded 7-point Gauss rule (nodes 1, 3, 5, 7 above).
inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15_panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kGK15Nodes[i]);
        fv[14 - i] = f(c + h * kGK15Nodes[i]);
    }
    fv[7] = f(c);

    double resk = kGK15Weights[7] * fv[7];
    double resg = kG7Weights[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += kGK15Weights[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1)
            resg += kG7Weights[i / 2] * (fv[i] + fv[14 - i]);
    }

    // Classic scaled error estimate: compare against the mean to make
    // the estimate insensitive to a large constant component.
    const double reskh = 0.5 * resk;
    double resasc = kGK15Weights[7] * std::abs(fv[7] - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kGK15Weights[i] *
                  (std::abs(fv[i] - reskh) + std::abs(fv[14 - i] - reskh));
    resasc *= std::abs(h);

    double err = std::abs(resk - resg) * std::abs(h) * 200.0;
    if (resasc != 0.0)
        err = resasc * std::min(1.0, std::pow(err / resasc, 1.5));

    return Panel{a, b, resk * h, err};
}

}  // namespace detail

/// Adaptive Gauss–Kronrod integration of f over [a, b].
///
/// Splits the interval with the worst error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol * |integral|).  Throws
/// accuracy_error (carrying the best estimate and the achieved bound)
/// if the panel budget is exhausted first.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                              double rel_tol, int max_panels = 4000) {
    if (a == b) return {0.0, 0.0, 0};

    std::priority_queue<detail::Panel> heap;
    heap.push(detail::gk15_panel(f, a, b));
    double total_value = heap.top().value;
    double total_error = heap.top().error;
    int panels = 1;

    while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
        if (panels >= max_panels)
            throw accuracy_error("quadrature: panel budget exhausted",
                                 total_value, total_error);
        detail::Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw accuracy_error("quadrature: interval at machine resolution",
                                 total_value, total_error);
        detail::Panel left = detail::gk15_panel(f, worst.a, mid);
        detail::Panel right = detail::gk15_panel(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    return {total_value, total_error, panels};
}

}  // namespace gup
