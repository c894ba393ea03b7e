#pragma once
// Adaptive Gauss-Kronrod (G7,K15) quadrature for complex-valued integrands
// on a real interval.  Panels are split recursively where the embedded error
// estimate exceeds the local budget.

#include <cmath>
#include <complex>
#include <vector>

namespace tetravol {

using cplx = std::complex<double>;

struct QuadResult {
    cplx value{0.0, 0.0};
    double error = 0.0;   // accumulated error estimate
    long evals = 0;       // integrand evaluations
    bool converged = true;
};

namespace detail {

// K15 abscissae on [0,1] (symmetric) and weights; G7 weights on the odd nodes.
inline constexpr double kGK15Node[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kGK15WK[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kGK15WG[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

template <class F>
inline void gk15_panel(F& f, double a, double b, cplx& k15, double& err) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    cplx fc = f(c);
    cplx kr = kGK15WK[0] * fc;
    cplx gr = kGK15WG[0] * fc;
    for (int i = 1; i < 8; ++i) {
        const double x = h * kGK15Node[i];
        cplx s = f(c - x) + f(c + x);
        kr += kGK15WK[i] * s;
        if (i % 2 == 0) gr += kGK15WG[i / 2] * s;
    }
    k15 = kr * h;
    const double d = std::abs(kr - gr) * h;
    // standard conservative sharpening of the embedded estimate
    err = (d > 0.0) ? std::min(d, std::pow(200.0 * d, 1.5)) : 0.0;
}

}  // namespace detail

template <class F>
QuadResult integrate_gk(F&& f, double a, double b, double tol,
                        int max_depth = 15, int initial_panels = 8) {
    QuadResult out;
    struct Seg {
        double a, b;
        int depth;
    };
    // explicit stack; deterministic depth-first refinement
    std::vector<Seg> stack;
    stack.reserve(64);
    const double w0 = (b - a) / initial_panels;
    for (int i = initial_panels - 1; i >= 0; --i)
        stack.push_back({a + i * w0, a + (i + 1) * w0, 0});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        cplx v;
        double e;
        detail::gk15_panel(f, s.a, s.b, v, e);
        out.evals += 15;
        const double budget = tol * (s.b - s.a) / (b - a);
        if (e <= budget || s.depth >= max_depth) {
            out.value += v;
            out.error += e;
            if (e > budget) out.converged = false;
            continue;
        }
        const double m = 0.5 * (s.a + s.b);
        stack.push_back({m, s.b, s.depth + 1});
        stack.push_back({s.a, m, s.depth + 1});
    }
    return out;
}

}  // namespace tetravol
