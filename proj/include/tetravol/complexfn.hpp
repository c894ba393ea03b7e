#pragma once
// Special functions: dilogarithm, Lobachevsky function, the potential kernel
// L(x) with its period extension, and log of the double sine function S_b.

#include <complex>
#include <stdexcept>

namespace tetravol {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Modular parameter b in (0,1]; Q = b + 1/b.
struct ModularParam {
    double b;
    double Q;
    explicit ModularParam(double b_) : b(b_), Q(b_ + 1.0 / b_) {
        if (!(b > 0.0) || b > 1.0)
            throw std::domain_error("ModularParam: b must lie in (0,1]");
    }
};

// Li2(z), principal branch, cut along (1,inf); points on the cut are
// evaluated as the limit from above.  Relative accuracy ~1e-14 on |z| <= 2.
cplx dilog(cplx z);

// Lobachevsky function Lambda(theta) = -int_0^theta log|2 sin t| dt,
// pi-periodic odd extension.
double lobachevsky(double theta);

// L(x) = x^2 - pi x + pi^2/6 - Li2(e^{2ix}) on 0 <= Re x < pi, extended by
// L(x + pi) = L(x) + sgn(Im x) 2 pi x.
cplx l_potential(cplx x);
cplx l_potential_deriv(cplx x);

// log(2 sin w), stable for large |Im w|.
cplx log_two_sin(cplx w);

// log S_b(z).  The canonical value: strip-reduced via the shift relations
// (principal log per factor, one step at a time), then evaluated by a
// subtracted integral, a convergent series, or the quadratic asymptotic
// depending on |Im z|.  exp(log_double_sine) is canonical; the log itself is
// canonical up to the recorded shift bookkeeping.
cplx log_double_sine(cplx z, const ModularParam& p);

// Internal pieces, exposed for cross-validation in tests.
cplx log_double_sine_integral(cplx z, const ModularParam& p);
cplx log_double_sine_series(cplx z, const ModularParam& p, int nmax);

}  // namespace tetravol
