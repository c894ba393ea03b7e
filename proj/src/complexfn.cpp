#include "tetravol/complexfn.hpp"

#include <algorithm>
#include <cmath>

#include "tetravol/quadrature.hpp"

namespace tetravol {

namespace {

const cplx kI{0.0, 1.0};

// Li2 power series, |z| <= 0.5.
cplx dilog_series(cplx z) {
    cplx term = z, sum = z;
    for (int n = 2; n < 80; ++n) {
        term *= z;
        cplx add = term / double(n * n);
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Li2 via the Bernoulli expansion in w = -log(1-z); fast for z near the unit
// circle with Re z <= 0.5.
cplx dilog_log_series(cplx z) {
    static const double c[15] = {
        0.0277777777777777778,    -0.000277777777777777778,
        4.72411186696900983e-6,   -9.18577307466196355e-8,
        1.89788699889709991e-9,   -4.06476164514422553e-11,
        8.92169102045645256e-13,  -1.99392958607210757e-14,
        4.51898002961991819e-16,  -1.0356517612181247e-17,
        2.39521862102618675e-19,  -5.58178587432500934e-21,
        1.30915075541832129e-22,  -3.08741980242674029e-24,
        7.31597565270220342e-26};
    const cplx w = -std::log(1.0 - z);
    const cplx w2 = w * w;
    cplx sum = w - 0.25 * w2;
    cplx wp = w;  // w^{2k+1}
    for (int k = 0; k < 15; ++k) {
        wp *= w2;
        cplx add = c[k] * wp;
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

constexpr double kPi2_6 = kPi * kPi / 6.0;

}  // namespace

cplx dilog(cplx z) {
    if (z == cplx{0.0, 0.0}) return {0.0, 0.0};
    if (z == cplx{1.0, 0.0}) return {kPi2_6, 0.0};
    // cut (1,inf): evaluate as the limit from above
    if (z.imag() == 0.0 && z.real() > 1.0) z = {z.real(), 1e-300};
    if (std::abs(z) > 1.0) {
        // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2/2
        cplx lz = std::log(-z);
        return -dilog(1.0 / z) - kPi2_6 - 0.5 * lz * lz;
    }
    if (z.real() > 0.5) {
        // reflection: Li2(z) = pi^2/6 - log(z)log(1-z) - Li2(1-z)
        return kPi2_6 - std::log(z) * std::log(1.0 - z) - dilog(1.0 - z);
    }
    if (std::abs(z) <= 0.5) return dilog_series(z);
    return dilog_log_series(z);
}

double lobachevsky(double theta) {
    // reduce to [0, pi): pi-periodic
    double t = theta - kPi * std::floor(theta / kPi);
    if (t == 0.0) return 0.0;
    // Li2(e^{2 i t}) = t^2 - pi t + pi^2/6 + 2 i Lambda(t)
    return 0.5 * dilog(std::exp(cplx{0.0, 2.0 * t})).imag();
}

namespace {

// base strip 0 <= Re y < pi, value by continuity from inside
cplx l_base(cplx y) {
    return y * y - kPi * y + kPi2_6 - dilog(std::exp(2.0 * kI * y));
}

}  // namespace

cplx l_potential(cplx x) {
    const long k = (long)std::floor(x.real() / kPi + 1e-13);
    cplx y = x - double(k) * kPi;
    if (std::abs(y.real()) < 1e-13) y = {0.0, y.imag()};
    const double s = (x.imag() > 0) ? 1.0 : ((x.imag() < 0) ? -1.0 : 0.0);
    return l_base(y) + s * 2.0 * kPi * (double(k) * x - kPi * 0.5 * double(k) * double(k + 1));
}

cplx l_potential_deriv(cplx x) {
    const long k = (long)std::floor(x.real() / kPi + 1e-13);
    cplx y = x - double(k) * kPi;
    if (std::abs(y.real()) < 1e-13) y = {0.0, y.imag()};
    const double s = (x.imag() > 0) ? 1.0 : ((x.imag() < 0) ? -1.0 : 0.0);
    const cplx ey = std::exp(2.0 * kI * y);
    cplx lg;
    if (ey.imag() == 0.0 && ey.real() > 1.0) {
        // 1 - ey on the negative real axis; limit from Re y -> 0+ gives arg -> -pi
        lg = {std::log(ey.real() - 1.0), -kPi};
    } else {
        lg = std::log(1.0 - ey);
    }
    return 2.0 * y - kPi + 2.0 * kI * lg + s * 2.0 * kPi * double(k);
}

cplx log_two_sin(cplx w) {
    if (w.imag() > 20.0)
        return kI * kPi / 2.0 - kI * w + std::log(1.0 - std::exp(2.0 * kI * w));
    if (w.imag() < -20.0)
        return -kI * kPi / 2.0 + kI * w + std::log(1.0 - std::exp(-2.0 * kI * w));
    return std::log(2.0 * std::sin(w));
}

namespace {

// Taylor coefficients of the subtracted integrand near t = 0:
// f(t) - w/t^2 = w * num(t^2)/den(t^2).
struct SmallT {
    cplx num[4];
    double den[5];
};

SmallT smallt_coeffs(cplx w, double b) {
    static const double s[5] = {1.0, 1.0 / 6.0, 1.0 / 120.0, 1.0 / 5040.0,
                                1.0 / 362880.0};
    const double u1 = 0.25 * b * b;
    const double u2 = 0.25 / (b * b);
    const cplx w2 = w * w;
    const cplx n[4] = {w2 / 6.0, w2 * w2 / 120.0, w2 * w2 * w2 / 5040.0,
                       w2 * w2 * w2 * w2 / 362880.0};
    double d[5] = {0, 0, 0, 0, 0};
    double p1 = 1.0;
    for (int k = 0; k < 5; ++k) {
        double p2 = 1.0;
        for (int j = 0; j < 5; ++j) {
            if (k + j >= 1 && k + j <= 4) d[k + j] += s[k] * s[j] * p1 * p2;
            p2 *= u2;
        }
        p1 *= u1;
    }
    SmallT out;
    for (int i = 0; i < 4; ++i) out.num[i] = n[i] - d[i + 1];
    out.den[0] = 1.0;
    for (int i = 1; i < 5; ++i) out.den[i] = d[i];
    return out;
}

// e^{2 pi i u} - 1, stable near integers
cplx ef(double u) {
    const double sp = std::sin(kPi * u);
    return {-2.0 * sp * sp, std::sin(2.0 * kPi * u)};
}

// e^w - 1, stable for small |w|
cplx cexpm1(cplx w) {
    const double ex = std::expm1(w.real());
    const double si = std::sin(w.imag());
    const double cm1 = -2.0 * std::sin(0.5 * w.imag()) * std::sin(0.5 * w.imag());
    const double ci = 1.0 + cm1;
    return {ex * ci + cm1, (ex + 1.0) * si};
}

}  // namespace

cplx log_double_sine_integral(cplx z, const ModularParam& p) {
    const double Q = p.Q, b = p.b;
    const cplx w = 0.5 * Q - z;
    const double d = 0.5 * Q - std::abs(w.real());
    if (!(d > 0.0))
        throw std::domain_error("log_double_sine_integral: Re z outside strip");
    const double R = 70.0 / d;
    const SmallT st = smallt_coeffs(w, b);
    const double S = std::max({std::abs(w), 0.5 * b, 0.5 / b});
    auto f = [&](double t) -> cplx {
        if (S * t < 0.05) {
            const double t2 = t * t;
            const cplx ns =
                ((st.num[3] * t2 + st.num[2]) * t2 + st.num[1]) * t2 + st.num[0];
            const double ds =
                (((st.den[4] * t2 + st.den[3]) * t2 + st.den[2]) * t2 + st.den[1]) *
                    t2 +
                st.den[0];
            return w * ns / ds;
        }
        return (std::exp(-z * t) - std::exp(-(Q - z) * t)) /
                   (2.0 * t * (-std::expm1(-b * t)) * (-std::expm1(-t / b))) -
               w / (t * t);
    };
    QuadResult q = integrate_gk(f, 0.0, R, 1e-13, 16, 16);
    return 2.0 * q.value - 2.0 * w / R;
}

cplx log_double_sine_series(cplx z, const ModularParam& p, int nmax) {
    const double Q = p.Q, b = p.b;
    const double beta = b * b;
    cplx out = -(kPi * kI / 2.0) * z * (z - Q) - kPi * kI / 12.0 * (Q * Q + 1.0);
    const cplx x1 = std::exp(2.0 * kI * kPi * b * z);
    const cplx x2 = std::exp(2.0 * kI * kPi * z / b);
    std::vector<char> consumed(nmax + 2, 0);
    cplx x1n = 1.0;
    for (int n = 1; n <= nmax; ++n) {
        x1n = (n % 64 == 0) ? std::pow(x1, n) : x1n * x1;
        const long m = std::lround(beta * n);
        const double u = beta * n - double(m);
        // stabilized pairing of the x2^m term with the nearest-resonant x1^n
        if (m >= 1 && m <= nmax && std::abs(u) < 0.25 &&
            n == std::lround(double(m) / beta) && !consumed[m]) {
            consumed[m] = 1;
            cplx g;
            if (u == 0.0) {
                g = z / (b * n) - 1.0 / (2.0 * kI * kPi * beta * double(n) * double(n)) -
                    0.5 / double(n) - 0.5 / double(m);
            } else {
                const cplx e = -2.0 * kI * kPi * u * z / b;
                const cplx Y = std::exp(e);
                const cplx first = (double(m) * (-cexpm1(e)) - u * Y) /
                                   (2.0 * kI * kPi * u * double(n) * double(m));
                const cplx h1 = 1.0 / ef(u) - 1.0 / (2.0 * kI * kPi * u);
                const cplx h2 = 1.0 / ef(-u / beta) + beta / (2.0 * kI * kPi * u);
                g = first + h1 / double(n) + Y * h2 / double(m);
            }
            out += -x1n * g;
        } else {
            out += -x1n / (double(n) * ef(beta * n));
        }
    }
    cplx x2m = 1.0;
    for (int m = 1; m <= nmax; ++m) {
        x2m = (m % 64 == 0) ? std::pow(x2, m) : x2m * x2;
        if (consumed[m]) continue;
        out += -x2m / (double(m) * ef(double(m) / beta));
    }
    return out;
}

cplx log_double_sine(cplx z, const ModularParam& p) {
    const double Q = p.Q, b = p.b;
    const double small = std::min(b, 1.0 / b);
    const double big = std::max(b, 1.0 / b);
    cplx corr{0.0, 0.0};
    // center Re z in [Q/2 - s/2, Q/2 + s/2) using the two shift relations;
    // coarse steps with the larger period first
    for (double step : {big, small}) {
        while (z.real() - 0.5 * Q >= 0.5 * step) {
            z -= step;
            corr += log_two_sin(kPi * z * step);
        }
        while (z.real() - 0.5 * Q < -0.5 * step) {
            corr -= log_two_sin(kPi * z * step);
            z += step;
        }
    }
    const double ai = std::abs(z.imag());
    if (ai >= 30.0 / (2.0 * kPi * small)) {
        const cplx w = (z.imag() > 0) ? z : std::conj(z);
        const cplx out = -(kPi * kI / 2.0) * w * (w - Q) - kPi * kI / 12.0 * (Q * Q + 1.0);
        return corr + ((z.imag() > 0) ? out : std::conj(out));
    }
    if (ai >= 0.45) {
        const int nmax =
            std::max(300, (int)std::ceil(40.0 / (2.0 * kPi * small * ai)));
        if (z.imag() > 0) return corr + log_double_sine_series(z, p, nmax);
        return corr + std::conj(log_double_sine_series(std::conj(z), p, nmax));
    }
    return corr + log_double_sine_integral(z, p);
}

}  // namespace tetravol
