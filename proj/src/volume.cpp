#include "tetravol/volume.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tetravol {

namespace {
const cplx kIu{0.0, 1.0};
}

RescaledParams params_from_alpha(const std::array<cplx, 6>& a) {
    RescaledParams p;
    p.alpha = a;
    p.tau = {a[0] + a[1] + a[2], a[0] + a[4] + a[5], a[1] + a[3] + a[5],
             a[2] + a[3] + a[4]};
    p.eta = {a[0] + a[1] + a[3] + a[4], a[0] + a[2] + a[3] + a[5],
             a[1] + a[2] + a[4] + a[5], cplx{2.0 * kPi, 0.0}};
    return p;
}

RescaledParams rescale(const SixC& input, ScaleMode mode) {
    std::array<cplx, 6> a;
    for (int k = 0; k < 6; ++k)
        a[k] = (mode == ScaleMode::LengthScaling)
                   ? cplx{0.5 * kPi, 0.0} + 0.5 * kIu * input[k]
                   : 0.5 * (kPi + input[k]);
    return params_from_alpha(a);
}

std::array<cplx, 6> u_from_alpha(const std::array<cplx, 6>& alpha) {
    std::array<cplx, 6> u;
    for (int k = 0; k < 6; ++k) u[k] = std::exp(2.0 * kIu * alpha[k]);
    return u;
}

Quadratic critical_quadratic(const std::array<cplx, 6>& u) {
    auto acoef = [](const std::array<cplx, 6>& v) {
        return v[0] * v[3] + v[1] * v[4] + v[2] * v[5] - v[0] * v[1] * v[5] -
               v[0] * v[2] * v[4] - v[1] * v[2] * v[3] - v[3] * v[4] * v[5] +
               v[0] * v[1] * v[2] * v[3] * v[4] * v[5];
    };
    std::array<cplx, 6> inv;
    for (int k = 0; k < 6; ++k) inv[k] = 1.0 / u[k];
    Quadratic q;
    q.A = acoef(u);
    q.C = acoef(inv);
    q.B = 0.0;
    for (int k = 0; k < 3; ++k)
        q.B -= (u[k] - inv[k]) * (u[k + 3] - inv[k + 3]);
    return q;
}

cplx potential_U(cplx xi, const RescaledParams& p) {
    cplx c{0.0, 0.0};
    for (const cplx& e : p.eta)
        for (const cplx& t : p.tau) c -= 0.5 * l_potential(e - t);
    for (const cplx& t : p.tau) c += l_potential(xi - t);
    for (const cplx& e : p.eta) c += l_potential(e - xi);
    return c;
}

UDerivs potential_U_derivs(cplx xi, const RescaledParams& p) {
    UDerivs d;
    d.d1 = {0.0, 0.0};
    for (const cplx& t : p.tau) d.d1 += l_potential_deriv(xi - t);
    for (const cplx& e : p.eta) d.d1 -= l_potential_deriv(e - xi);
    const std::array<cplx, 6> u = u_from_alpha(p.alpha);
    const cplx z = std::exp(-2.0 * kIu * xi);
    const cplx taup[4] = {u[0] * u[1] * u[2], u[0] * u[4] * u[5],
                          u[1] * u[3] * u[5], u[2] * u[3] * u[4]};
    const cplx etap[4] = {cplx{1.0, 0.0}, u[0] * u[1] * u[3] * u[4],
                          u[0] * u[2] * u[3] * u[5], u[1] * u[2] * u[4] * u[5]};
    cplx s{0.0, 0.0};
    for (int i = 0; i < 4; ++i) s += z * etap[i] / (1.0 - z * etap[i]);
    for (int i = 0; i < 4; ++i) s -= z * taup[i] / (1.0 - z * taup[i]);
    d.d2 = -4.0 * s;
    return d;
}

cplx kappa(cplx xi, const RescaledParams& p) {
    cplx sa{0.0, 0.0};
    for (const cplx& a : p.alpha) sa += a;
    cplx out = 8.0 * kPi * kPi + 14.0 * kPi * sa - 28.0 * kPi * xi;
    for (const cplx& t : p.tau)
        out -= 4.0 * kIu * kPi * std::log(1.0 - std::exp(2.0 * kIu * (xi - t)));
    for (const cplx& e : p.eta)
        out += 3.0 * kIu * kPi * std::log(1.0 - std::exp(2.0 * kIu * (e - xi)));
    return out;
}

CriticalPoint make_critical_point(const RescaledParams& p, bool plus_root) {
    const Quadratic q = critical_quadratic(u_from_alpha(p.alpha));
    const cplx sq = std::sqrt(q.disc());
    CriticalPoint cp;
    cp.plus_root = plus_root;
    cp.z_star = (-q.B + (plus_root ? sq : -sq)) / (2.0 * q.A);
    cp.xi_star = 2.0 * kPi + 0.5 * kIu * std::log(cp.z_star);
    cp.U_value = potential_U(cp.xi_star, p);
    const UDerivs d = potential_U_derivs(cp.xi_star, p);
    cp.U_second = d.d2;
    cp.kappa_value = kappa(cp.xi_star, p);
    return cp;
}

namespace {

// angle-scaled parameters: the opposite-pair ordering aligns the scaled slots
// with the Gram layout used throughout
RescaledParams angle_params(const SixC& theta) {
    SixC swapped;
    for (int k = 0; k < 6; ++k) swapped[k] = theta[kOpp[k]];
    return rescale(swapped, ScaleMode::AngleScaling);
}

}  // namespace

HypAngleVolume hyperbolic_volume_from_angles(const Six& theta) {
    SixC th;
    for (int k = 0; k < 6; ++k) th[k] = theta[k];
    HypAngleVolume out;
    out.p = angle_params(th);
    double lo = -1e300, hi = 1e300;
    for (const cplx& t : out.p.tau) lo = std::max(lo, t.real());
    for (const cplx& e : out.p.eta) hi = std::min(hi, e.real());
    if (!(lo < hi))
        throw std::domain_error("hyperbolic_volume_from_angles: empty critical interval");
    // V' > 0 at the left end of (max tau, min eta); bisect to the zero
    auto vprime = [&](double x) {
        double s = 0.0;
        for (const cplx& t : out.p.tau)
            s -= std::log(std::abs(2.0 * std::sin(x - t.real())));
        for (const cplx& e : out.p.eta)
            s += std::log(std::abs(2.0 * std::sin(e.real() - x)));
        return s;
    };
    double a = lo + 1e-13, b = hi - 1e-13;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        (vprime(m) > 0.0 ? a : b) = m;
    }
    out.xi_star = 0.5 * (a + b);
    out.U_value = potential_U(cplx{out.xi_star, 0.0}, out.p);
    out.vol = (kIu * out.U_value / 2.0).real();
    return out;
}

AdsAngleVolume ads_volume_from_angles(const SixC& theta) {
    AdsAngleVolume out;
    out.p = angle_params(theta);
    out.accepted = make_critical_point(out.p, true);
    out.rejected = make_critical_point(out.p, false);
    const UDerivs d = potential_U_derivs(out.accepted.xi_star, out.p);
    if (std::abs(d.d1) > 1e-8)
        throw std::domain_error("ads_volume_from_angles: accepted root is not critical");
    out.vol = 0.5 * out.accepted.U_value.real();
    if (std::abs(out.accepted.U_value.imag()) > 1e-8)
        throw std::domain_error("ads_volume_from_angles: potential not real at xi*");
    return out;
}

AdsLengthPotential ads_potential_from_lengths(const Six& l) {
    SixC lc;
    for (int k = 0; k < 6; ++k) lc[k] = l[k];
    AdsLengthPotential out;
    out.p = rescale(lc, ScaleMode::LengthScaling);
    out.xi1 = make_critical_point(out.p, false);  // the -sqrt root
    out.xi2 = make_critical_point(out.p, true);
    for (const CriticalPoint* cp : {&out.xi1, &out.xi2}) {
        if (std::abs(cp->z_star.imag()) > 1e-8 * std::abs(cp->z_star) ||
            cp->z_star.real() <= 0.0)
            throw std::domain_error("ads_potential_from_lengths: roots not positive real");
    }
    out.W = out.xi1.U_value;
    out.cov = 0.5 * out.W.real();
    out.cov_tilde = -0.5 * out.W.imag();
    return out;
}

AdsVolume ads_volume_from_lengths(const Six& l) {
    AdsVolume out;
    const AdsLengthPotential base = ads_potential_from_lengths(l);
    double grad_term = 0.0;
    for (int k = 0; k < 6; ++k) {
        const double h = 1e-5 * std::max(1.0, std::abs(l[k]));
        Six lp = l, lm = l;
        lp[k] += h;
        lm[k] -= h;
        const double d = (ads_potential_from_lengths(lp).W.real() -
                          ads_potential_from_lengths(lm).W.real()) /
                         (2.0 * h);
        grad_term += d * l[k];
    }
    out.vol_gradient = 0.5 * (base.W.real() - grad_term);
    const SixC th = angles_from_lengths(l, TetraClass::AntiDeSitter);
    double s = 0.0;
    for (int k = 0; k < 6; ++k) s += th[k].imag() * l[k];
    out.vol_legendre = base.cov - 0.5 * s;
    return out;
}

std::array<double, 9> piecewise_slope_profile(const RescaledParams& p) {
    std::vector<double> lev;
    for (const cplx& t : p.tau) lev.push_back(t.imag());
    for (const cplx& e : p.eta) lev.push_back(e.imag());
    std::sort(lev.begin(), lev.end());
    const double re = 2.0 * kPi;
    std::array<double, 9> slopes;
    std::vector<double> pts;
    pts.push_back(lev.front() - 1.0);
    for (size_t i = 0; i + 1 < lev.size(); ++i)
        pts.push_back(0.5 * (lev[i] + lev[i + 1]));
    pts.push_back(lev.back() + 1.0);
    for (size_t i = 0; i < 9; ++i) {
        // d Im U / d Im xi = Re U'
        const UDerivs d = potential_U_derivs(cplx{re, pts[i]}, p);
        slopes[i] = d.d1.real();
    }
    return slopes;
}

cplx nu_correction(cplx xi, const SixC& a, const ModularParam& mp) {
    const double b = mp.b;
    std::array<cplx, 6> alpha;
    for (int k = 0; k < 6; ++k) alpha[k] = kPi * b * a[k] - 0.5 * kPi * b * b;
    const RescaledParams p = params_from_alpha(alpha);
    const cplx t[4] = {a[0] + a[1] + a[2], a[0] + a[4] + a[5],
                       a[1] + a[3] + a[5], a[2] + a[3] + a[4]};
    const cplx q[4] = {a[0] + a[1] + a[3] + a[4], a[0] + a[2] + a[3] + a[5],
                       a[1] + a[2] + a[4] + a[5], cplx{2.0 * mp.Q, 0.0}};
    const cplx u = xi / (kPi * b);
    cplx lsum{0.0, 0.0}, lpre{0.0, 0.0};
    for (int i = 0; i < 4; ++i) lsum += log_double_sine(u - t[i], mp);
    for (int j = 0; j < 4; ++j) lsum += log_double_sine(q[j] - u, mp);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) lpre += log_double_sine(q[j] - t[i], mp);
    const cplx Uab = 2.0 * kPi * kIu * b * b * (lsum - 0.5 * lpre);
    return (Uab - potential_U(xi, p) - kappa(xi, p) * b * b) / (b * b * b * b);
}

}  // namespace tetravol
