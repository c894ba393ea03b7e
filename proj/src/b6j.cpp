#include "tetravol/b6j.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tetravol/quadrature.hpp"
#include "tetravol/volume.hpp"

namespace tetravol {

namespace {
const cplx kIu{0.0, 1.0};

void fill_tq(B6jParams& p) {
    const auto& a = p.a;
    p.t = {a[0] + a[1] + a[2], a[0] + a[4] + a[5], a[1] + a[3] + a[5],
           a[2] + a[3] + a[4]};
    p.q = {a[0] + a[1] + a[3] + a[4], a[0] + a[2] + a[3] + a[5],
           a[1] + a[2] + a[4] + a[5], cplx{2.0 * p.Q, 0.0}};
    p.admissible = true;
    for (const cplx& q : p.q)
        for (const cplx& t : p.t) {
            const double d = (q - t).real();
            if (!(d > 0.0 && d < p.Q)) p.admissible = false;
        }
}

}  // namespace

B6jParams make_params_raw(const SixC& a, double b) {
    B6jParams p;
    p.a = a;
    p.b = b;
    p.Q = b + 1.0 / b;
    p.mode = EntryMode::RawEntries;
    fill_tq(p);
    return p;
}

B6jParams make_params(EntryMode mode, const SixC& values, double b) {
    if (mode == EntryMode::RawEntries) return make_params_raw(values, b);
    const double Q = b + 1.0 / b;
    SixC a;
    if (mode == EntryMode::LengthEntries) {
        for (int k = 0; k < 6; ++k)
            a[k] = 0.5 * Q + kIu * values[k].real() / (2.0 * kPi * b);
    } else {
        // angle entries carry the opposite-pair ordering of the asymptotic laws
        if (mode == EntryMode::AdSAngleEntries && pi_pair_slot(values) < 0)
            throw std::domain_error("make_params: AdS angle tuple has no pi-pair");
        for (int k = 0; k < 6; ++k)
            a[k] = 0.5 * Q + values[kOpp[k]] / (2.0 * kPi * b);
    }
    B6jParams p = make_params_raw(a, b);
    p.mode = mode;
    if (!p.admissible)
        throw std::domain_error("make_params: parameters are not b-admissible");
    return p;
}

namespace {

// max Re(log integrand) along the vertical line Re u = c
double line_peak(const B6jParams& p, const ModularParam& mp, double c,
                 double T) {
    double peak = -1e300;
    const int n = 24;
    for (int i = 0; i <= n; ++i) {
        const cplx u{c, -T + 2.0 * T * double(i) / n};
        cplx s{0.0, 0.0};
        for (const cplx& t : p.t) s += log_double_sine(u - t, mp);
        for (const cplx& q : p.q) s += log_double_sine(q - u, mp);
        peak = std::max(peak, s.real());
    }
    return peak;
}

}  // namespace

ContourSpec default_contour(const B6jParams& p, const QuadratureConfig& qc) {
    double lo = -1e300, hi = 1e300, t0 = 0.0;
    for (const cplx& t : p.t) {
        lo = std::max(lo, t.real());
        t0 = std::max(t0, std::abs(t.imag()));
    }
    for (const cplx& q : p.q) {
        hi = std::min(hi, q.real());
        t0 = std::max(t0, std::abs(q.imag()));
    }
    ContourSpec cs;
    cs.T = t0 + 3.0 + std::log(1.0 / qc.tol) / (2.0 * kPi * p.Q);
    // the integrand is oscillatory: place the line through the min-max
    // abscissa (the saddle altitude), else the quadrature loses the value to
    // cancellation once the peak dwarfs the integral
    const double w = hi - lo;
    const ModularParam mp(p.b);
    double best = lo + 0.5 * w, bestpeak = 1e300;
    for (int j = 1; j <= 13; ++j) {
        const double c = lo + w * double(j) / 14.0;
        const double peak = line_peak(p, mp, c, cs.T);
        if (peak < bestpeak) {
            bestpeak = peak;
            best = c;
        }
    }
    cs.c = std::min(std::max(best + qc.shift * w, lo + 0.02 * w),
                    hi - 0.02 * w);
    cs.points = {cplx{cs.c, -cs.T}, cplx{cs.c, cs.T}};
    return cs;
}

ContourSpec deformed_contour(const B6jParams& p, const QuadratureConfig& qc) {
    ContourSpec cs = default_contour(p, qc);
    cs.points.clear();
    // band-wise deformation: cross each horizontal pole line at the midpoint
    // of its allowed window
    cs.deformed = true;
    double L = 0.0;
    for (const cplx& t : p.t) L = std::max(L, std::abs(t.imag()));
    L += 1.0;
    struct Band {
        double y, a, b;
    };
    std::vector<Band> bands;
    for (const cplx& t : p.t)
        bands.push_back({t.imag(), t.real(), t.real() + p.Q});
    for (const cplx& q : p.q)
        bands.push_back({q.imag(), q.real() - p.Q, q.real()});
    std::sort(bands.begin(), bands.end(),
              [](const Band& x, const Band& y) { return x.y < y.y; });
    // merge coincident levels by interval intersection
    std::vector<Band> merged;
    for (const Band& b : bands) {
        if (!merged.empty() && std::abs(b.y - merged.back().y) < 1e-9) {
            merged.back().a = std::max(merged.back().a, b.a);
            merged.back().b = std::min(merged.back().b, b.b);
        } else {
            merged.push_back(b);
        }
    }
    cs.points.push_back(cplx{cs.c, -cs.T});
    cs.points.push_back(cplx{cs.c, -L});
    double prev = -L;
    for (size_t i = 0; i < merged.size(); ++i) {
        if (merged[i].y <= -L || merged[i].y >= L) continue;
        const double next =
            (i + 1 < merged.size() && merged[i + 1].y < L) ? merged[i + 1].y : L;
        const double g =
            std::min(merged[i].y - prev, next - merged[i].y) / 3.0;
        const double x = 0.5 * (merged[i].a + merged[i].b);
        cs.points.push_back(cplx{x, merged[i].y - g});
        cs.points.push_back(cplx{x, merged[i].y + g});
        prev = merged[i].y;
    }
    cs.points.push_back(cplx{cs.c, L});
    cs.points.push_back(cplx{cs.c, cs.T});
    return cs;
}

namespace {

struct LogIntegrand {
    const B6jParams* p;
    const ModularParam mp;
    mutable long evals = 0;
    explicit LogIntegrand(const B6jParams& params)
        : p(&params), mp(params.b) {}
    cplx operator()(cplx u) const {
        cplx s{0.0, 0.0};
        for (const cplx& t : p->t) s += log_double_sine(u - t, mp);
        for (const cplx& q : p->q) s += log_double_sine(q - u, mp);
        evals += 8;
        return s;
    }
};

}  // namespace

B6jEvaluation evaluate(const B6jParams& p, const ContourSpec& contour,
                       const QuadratureConfig& qc) {
    if (!p.admissible)
        throw std::domain_error("evaluate: parameters are not b-admissible");
    LogIntegrand li(p);
    const ModularParam mp(p.b);
    cplx lp{0.0, 0.0};
    for (const cplx& q : p.q)
        for (const cplx& t : p.t) {
            lp += log_double_sine(q - t, mp);
            ++li.evals;
        }
    // reference magnitude from a coarse scan, to keep exponentials in range
    double M = -1e300, maxlog = 0.0;
    for (size_t s = 0; s + 1 < contour.points.size(); ++s) {
        const cplx p0 = contour.points[s], p1 = contour.points[s + 1];
        const int n = 24;
        for (int i = 0; i <= n; ++i) {
            const cplx lg = li(p0 + (p1 - p0) * (double(i) / n));
            M = std::max(M, lg.real());
            maxlog = std::max(maxlog, std::abs(lg.real()));
        }
    }
    cplx I{0.0, 0.0};
    double qerr = 0.0;
    bool ok = true;
    for (size_t s = 0; s + 1 < contour.points.size(); ++s) {
        const cplx p0 = contour.points[s], p1 = contour.points[s + 1];
        auto f = [&](double x) { return std::exp(li(p0 + (p1 - p0) * x) - M) * (p1 - p0); };
        QuadResult r = integrate_gk(f, 0.0, 1.0, qc.tol, qc.max_depth, 8);
        I += r.value;
        qerr += r.error;
        ok = ok && r.converged;
    }
    B6jEvaluation out;
    out.contour = contour;
    out.sb_evals = li.evals;
    const double tail =
        (std::exp((li(contour.points.front()) - M).real()) +
         std::exp((li(contour.points.back()) - M).real())) /
        (2.0 * kPi * p.Q);
    out.tail_bound = tail;
    const double denom = std::max(std::abs(I), 1e-280);
    out.rel_error = (qerr + tail) / denom +
                    16.0 * 2.22e-16 * double(li.evals) *
                        std::max(maxlog, 0.5 * std::abs(lp.real()));
    if (!ok) out.rel_error = std::max(out.rel_error, 1e-3);
    out.log_value = -0.5 * lp + M + std::log(I);
    out.value = std::exp(out.log_value);
    return out;
}

B6jEvaluation evaluate(const B6jParams& p, const QuadratureConfig& qc) {
    return evaluate(p, default_contour(p, qc), qc);
}

namespace {

double rel_dev(const cplx& la, const cplx& lb) {
    return std::abs(std::exp(la - lb) - 1.0);
}

}  // namespace

SymmetryReport check_tetrahedral_symmetry(const B6jParams& p,
                                          const QuadratureConfig& qc) {
    static const int perms[4][6] = {{0, 1, 2, 3, 4, 5},
                                    {1, 0, 2, 4, 3, 5},
                                    {0, 2, 1, 3, 5, 4},
                                    {0, 4, 5, 3, 1, 2}};
    std::array<cplx, 4> lv;
    for (int r = 0; r < 4; ++r) {
        SixC a;
        for (int k = 0; k < 6; ++k) a[k] = p.a[perms[r][k]];
        B6jParams pr = make_params_raw(a, p.b);
        pr.mode = p.mode;
        lv[r] = evaluate(pr, qc).log_value;
    }
    SymmetryReport rep{0.0};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            rep.max_rel_dev = std::max(rep.max_rel_dev, rel_dev(lv[i], lv[j]));
    return rep;
}

SymmetryReport check_reflection_symmetry(const B6jParams& p, int slot,
                                         const QuadratureConfig& qc) {
    SixC a = p.a;
    a[slot] = p.Q - a[slot];
    B6jParams pr = make_params_raw(a, p.b);
    pr.mode = p.mode;
    if (!pr.admissible)
        throw std::domain_error("check_reflection_symmetry: reflected tuple not admissible");
    return {rel_dev(evaluate(p, qc).log_value, evaluate(pr, qc).log_value)};
}

cplx asymptotic_prediction(GeometryKind kind, const SixC& geom, double b) {
    const double pb2 = kPi * b * b;
    switch (kind) {
        case GeometryKind::HypAngles: {
            Six th;
            for (int k = 0; k < 6; ++k) th[k] = geom[k].real();
            const HypAngleVolume hv = hyperbolic_volume_from_angles(th);
            const double det =
                critical_quadratic(u_from_alpha(hv.p.alpha)).disc().real() / 16.0;
            return kIu * 0.5 * std::exp(-hv.vol / pb2) / std::pow(-det, 0.25);
        }
        case GeometryKind::AdSAngles: {
            const AdsAngleVolume av = ads_volume_from_angles(geom);
            const double det =
                critical_quadratic(u_from_alpha(av.p.alpha)).disc().real() / 16.0;
            return 0.5 * std::exp(-kIu * av.vol / pb2) /
                   std::pow(cplx{-det, 0.0}, 0.25);
        }
        case GeometryKind::AdSLengths: {
            Six l;
            for (int k = 0; k < 6; ++k) l[k] = geom[k].real();
            const AdsLengthPotential ap = ads_potential_from_lengths(l);
            const double det = gram_from_lengths(l).det();
            return kIu * std::exp(-ap.cov_tilde / pb2) / std::pow(det, 0.25) *
                   std::cos(ap.cov / pb2 + 0.25 * kPi);
        }
        case GeometryKind::HypLengths: {
            Six l;
            for (int k = 0; k < 6; ++k) l[k] = geom[k].real();
            const SixC th = angles_from_lengths(l, TetraClass::Hyperbolic);
            Six thr;
            for (int k = 0; k < 6; ++k) thr[k] = th[k].real();
            const HypAngleVolume hv = hyperbolic_volume_from_angles(thr);
            double cov = hv.vol;
            for (int k = 0; k < 6; ++k) cov += 0.5 * thr[k] * l[k];
            const double det = gram_from_lengths(l).det();
            return kIu * 0.5 * std::exp(-cov / pb2) / std::pow(-det, 0.25);
        }
        case GeometryKind::FlatLengths: {
            Six l;
            for (int k = 0; k < 6; ++k) l[k] = geom[k].real();
            int best = 0;
            for (int k = 1; k < 3; ++k)
                if (l[k] + l[k + 3] > l[best] + l[best + 3]) best = k;
            const double covt = 0.5 * kPi * (l[best] + l[best + 3]);
            return std::exp(-covt / pb2);
        }
    }
    throw std::logic_error("asymptotic_prediction: unknown kind");
}

std::vector<SweepRow> asymptotic_sweep(GeometryKind kind, const SixC& geom,
                                       const std::vector<double>& b_list,
                                       const QuadratureConfig& qc) {
    EntryMode mode = EntryMode::LengthEntries;
    if (kind == GeometryKind::HypAngles) mode = EntryMode::HypAngleEntries;
    if (kind == GeometryKind::AdSAngles) mode = EntryMode::AdSAngleEntries;
    std::vector<SweepRow> rows;
    for (double b : b_list) {
        const B6jParams p = make_params(mode, geom, b);
        const B6jEvaluation ev = evaluate(p, qc);
        SweepRow r;
        r.b = b;
        r.log_value = ev.log_value;
        r.value = ev.value;
        r.prediction = asymptotic_prediction(kind, geom, b);
        r.abs_ratio = std::exp(ev.log_value.real() - std::log(std::abs(r.prediction)));
        r.extracted = -kPi * b * b * ev.log_value.real();
        rows.push_back(r);
    }
    return rows;
}

double loglog_slope(const std::vector<SweepRow>& rows) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const SweepRow& r : rows) {
        const double d = std::abs(r.abs_ratio - 1.0);
        if (!(d > 0.0)) continue;
        const double x = std::log(r.b), y = std::log(d);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) return 0.0;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace tetravol
