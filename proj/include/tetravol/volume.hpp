#pragma once
// Semiclassical potential machinery: rescaled parameters, the potential U and
// kappa, the critical-point quadratic, volumes and co-volumes in both
// geometries, and the correction term nu.

#include <array>
#include <vector>

#include "tetravol/complexfn.hpp"
#include "tetravol/geometry.hpp"

namespace tetravol {

struct RescaledParams {
    std::array<cplx, 6> alpha;
    std::array<cplx, 4> tau;  // tau_1..tau_4
    std::array<cplx, 4> eta;  // eta_1..eta_3, eta_4 = 2 pi
};

enum class ScaleMode { LengthScaling, AngleScaling };

RescaledParams rescale(const SixC& input, ScaleMode mode);
RescaledParams params_from_alpha(const std::array<cplx, 6>& alpha);

struct Quadratic {
    cplx A, B, C;
    cplx disc() const { return B * B - 4.0 * A * C; }
};

// coefficients of A z^2 + B z + C = 0 in z = e^{-2 i xi}, u_k = e^{2 i alpha_k}
Quadratic critical_quadratic(const std::array<cplx, 6>& u);
std::array<cplx, 6> u_from_alpha(const std::array<cplx, 6>& alpha);

cplx potential_U(cplx xi, const RescaledParams& p);

struct UDerivs {
    cplx d1;  // dU/dxi, direct sum of kernel derivatives
    cplx d2;  // closed-form rational expression; equals -(d/dxi) d1.  This is
              // the orientation in which the Hessian determinant identity
              // -d2 * exp(-kappa/(pi i)) = 16 sqrt(det Gram) holds.
};
UDerivs potential_U_derivs(cplx xi, const RescaledParams& p);

cplx kappa(cplx xi, const RescaledParams& p);

struct CriticalPoint {
    cplx z_star;
    cplx xi_star;
    bool plus_root;
    cplx U_value;
    cplx U_second;
    cplx kappa_value;
};

CriticalPoint make_critical_point(const RescaledParams& p, bool plus_root);

struct HypAngleVolume {
    double vol;
    double xi_star;
    cplx U_value;
    RescaledParams p;  // angle-scaled with opposite-pair ordering
};
// theta real in (0,pi)^6, realizable hyperbolic tuple
HypAngleVolume hyperbolic_volume_from_angles(const Six& theta);

struct AdsAngleVolume {
    double vol;
    CriticalPoint accepted;  // xi*, the +sqrt root
    CriticalPoint rejected;  // xi**
    RescaledParams p;
};
AdsAngleVolume ads_volume_from_angles(const SixC& theta);

struct AdsLengthPotential {
    cplx W;           // U at xi_1^* (the -sqrt root)
    double cov;       // Re W / 2
    double cov_tilde; // -Im W / 2
    CriticalPoint xi1, xi2;
    RescaledParams p; // length-scaled
};
AdsLengthPotential ads_potential_from_lengths(const Six& l);

struct AdsVolume {
    double vol_gradient;  // (Re W - sum l_k d Re W/d l_k)/2 by central differences
    double vol_legendre;  // Cov - (1/2) sum Im theta_k l_k
};
AdsVolume ads_volume_from_lengths(const Six& l);

// Slopes of Im U along Re xi = const through the nine intervals delimited by
// the sorted Im levels of tau and eta; measured at interval midpoints (the
// outermost two at unit distance beyond the extreme levels).
std::array<double, 9> piecewise_slope_profile(const RescaledParams& p);

// nu(xi) = (U_{alpha,b}(xi) - kappa(xi) b^2 - U(xi)) / b^4 with
// U_{alpha,b} assembled from log_double_sine at u = xi/(pi b) and
// alpha_k = pi b a_k - pi b^2 / 2.
cplx nu_correction(cplx xi, const SixC& a, const ModularParam& mp);

}  // namespace tetravol
