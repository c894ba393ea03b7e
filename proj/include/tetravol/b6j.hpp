#pragma once
// Contour-integral evaluation of the b-6j symbol, symmetry checks, and the
// semiclassical predictions used by the b -> 0 sweeps.

#include <array>
#include <vector>

#include "tetravol/complexfn.hpp"
#include "tetravol/geometry.hpp"

namespace tetravol {

enum class EntryMode { LengthEntries, HypAngleEntries, AdSAngleEntries, RawEntries };

struct B6jParams {
    std::array<cplx, 6> a;
    double b;
    double Q;
    std::array<cplx, 4> t;  // t_i = three-term sums
    std::array<cplx, 4> q;  // q_j = four-term sums, q_4 = 2Q
    EntryMode mode;
    bool admissible;        // 0 < Re(q_j - t_i) < Q for all i,j
};

B6jParams make_params(EntryMode mode, const SixC& values, double b);
B6jParams make_params_raw(const SixC& a, double b);

struct ContourSpec {
    bool deformed = false;
    double c = 0.0;   // Re u on the far tails
    double T = 0.0;   // truncation |Im u| <= T
    // polyline vertices from bottom to top (including the tail endpoints)
    std::vector<cplx> points;
};

struct QuadratureConfig {
    double tol = 1e-10;
    int max_depth = 13;
    double shift = 0.0;  // fractional offset of c within the allowed interval
};

// Vertical line contour; the abscissa is picked by a min-max scan over the
// admissible window (plus the configured shift) so the line passes close to
// the saddle altitude, which keeps oscillatory cancellation benign.
ContourSpec default_contour(const B6jParams& p, const QuadratureConfig& qc);

// Band-wise deformed polyline crossing each horizontal pole line inside its
// allowed window.  Equivalent to the vertical contour; useful as an
// independence cross-check at moderate b.
ContourSpec deformed_contour(const B6jParams& p, const QuadratureConfig& qc);

struct B6jEvaluation {
    cplx value;       // exp(log_value); may underflow to 0 for small b
    cplx log_value;   // canonical log (branch fixed by the evaluation scheme)
    double rel_error; // quadrature + tail + rounding model, relative
    double tail_bound;
    long sb_evals;
    ContourSpec contour;
};

B6jEvaluation evaluate(const B6jParams& p, const ContourSpec& contour,
                       const QuadratureConfig& qc);
B6jEvaluation evaluate(const B6jParams& p, const QuadratureConfig& qc = {});

struct SymmetryReport {
    double max_rel_dev;
};

// the four displayed rearrangements {123;456},{213;546},{132;465},{156;423}
SymmetryReport check_tetrahedral_symmetry(const B6jParams& p,
                                          const QuadratureConfig& qc = {});
// a_k -> Q - a_k at one slot
SymmetryReport check_reflection_symmetry(const B6jParams& p, int slot,
                                         const QuadratureConfig& qc = {});

enum class GeometryKind { HypAngles, AdSAngles, AdSLengths, HypLengths, FlatLengths };

// Right-hand side of the matching asymptotic law, including the saddle-point
// normalization of this evaluation scheme (see README).
cplx asymptotic_prediction(GeometryKind kind, const SixC& geom, double b);

struct SweepRow {
    double b;
    cplx log_value;
    cplx value;
    cplx prediction;
    double abs_ratio;   // |value| / |prediction|
    double extracted;   // -pi b^2 log|value|
};

std::vector<SweepRow> asymptotic_sweep(GeometryKind kind, const SixC& geom,
                                       const std::vector<double>& b_list,
                                       const QuadratureConfig& qc = {});

// least-squares slope of log|ratio-1| vs log b over the rows
double loglog_slope(const std::vector<SweepRow>& rows);

}  // namespace tetravol
