#pragma once
// Gram-matrix calculus: classification of six-tuples of edge lengths,
// embeddings, cofactor angle/length conversions, and the AdS realizability
// criterion.
//
// Slot convention: slots k = 0..5 label the edges
//   0:(0,1) 1:(0,2) 2:(1,2) 3:(2,3) 4:(1,3) 5:(0,3)
// so opposite pairs are (k, k+3).  Angle Gram matrices carry the dihedral
// angle of the opposite edge at each off-diagonal position.

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "tetravol/complexfn.hpp"

namespace tetravol {

using Six = std::array<double, 6>;
using SixC = std::array<cplx, 6>;

inline constexpr int kEdgeV[6][2] = {{0, 1}, {0, 2}, {1, 2},
                                     {2, 3}, {1, 3}, {0, 3}};
inline constexpr int kOpp[6] = {3, 4, 5, 0, 1, 2};

enum class TetraClass { Hyperbolic, Flat, AntiDeSitter };
enum class GramFlavor { EdgeLength, DihedralAngle };

struct GramMatrix {
    Eigen::Matrix4d m;
    GramFlavor flavor;
    double det() const;
    double cofactor(int i, int j) const;
    // (positive, negative, zero) eigenvalue counts
    std::array<int, 3> signature() const;
};

// Determinant by explicit cofactor expansion along the first row; used as the
// independent cross-check for classification.
double det_cofactor_expansion(const Eigen::Matrix4d& m);

GramMatrix gram_from_lengths(const Six& l);

// Hyperbolic family: theta real in (0,pi)^6, diag +1, entries -cos of the
// opposite slot.  AdS family: one opposite pair with Re theta = pi, diag -1,
// entries +cos of the opposite slot.  Entries are real in both cases.
GramMatrix gram_from_angles(const SixC& theta);

TetraClass classify_lengths(const Six& l);
const char* tetra_class_name(TetraClass c);

struct TetraEmbedding {
    Eigen::Matrix4d V;       // columns are the vertices v_i
    Eigen::Vector4d Jdiag;   // signature form diag
};

// V with V^T J V = G; J = diag(1,1,1,-1) (hyperbolic) or diag(1,1,-1,-1) (AdS).
TetraEmbedding reconstruct_vertices(const GramMatrix& G, TetraClass cls);

// Normalized cofactor matrix N_ij = C_ij / sqrt(|C_ii C_jj|) of the
// edge-length Gram; diagonal -1 for AdS, +1 for hyperbolic.
Eigen::Matrix4d normals_from_gram(const GramMatrix& G, TetraClass cls);

// Dihedral angles from lengths.  Hyperbolic: real angles in (0,pi).
// AdS: slot values i*phi (phi > 0) except one opposite pair pi - i*phi.
SixC angles_from_lengths(const Six& l, TetraClass cls);

// Inverse map via cofactors of the angle Gram.
Six lengths_from_angles(const SixC& theta);

// Index in {0,1,2} of the opposite pair (k, k+3) with Re theta = pi; -1 if none.
int pi_pair_slot(const SixC& theta);

struct AngleCriterion {
    bool ok;
    std::array<int, 3> sig;  // signature of the angle Gram
    bool cof_diag_positive;
    bool cof_offdiag_negative;
};

// AdS realizability: signature (2,2), positive diagonal cofactors, negative
// off-diagonal cofactors.
AngleCriterion check_angle_criterion(const SixC& theta);

// (pi/2)(l_k + l_{k+3}) over the opposite pair carrying Re theta = pi.
// AdS class only.
double covolume_tilde(const Six& l);

}  // namespace tetravol
