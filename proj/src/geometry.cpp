#include "tetravol/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace tetravol {

namespace {

// relative flat band: det is quartic in the entries
double flat_tolerance(const Eigen::Matrix4d& m) {
    const double s = std::max(1.0, m.cwiseAbs().maxCoeff());
    return 1e-9 * s * s * s * s;
}

Eigen::Matrix4d cofactor_matrix(const Eigen::Matrix4d& m) {
    // C_ij = det(m) * (m^{-1})_ji for invertible m; computed via 3x3 minors to
    // stay valid near degeneracy
    Eigen::Matrix4d C;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Eigen::Matrix3d sub;
            int r = 0;
            for (int a = 0; a < 4; ++a) {
                if (a == i) continue;
                int c = 0;
                for (int b = 0; b < 4; ++b) {
                    if (b == j) continue;
                    sub(r, c) = m(a, b);
                    ++c;
                }
                ++r;
            }
            C(i, j) = (((i + j) % 2) ? -1.0 : 1.0) * sub.determinant();
        }
    }
    return C;
}

}  // namespace

double GramMatrix::det() const { return m.determinant(); }

double GramMatrix::cofactor(int i, int j) const {
    return cofactor_matrix(m)(i, j);
}

std::array<int, 3> GramMatrix::signature() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m);
    const double tol = 1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff());
    std::array<int, 3> sig{0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        const double ev = es.eigenvalues()(i);
        if (ev > tol)
            ++sig[0];
        else if (ev < -tol)
            ++sig[1];
        else
            ++sig[2];
    }
    return sig;
}

double det_cofactor_expansion(const Eigen::Matrix4d& m) {
    const Eigen::Matrix4d C = cofactor_matrix(m);
    double d = 0.0;
    for (int j = 0; j < 4; ++j) d += m(0, j) * C(0, j);
    return d;
}

GramMatrix gram_from_lengths(const Six& l) {
    GramMatrix G{Eigen::Matrix4d::Identity(), GramFlavor::EdgeLength};
    for (int k = 0; k < 6; ++k) {
        const int i = kEdgeV[k][0], j = kEdgeV[k][1];
        G.m(i, j) = G.m(j, i) = -std::cosh(l[k]);
    }
    return G;
}

GramMatrix gram_from_angles(const SixC& theta) {
    const int pp = pi_pair_slot(theta);
    GramMatrix G{Eigen::Matrix4d::Identity(), GramFlavor::DihedralAngle};
    if (pp < 0) {
        // hyperbolic family: real angles
        for (int k = 0; k < 6; ++k) {
            if (std::abs(theta[k].imag()) > 1e-9 || theta[k].real() <= 0.0 ||
                theta[k].real() >= kPi)
                throw std::domain_error("gram_from_angles: not a hyperbolic or AdS angle tuple");
        }
        for (int k = 0; k < 6; ++k) {
            const int i = kEdgeV[k][0], j = kEdgeV[k][1];
            G.m(i, j) = G.m(j, i) = -std::cos(theta[kOpp[k]].real());
        }
        return G;
    }
    G.m = -Eigen::Matrix4d::Identity();
    for (int k = 0; k < 6; ++k) {
        const int i = kEdgeV[k][0], j = kEdgeV[k][1];
        G.m(i, j) = G.m(j, i) = std::cos(theta[kOpp[k]]).real();
    }
    return G;
}

TetraClass classify_lengths(const Six& l) {
    const GramMatrix G = gram_from_lengths(l);
    const double d = G.det();
    const double tol = flat_tolerance(G.m);
    if (d < -tol) return TetraClass::Hyperbolic;
    if (d > tol) return TetraClass::AntiDeSitter;
    return TetraClass::Flat;
}

const char* tetra_class_name(TetraClass c) {
    switch (c) {
        case TetraClass::Hyperbolic: return "hyperbolic";
        case TetraClass::Flat: return "flat";
        default: return "anti-de-sitter";
    }
}

TetraEmbedding reconstruct_vertices(const GramMatrix& G, TetraClass cls) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(G.m);
    Eigen::Vector4d lam = es.eigenvalues();
    Eigen::Matrix4d E = es.eigenvectors();
    // sort descending so positive eigenvalues come first
    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return lam(a) > lam(b); });
    Eigen::Matrix4d Es;
    Eigen::Vector4d ls;
    for (int i = 0; i < 4; ++i) {
        ls(i) = lam(order[i]);
        Es.col(i) = E.col(order[i]);
    }
    const int npos = (cls == TetraClass::AntiDeSitter) ? 2 : 3;
    for (int i = 0; i < 4; ++i) {
        const bool want_pos = i < npos;
        if (want_pos != (ls(i) > 0.0))
            throw std::domain_error("reconstruct_vertices: signature does not match class");
    }
    // rows of X are the vertices: X diag(J) X^T = G
    Eigen::Matrix4d X = Es * ls.cwiseAbs().cwiseSqrt().asDiagonal();
    if (X(0, 0) < 0.0) X = -X;  // deterministic lift gauge
    TetraEmbedding out;
    out.V = X.transpose();  // columns are vertices
    out.Jdiag = Eigen::Vector4d::Ones();
    for (int i = npos; i < 4; ++i) out.Jdiag(i) = -1.0;
    return out;
}

Eigen::Matrix4d normals_from_gram(const GramMatrix& G, TetraClass cls) {
    const Eigen::Matrix4d C = cofactor_matrix(G.m);
    Eigen::Matrix4d N;
    for (int i = 0; i < 4; ++i) {
        if (std::abs(C(i, i)) < 1e-14)
            throw std::domain_error("normals_from_gram: vanishing diagonal cofactor");
        for (int j = 0; j < 4; ++j)
            N(i, j) = C(i, j) / std::sqrt(std::abs(C(i, i) * C(j, j)));
    }
    (void)cls;
    return N;
}

SixC angles_from_lengths(const Six& l, TetraClass cls) {
    if (cls == TetraClass::Flat)
        throw std::domain_error("angles_from_lengths: flat class has no dihedral angles");
    const GramMatrix G = gram_from_lengths(l);
    const Eigen::Matrix4d C = cofactor_matrix(G.m);
    SixC th;
    for (int k = 0; k < 6; ++k) {
        const int i = kEdgeV[k][0], j = kEdgeV[k][1];
        int a = -1, b = -1;
        for (int m = 0; m < 4; ++m) {
            if (m == i || m == j) continue;
            (a < 0 ? a : b) = m;
        }
        const double x = C(a, b) / std::sqrt(std::abs(C(a, a) * C(b, b)));
        if (cls == TetraClass::Hyperbolic) {
            if (std::abs(x) > 1.0)
                throw std::domain_error("angles_from_lengths: cofactor ratio outside [-1,1]");
            th[k] = std::acos(x);
        } else {
            if (x < -1.0)
                th[k] = cplx{kPi, -std::acosh(-x)};
            else if (x > 1.0)
                th[k] = cplx{0.0, std::acosh(x)};
            else
                throw std::domain_error("angles_from_lengths: AdS cofactor ratio in [-1,1]");
        }
    }
    return th;
}

Six lengths_from_angles(const SixC& theta) {
    const GramMatrix G = gram_from_angles(theta);
    const Eigen::Matrix4d C = cofactor_matrix(G.m);
    const double sgn = (G.m.determinant() < 0.0) ? 1.0 : -1.0;
    Six l;
    for (int k = 0; k < 6; ++k) {
        const int i = kEdgeV[k][0], j = kEdgeV[k][1];
        const double x = sgn * C(i, j) / std::sqrt(std::abs(C(i, i) * C(j, j)));
        if (!(x > 1.0))
            throw std::domain_error("lengths_from_angles: angle tuple not realizable");
        l[k] = std::acosh(x);
    }
    return l;
}

int pi_pair_slot(const SixC& theta) {
    for (int k = 0; k < 3; ++k) {
        if (std::abs(theta[k].real() - kPi) < 1e-9 &&
            std::abs(theta[k + 3].real() - kPi) < 1e-9)
            return k;
    }
    return -1;
}

AngleCriterion check_angle_criterion(const SixC& theta) {
    const GramMatrix G = gram_from_angles(theta);
    const Eigen::Matrix4d C = cofactor_matrix(G.m);
    AngleCriterion out;
    out.sig = G.signature();
    out.cof_diag_positive = true;
    out.cof_offdiag_negative = true;
    for (int i = 0; i < 4; ++i) {
        if (!(C(i, i) > 0.0)) out.cof_diag_positive = false;
        for (int j = i + 1; j < 4; ++j)
            if (!(C(i, j) < 0.0)) out.cof_offdiag_negative = false;
    }
    out.ok = out.sig == std::array<int, 3>{2, 2, 0} && out.cof_diag_positive &&
             out.cof_offdiag_negative;
    return out;
}

double covolume_tilde(const Six& l) {
    if (classify_lengths(l) != TetraClass::AntiDeSitter)
        throw std::domain_error("covolume_tilde: closed form available only for the AdS class");
    const SixC th = angles_from_lengths(l, TetraClass::AntiDeSitter);
    const int k = pi_pair_slot(th);
    if (k < 0) throw std::domain_error("covolume_tilde: no pi-pair found");
    return 0.5 * kPi * (l[k] + l[k + 3]);
}

}  // namespace tetravol
