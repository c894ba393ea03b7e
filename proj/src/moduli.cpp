#include "tetravol/moduli.hpp"

#include <cmath>
#include <stdexcept>

namespace tetravol {

Vec4 phi(const SL2& m) {
    return {0.5 * (m.a + m.d), 0.5 * (m.b - m.c), 0.5 * (m.a - m.d),
            0.5 * (m.b + m.c)};
}

SL2 phi_inv(const Vec4& v) {
    return {v[0] + v[2], v[1] + v[3], -v[1] + v[3], v[0] - v[2]};
}

double ip22(const Vec4& v, const Vec4& w) {
    return v[0] * w[0] + v[1] * w[1] - v[2] * w[2] - v[3] * w[3];
}

Holonomy holonomy_from_embedding(const TetraEmbedding& E) {
    if (E.Jdiag(2) > 0.0)
        throw std::domain_error("holonomy_from_embedding: embedding is not (2,2)");
    std::array<SL2, 4> B;
    for (int i = 0; i < 4; ++i) {
        const Vec4 v{E.V(0, i), E.V(1, i), E.V(2, i), E.V(3, i)};
        B[i] = phi_inv(v);
        if (std::abs(B[i].det() - 1.0) > 1e-8)
            throw std::domain_error("holonomy_from_embedding: vertex not on the unit quadric");
    }
    // A_k = B_i B_j^{-1} with the vertex pairs (1,3),(2,3),(2,4),(1,4),(1,2),(3,4)
    static const int pair[6][2] = {{0, 2}, {1, 2}, {1, 3}, {0, 3}, {0, 1}, {2, 3}};
    // the edge whose length the trace of A_k reports, in slot convention
    static const int edge_slot[6] = {1, 2, 4, 5, 0, 3};
    Holonomy out;
    for (int k = 0; k < 6; ++k) {
        out.A[k] = B[pair[k][0]] * B[pair[k][1]].inverse();
        out.traces[k] = out.A[k].trace();
        if (!(out.traces[k] < -2.0))
            throw std::domain_error("holonomy_from_embedding: trace not below -2 (bad lift gauge)");
        out.edge_lengths[k] = std::acosh(-0.5 * out.traces[k]);
        out.edge_slots[k] = edge_slot[k];
    }
    return out;
}

FNCoordinates tetra_to_fn(const Six& l, bool mirror) {
    if (classify_lengths(l) != TetraClass::AntiDeSitter)
        throw std::domain_error("tetra_to_fn: AdS class required");
    const SixC th = angles_from_lengths(l, TetraClass::AntiDeSitter);
    // curve order gamma_1..gamma_6 corresponds to edge slots (2,3,5,6,1,4)
    static const int slot[6] = {1, 2, 4, 5, 0, 3};
    FNCoordinates fn;
    for (int i = 0; i < 6; ++i) {
        fn.lengths[i] = 2.0 * l[slot[i]];
        fn.twists[i] = std::abs(th[slot[i]].imag());
    }
    fn.orientation = mirror ? -1 : 1;
    // internal consistency: the hexagon cofactor formula for the twist along
    // gamma_5 must reproduce cosh Im theta of edge slot 1
    const GramMatrix G = gram_from_lengths(l);
    const double c5 = -G.cofactor(2, 3) /
                      std::sqrt(G.cofactor(2, 2) * G.cofactor(3, 3));
    if (std::abs(c5 - std::cosh(th[0].imag())) > 1e-8 * std::max(1.0, c5))
        throw std::domain_error("tetra_to_fn: twist consistency check failed");
    return fn;
}

}  // namespace tetravol
