#pragma once
// The AdS-tetrahedron <-> four-holed-sphere correspondence: the linear
// isomorphism between SL(2,R) and the (2,2) quadric, holonomy matrices from a
// vertex embedding, trace identities, and Fenchel-Nielsen coordinates.

#include <array>

#include "tetravol/geometry.hpp"

namespace tetravol {

struct SL2 {
    double a, b, c, d;
    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    SL2 inverse() const { return {d, -b, -c, a}; }
    SL2 operator*(const SL2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
    }
};

using Vec4 = std::array<double, 4>;

// ((a+d)/2, (b-c)/2, (a-d)/2, (b+c)/2)
Vec4 phi(const SL2& m);
SL2 phi_inv(const Vec4& v);

// inner product of signature (2,2): <v,w> = v1 w1 + v2 w2 - v3 w3 - v4 w4;
// <phi(A), phi(B)> = (1/2) Tr(A adj(B)), <v,v> = det
double ip22(const Vec4& v, const Vec4& w);

struct Holonomy {
    std::array<SL2, 6> A;       // A_1..A_6
    std::array<double, 6> traces;
    std::array<double, 6> edge_lengths;  // acosh(-Tr/2)
    std::array<int, 6> edge_slots;       // slot whose length each trace reports
};

// B_i = phi^{-1}(v_i), A_k from the fixed products of the B_i; asserts
// det A_k = 1 and Tr A_k < -2
Holonomy holonomy_from_embedding(const TetraEmbedding& E);

struct FNCoordinates {
    std::array<double, 6> lengths;
    std::array<double, 6> twists;  // magnitudes; global sign in orientation
    int orientation;               // +1 or -1
};

// FN lengths = 2 x the permuted edge lengths; twists = |Im theta| of the
// matching edges.  mirror = true flips the orientation flag (the v-bar map).
FNCoordinates tetra_to_fn(const Six& l, bool mirror = false);

}  // namespace tetravol
