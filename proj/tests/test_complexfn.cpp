#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tetravol/complexfn.hpp"

using namespace tetravol;

TEST_CASE("dilog special values") {
    CHECK(std::abs(dilog(cplx{0.0, 0.0})) == 0.0);
    CHECK(std::abs(dilog(cplx{1.0, 0.0}) - kPi * kPi / 6.0) < 1e-15);
    CHECK(std::abs(dilog(cplx{-1.0, 0.0}) + kPi * kPi / 12.0) < 1e-15);
    CHECK(std::abs(dilog(cplx{0.5, 0.0}) -
                   (kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0))) < 1e-15);
}

TEST_CASE("dilog inversion identity on the negative axis") {
    // Li2(-x) + Li2(-1/x) = -pi^2/6 - log^2(x)/2 for x > 0
    for (double x : {0.3, 0.8, 1.7, 5.0, 40.0}) {
        const cplx lhs = dilog(cplx{-x, 0.0}) + dilog(cplx{-1.0 / x, 0.0});
        const cplx rhs = -kPi * kPi / 6.0 - 0.5 * std::log(x) * std::log(x);
        CHECK(std::abs(lhs - rhs) < 1e-13 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("dilog agrees across evaluation branches") {
    // values straddling the |z| = 0.5 / Re z = 0.5 switches, against a direct
    // high-order sum computed at radius < 1
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> rad(0.05, 0.95);
    for (int trial = 0; trial < 200; ++trial) {
        const double r = rad(rng), th = ang(rng);
        const cplx z = std::polar(r, th);
        cplx term = z, ref = z;
        for (int n = 2; n < 4000; ++n) {
            term *= z;
            ref += term / double(n * n);
            if (std::abs(term) < 1e-18) break;
        }
        CHECK(std::abs(dilog(z) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("Lobachevsky function") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(kPi)) < 1e-15);
    CHECK(std::abs(lobachevsky(kPi / 6.0) - 0.50747080320482681) < 1e-12);
    // odd and pi-periodic
    CHECK(std::abs(lobachevsky(-0.4) + lobachevsky(0.4)) < 1e-14);
    CHECK(std::abs(lobachevsky(0.4 + kPi) - lobachevsky(0.4)) < 1e-13);
    // maximal at pi/6: Lambda(pi/6) = (3/2) Lambda(pi/3)... use the triplication
    // identity Lambda(3t) = 3 Lambda(t) - ... instead check 8 Lambda(pi/4)
    CHECK(std::abs(8.0 * lobachevsky(kPi / 4.0) - 3.663862376708876) < 1e-12);
}

TEST_CASE("L potential basic identities") {
    // L(pi/2) = -2i Lambda(pi/2)
    CHECK(std::abs(l_potential(cplx{kPi / 2, 0.0}) +
                   cplx{0.0, 2.0} * lobachevsky(kPi / 2)) < 1e-14);
    // continuity across the strip boundary Re x = pi (upper half plane)
    const cplx x0{kPi - 1e-7, 0.3};
    const cplx x1{kPi + 1e-7, 0.3};
    CHECK(std::abs(l_potential(x1) - l_potential(x0)) < 1e-5);
    // period relation in the upper half plane: L(x + pi) - L(x) = 2 pi x
    for (const cplx x : {cplx{0.7, 0.2}, cplx{2.5, 1.1}, cplx{-0.3, 0.4}}) {
        CHECK(std::abs(l_potential(x + kPi) - l_potential(x) - 2.0 * kPi * x) <
              1e-12);
    }
}

TEST_CASE("L potential derivative matches finite differences") {
    const double h = 1e-6;
    for (const cplx x : {cplx{0.8, 0.5}, cplx{2.9, -0.7}, cplx{1.4, 0.05}}) {
        const cplx fd =
            (l_potential(x + h) - l_potential(x - h)) / (2.0 * h);
        CHECK(std::abs(l_potential_deriv(x) - fd) < 1e-7);
    }
}

TEST_CASE("log_two_sin stable asymptotics") {
    // against the direct formula at moderate imaginary part, and internal
    // consistency across the |Im| = 20 switch
    const cplx w{0.4, 19.9999};
    const cplx w2{0.4, 20.0001};
    CHECK(std::abs(log_two_sin(w) - std::log(2.0 * std::sin(w))) < 1e-12);
    CHECK(std::abs(log_two_sin(w2) - log_two_sin(w)) < 1e-3);
    // exp recovers 2 sin w for moderate w
    const cplx w3{1.3, -0.2};
    CHECK(std::abs(std::exp(log_two_sin(w3)) - 2.0 * std::sin(w3)) < 1e-13);
}

TEST_CASE("double sine: special value and unitarity") {
    for (double b : {1.0, 0.7, 0.31, 0.11}) {
        const ModularParam p(b);
        CHECK(std::abs(std::exp(log_double_sine(cplx{p.Q / 2, 0.0}, p)) - 1.0) <
              1e-13);
        // |S_b(Q/2 + i s)| = 1 for real s
        for (double s : {0.3, 2.0, 11.0}) {
            const cplx v = std::exp(log_double_sine(cplx{p.Q / 2, s}, p));
            CHECK(std::abs(std::abs(v) - 1.0) < 1e-11);
        }
    }
}

TEST_CASE("double sine: reflection and shift over random samples") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ub(0.06, 1.0);
    std::uniform_real_distribution<double> ure(-3.0, 6.0);
    std::uniform_real_distribution<double> uim(-4.0, 4.0);
    double worst_refl = 0.0, worst_shift = 0.0;
    for (int trial = 0; trial < 400; ++trial) {
        const ModularParam p(ub(rng));
        const cplx z{ure(rng), uim(rng)};
        const cplx refl =
            std::exp(log_double_sine(z, p) + log_double_sine(p.Q - z, p));
        worst_refl = std::max(worst_refl, std::abs(refl - 1.0));
        const cplx sh = std::exp(log_double_sine(z + p.b, p) -
                                 log_double_sine(z, p)) -
                        2.0 * std::sin(kPi * p.b * z);
        worst_shift = std::max(
            worst_shift,
            std::abs(sh) / std::max(1.0, std::abs(2.0 * std::sin(kPi * p.b * z))));
    }
    CHECK(worst_refl < 1e-10);
    CHECK(worst_shift < 1e-10);
}

TEST_CASE("double sine: series and integral branches agree") {
    // points in the centered strip with Im z > 0, reachable by both
    // representations (the dispatcher handles Im z < 0 by conjugation)
    const ModularParam p(0.6);
    for (const cplx z : {cplx{1.0, 0.8}, cplx{1.25, 1.3}, cplx{1.05, 2.0}}) {
        const cplx a = log_double_sine_integral(z, p);
        const cplx b = log_double_sine_series(z, p, 4000);
        CHECK(std::abs(a - b) < 1e-11);
    }
}

TEST_CASE("double sine: self-dual point known value") {
    // S_1(1/2) = 2^(1/2)... no: S_b(b/2) = sqrt-free closed form is
    // S_b(b/2) * S_b(Q - b/2) = 1 and the shift gives S_b(Q/2 + b/2) =
    // S_b(Q/2 - b/2) * 2 sin(pi b (Q/2 - b/2)); verify the chain numerically.
    const ModularParam p(0.8);
    const cplx zc{p.Q / 2 - p.b / 2, 0.0};
    const cplx lhs = std::exp(log_double_sine(zc + p.b, p));
    const cplx rhs = std::exp(log_double_sine(zc, p)) *
                     2.0 * std::sin(kPi * p.b * zc);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
}

TEST_CASE("double sine: modular symmetry b <-> 1/b via parameter clamp") {
    // ModularParam(b) with b > 1 is rejected; the function for 1/b is reached
    // by the same Q, so S at matched parameters must agree:
    // S_{b}(z) defined with b and with 1/b coincide.
    const ModularParam p(0.45);
    // evaluate via the series with the roles of b and 1/b swapped inside by
    // checking the two shift equations jointly
    const cplx z{0.7, 0.9};
    const cplx s1 = std::exp(log_double_sine(z + 1.0 / p.b, p) -
                             log_double_sine(z, p));
    CHECK(std::abs(s1 - 2.0 * std::sin(kPi * z / p.b)) <
          1e-10 * std::abs(s1));
}

TEST_CASE("ModularParam validates its argument") {
    CHECK_THROWS(ModularParam(0.0));
    CHECK_THROWS(ModularParam(-0.3));
    CHECK_THROWS(ModularParam(1.5));
    const ModularParam p(0.25);
    CHECK(p.Q == doctest::Approx(0.25 + 4.0).epsilon(1e-15));
}
