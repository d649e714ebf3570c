#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <random>

#include "oracles/lattice_rows.hpp"
#include "potkit/elliptic.hpp"
#include "potkit/numkit.hpp"

using namespace potkit;

TEST_CASE("Legendre relation and root sum") {
    for (cplx tau : {cplx(0, 1.5), cplx(0, 2), cplx(0, 3), cplx(0.3, 2), cplx(0.3, 1.5)}) {
        const TorusLattice L(tau);
        CHECK(L.legendre_residual() < 1e-12);
        CHECK_NEAR(L.eta1() * tau - L.eta2(), 2.0 * pi * I, 1e-12);
        CHECK_NEAR(L.e1() + L.e2() + L.e3(), cplx(0.0), 1e-12);
    }
}

TEST_CASE("square lattice has e2 = 0") {
    const TorusLattice L(I);
    CHECK_NEAR(L.e2(), cplx(0.0), 1e-12);
    CHECK_NEAR(L.g3(), cplx(0.0), 1e-10);
}

TEST_CASE("wp agrees with the row-summed lattice series") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (cplx tau : {cplx(0, 1.5), cplx(0, 2), cplx(0.3, 2)}) {
        const TorusLattice L(tau);
        for (int k = 0; k < 20; ++k) {
            const cplx z = u(rng) + tau * u(rng);
            if (std::abs(z) < 0.1) continue;
            const cplx ref = oracle::wp_rows(z, tau);
            CHECK_NEAR(wp(z, L), ref, 1e-10 * std::abs(ref));
            const cplx dref = oracle::wp_prime_rows(z, tau);
            CHECK_NEAR(wp_prime(z, L), dref, 1e-10 * std::abs(dref));
        }
    }
}

TEST_CASE("wp differential equation and periodicity") {
    const TorusLattice L(cplx(0.3, 2.0));
    for (cplx z : {cplx(0.2, 0.3), cplx(-0.4, 0.9), cplx(0.45, -0.7)}) {
        const cplx p = wp(z, L);
        const cplx d = wp_prime(z, L);
        CHECK_NEAR(d * d, 4.0 * p * p * p - L.g2() * p - L.g3(), 1e-9);
        CHECK_NEAR(wp(z + 1.0, L), p, 1e-11);
        CHECK_NEAR(wp(z + L.tau() * 3.0, L), p, 1e-10);
    }
}

TEST_CASE("Laurent head of wp") {
    const TorusLattice L(cplx(0, 2));
    double r = 0.1;
    for (int k = 0; k < 10; ++k, r *= 0.5) {
        const cplx z = std::polar(r, 0.7);
        const double rel = std::abs(z * z * wp(z, L) - 1.0);
        CHECK(rel < 0.1 * r * r + 1e-12);
    }
    CHECK(std::abs(std::pow(cplx(1e-3), 2) * wp(cplx(1e-3), L) - 1.0) < 1e-6);
}

TEST_CASE("zeta is an antiderivative of -wp and quasi-periodic") {
    const TorusLattice L(cplx(0, 2));
    const cplx z(0.3, 0.4);
    const cplx d = wirtinger_derivative([&](cplx w) { return zeta_w(w, L); }, z, Wirtinger::d_dz, 1e-5);
    CHECK_NEAR(d, -wp(z, L), 1e-7);
    CHECK_NEAR(zeta_w(z + 1.0, L) - zeta_w(z, L), L.eta1(), 1e-11);
    CHECK_NEAR(zeta_w(z + L.tau(), L) - zeta_w(z, L), L.eta2(), 1e-11);
}

TEST_CASE("theta1 quasi-periodicity and log-derivative") {
    const TorusLattice L(cplx(0.3, 2));
    const cplx z(0.2, 0.3);
    const cplx t = theta1(z, L);
    CHECK_NEAR(theta1(z + 1.0, L), -t, 1e-13);
    const cplx shifted = -std::exp(-pi * I * L.tau() - 2.0 * pi * I * z) * t;
    CHECK_NEAR(theta1(z + L.tau(), L), shifted, 1e-14 * std::abs(shifted));
    CHECK_NEAR(theta1_log_derivative(z, L), zeta_w(z, L) - L.eta1() * z, 1e-11);
    CHECK_NEAR(log_abs_theta1(z, L), std::log(std::abs(t)), 1e-13);
    CHECK_NEAR(theta1_ratio(cplx(1e-4, 1e-4), L), cplx(1.0), 1e-7);
}

TEST_CASE("reduction to the fundamental cell") {
    const TorusLattice L(cplx(0.3, 2));
    const cplx z = cplx(3.4, 5.1);
    const auto r = L.reduce(z);
    CHECK_NEAR(r.w + static_cast<double>(r.m) + static_cast<double>(r.n) * L.tau(), z, 1e-13);
    CHECK(std::abs(r.w.imag()) <= 0.5 * L.height() + 1e-12);
}

TEST_CASE("errors") {
    CHECK_ERROR_KIND(TorusLattice(cplx(0.0, 0.01)), ErrorKind::conditioning);
    const TorusLattice L(cplx(0, 2));
    CHECK_ERROR_KIND(wp(cplx(1.0, 2.0), L), ErrorKind::pole);
}
