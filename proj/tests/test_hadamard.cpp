#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <cmath>

#include "potkit/hadamard.hpp"

using namespace potkit;

TEST_CASE("dilation of the unit disk") {
    const auto p = hadamard_delta_green(BoundaryVariation::dilation(1e-4), 0.0, 0.5, 512);
    CHECK_NEAR(p.lhs, 1.0 / (2.0 * pi), 1e-6);
    CHECK_NEAR(p.rhs, 1.0 / (2.0 * pi), 1e-6);
    const auto h = hadamard_delta_h0(BoundaryVariation::dilation(1e-4), 0.0, 512);
    CHECK_NEAR(h.lhs, 1.0, 1e-8);
    CHECK_NEAR(h.rhs, 1.0, 1e-12);
    const auto h5 = hadamard_delta_h0(BoundaryVariation::dilation(1e-4), 0.5, 512);
    CHECK_NEAR(h5.rhs, 5.0 / 3.0, 1e-10);
    CHECK_NEAR(h5.lhs, 5.0 / 3.0, 1e-6);
}

TEST_CASE("translation mode") {
    const auto p = hadamard_delta_green(BoundaryVariation::translation(1e-4), 0.0, 0.5, 512);
    CHECK_NEAR(p.lhs, p.rhs, 1e-5);
}

TEST_CASE("zero normal speed leaves everything unchanged") {
    const auto still = BoundaryVariation::general([](double) { return 0.0; }, 1e-3);
    const auto p = hadamard_delta_green(still, cplx(0.1, 0.2), cplx(-0.3, 0.1), 256);
    CHECK_NEAR(p.rhs, 0.0, 1e-15);
    CHECK_NEAR(p.lhs, 0.0, 1e-9);
    CHECK_NEAR(hadamard_delta_h0(still, 0.2, 256).lhs, 0.0, 1e-9);
}

TEST_CASE("collocation reproduces the exact families") {
    const auto exact = BoundaryVariation::dilation(1e-3);
    const auto fit = BoundaryVariation::general([](double) { return 1.0; }, 1e-3);
    const cplx z(0.1, 0.2);
    const cplx a(-0.3, 0.4);
    CHECK_NEAR(perturbed_disk_green(fit, 1e-3, z, a), perturbed_disk_green(exact, 1e-3, z, a), 1e-11);
    CHECK_NEAR(perturbed_disk_h0(fit, 1e-3, a), perturbed_disk_h0(exact, 1e-3, a), 1e-11);
}

TEST_CASE("general variations converge at first order") {
    const auto mode = [](double th) { return std::cos(2.0 * th); };
    double previous = 0.0;
    for (double e : {1e-3, 1e-4}) {
        const auto p = hadamard_delta_green(BoundaryVariation::general(mode, e), cplx(0.1, 0.2), cplx(0.5, -0.1), 512,
                                            Difference::forward);
        const double err = std::abs(p.lhs - p.rhs);
        if (previous > 0.0) CHECK_NEAR(std::log10(previous / err), 1.0, 0.1);
        previous = err;
    }
}

TEST_CASE("triple product") {
    CHECK_NEAR(triple_green(0.0, 0.0, 0.0, 256), -1.0 / (4.0 * pi * pi), 1e-15);
    const cplx a(0.2, 0.1);
    const cplx b(-0.3, 0.4);
    const cplx c(0.1, -0.5);
    const double t = triple_green(a, b, c, 512);
    CHECK_NEAR(triple_green(c, a, b, 512), t, 1e-14);
    CHECK_NEAR(triple_green(b, c, a, 512), t, 1e-14);
}

TEST_CASE("boundary normal derivative") {
    CHECK_NEAR(disk_normal_derivative(1.0, 0.0, 1.0), -1.0 / (2.0 * pi), 1e-15);
}

TEST_CASE("validation") {
    CHECK_ERROR_KIND(BoundaryVariation::dilation(0.2), ErrorKind::domain);
    CHECK_ERROR_KIND(BoundaryVariation::dilation(1e-3, -1.0), ErrorKind::parameter);
    CHECK_ERROR_KIND(hadamard_delta_green(BoundaryVariation::dilation(1e-4), 0.2, 0.2, 256), ErrorKind::pole);
    CHECK_ERROR_KIND(hadamard_delta_green(BoundaryVariation::dilation(1e-4), 1.2, 0.2, 256), ErrorKind::domain);
    CHECK_ERROR_KIND(hadamard_delta_green(BoundaryVariation::dilation(1e-4), 0.1, 0.2, 8), ErrorKind::parameter);
}
