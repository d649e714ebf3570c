#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "potkit/planar_green.hpp"
#include "potkit/schottky.hpp"
#include "potkit/surface.hpp"

using namespace potkit;

namespace {
const StripDouble strip(2.0);
const cplx a0(-0.25, 0.5);
}  // namespace

TEST_CASE("kernel identities at the reference point") {
    const cplx z(-0.2, 0.3);
    const auto r = strip.kkl(z, a0);
    CHECK(r.electro < 1e-10);
    CHECK(r.hydro < 1e-10);
    const auto k = strip.kernels(z, a0);
    CHECK(k.electro - k.hydro - 2.0 * k.doubled == cplx(0.0));
    CHECK_NEAR(k.doubled, cplx(0.5), 1e-15);
}

TEST_CASE("kernel cycle periods") {
    const cplx start = cplx(-0.5, 1.0) - std::conj(a0);
    auto el = [&](cplx z) { return strip.kernels(z, a0).electro; };
    auto hy = [&](cplx z) { return strip.kernels(z, a0).hydro; };
    CHECK_NEAR(segment_integral(el, start, start + 1.0, 32, 16), cplx(0.0), 1e-8);
    CHECK_NEAR(segment_integral(el, start, start + 2.0 * I, 32, 16), cplx(0.0, 2.0), 1e-8);
    CHECK_NEAR(segment_integral(hy, start, start + 1.0, 32, 16), cplx(-1.0), 1e-8);
    CHECK_NEAR(segment_integral(hy, start, start + 2.0 * I, 32, 16), cplx(0.0), 1e-8);
}

TEST_CASE("Green functions of the strip") {
    for (double y : {0.0, 0.4, 1.3}) {
        CHECK_NEAR(strip.green_electro(cplx(0.0, y), a0), 0.0, 1e-12);
        CHECK_NEAR(strip.green_electro(cplx(-0.5, y), a0), 0.0, 1e-12);
        // the reflection J fixes the boundary, so the odd combination vanishes there
        CHECK_NEAR(strip.green_double(cplx(0.0, y), a0) - strip.green_double(cplx(0.0, y), StripDouble::involution(a0)),
                   0.0, 1e-10);
    }
    const cplx z(-0.1, 1.4);
    CHECK_NEAR(strip.green_electro(z, a0), strip.green_electro(a0, z), 1e-13);
    CHECK(strip.green_electro(z, a0) > 0.0);
    CHECK_NEAR(strip.green_electro(z + 2.0 * I, a0), strip.green_electro(z, a0), 1e-12);
    // the hydrodynamic Green function is locally constant on the boundary
    CHECK_NEAR(strip.green_hydro(cplx(0.0, 0.2), a0, 0.7), strip.green_hydro(cplx(0.0, 1.7), a0, 0.7), 1e-12);
    CHECK_NEAR(strip.green_hydro(cplx(-0.5, 0.2), a0, 0.7), strip.green_hydro(cplx(-0.5, 1.1), a0, 0.7), 1e-12);
    const double h = 1e-6;
    CHECK_NEAR((strip.robin_electro(a0 + h) - strip.robin_electro(a0 - h)) / (2.0 * h),
               strip.robin_electro_2dz(a0).real(), 1e-7);
    CHECK_NEAR(2.0 * pi * strip.green_electro(a0 + 1e-6, a0) + std::log(1e-6), strip.robin_electro(a0), 1e-6);
}

TEST_CASE("Neumann function") {
    const double h = 1e-5;
    for (double y : {0.1, 0.9, 1.6}) {
        const cplx z(0.0, y);
        CHECK(std::abs((strip.neumann(z + h, a0) - strip.neumann(z - h, a0)) / (2.0 * h)) < 1e-6);
    }
}

TEST_CASE("reproducing properties") {
    auto f = [](cplx z) { return pi * std::exp(pi * z); };
    CHECK_NEAR(strip.reproducing_check(ReproducingKernel::hydro, f, a0, 96), f(a0), 1e-6);
    CHECK_NEAR(strip.reproducing_check(ReproducingKernel::electro, [](cplx) { return cplx(1.0); }, a0), cplx(1.0), 1e-6);
    CHECK_ERROR_KIND(strip.reproducing_check(ReproducingKernel::hydro, [](cplx) { return cplx(1.0); }, a0),
                     ErrorKind::admissibility);
}

TEST_CASE("third-kind differential") {
    const cplx b(-0.4, 1.2);
    auto u = [&](cplx z) { return strip.upsilon(z, a0, b); };
    CHECK_NEAR(contour_integral(u, Curve::circle(a0, 0.05), 64) / (2.0 * pi * I), cplx(1.0), 1e-10);
    CHECK_NEAR(contour_integral(u, Curve::circle(b, 0.05), 64) / (2.0 * pi * I), cplx(-1.0), 1e-10);
}

TEST_CASE("Szego kernels") {
    const cplx w = std::polar(1e-6, 0.4);
    CHECK_NEAR(w * strip.szego_l(a0 + w, a0), cplx(1.0 / (2.0 * pi)), 1e-9);
    const cplx z(-0.1, 1.3);
    CHECK_NEAR(strip.szego_l_tracked(z, a0), strip.szego_l(z, a0), 1e-10);
    // the kernel vanishes at a + (1 + tau)/2; a path ending there cannot be continued
    CHECK_ERROR_KIND(strip.szego_l_tracked(a0 + cplx(0.5, 1.0), a0), ErrorKind::branch);
    const double ks = strip.szego_diagonal(a0);
    const auto k = strip.kernels(a0, a0);
    CHECK(pi * k.hydro.real() < 4.0 * pi * pi * ks * ks);
    CHECK(4.0 * pi * pi * ks * ks < pi * k.electro.real());
}

TEST_CASE("capacity functions at the reference point") {
    // frozen values, cross-checked against the strict ordering below
    const auto c = strip.capacity_functions(a0);
    CHECK_NEAR(c.c1, 2.121274, 5e-6);
    CHECK_NEAR(c.cD, 2.593894, 5e-6);
    CHECK_NEAR(c.cB, 3.118169, 5e-6);
    CHECK_NEAR(c.c_beta, 3.141549, 5e-6);
    CHECK_NEAR(c.M_sqrt, 3.141636, 5e-6);
    for (double m : c.margins()) CHECK(m > 0.0);
    CHECK_NEAR(c.c_beta, std::exp(-strip.robin_electro(a0)), 1e-14);
}

TEST_CASE("capacity functions on the disk coincide") {
    const auto c = disk_capacity_functions(cplx(0.3, -0.2));
    const double ref = 1.0 / (1.0 - 0.13);
    for (double v : {c.c1, c.cD, c.cB, c.c_beta, c.M_sqrt}) CHECK_NEAR(v, ref, 1e-8);
}

TEST_CASE("disk maps") {
    for (double t : {0.0, 1.0, 2.5}) {
        const cplx z = std::polar(2.0, t);
        CHECK_NEAR(schwarz_circle(z, 2.0), std::conj(z), 1e-15);
    }
    const double h = 1e-5;
    const cplx b(0.5, 0.0);
    CHECK_NEAR((ahlfors_map_disk(b + h, b) - ahlfors_map_disk(b - h, b)) / (2.0 * h), cplx(4.0 / 3.0), 1e-8);
    CHECK_NEAR(std::abs(ahlfors_map_disk(std::polar(1.0, 0.7), b)), 1.0, 1e-12);
    CHECK_NEAR(circular_slit_map(cplx(0.4, -0.3), 0.0), cplx(0.4, -0.3), 1e-12);
    CHECK_ERROR_KIND(ahlfors_map_disk(0.2, 1.5), ErrorKind::domain);
}

TEST_CASE("strip domain errors") {
    CHECK_ERROR_KIND(strip.green_electro(cplx(-0.1, 0.2), cplx(0.3, 0.1)), ErrorKind::domain);
    CHECK_ERROR_KIND(StripDouble(-1.0), ErrorKind::parameter);
}
