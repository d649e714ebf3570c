#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <random>

#include "oracles/rectangle_series.hpp"
#include "potkit/planar_green.hpp"
#include "potkit/schottky.hpp"

using namespace potkit;

TEST_CASE("disk Robin data") {
    const auto disk = DomainDescriptor::disk(1.0);
    auto e = robin_data(disk, 0.0);
    CHECK_NEAR(e.h0, 0.0, 1e-15);
    CHECK_NEAR(e.h1, cplx(0.0), 1e-15);
    e = robin_data(disk, 0.5);
    CHECK_NEAR(e.h0, std::log(0.75), 1e-14);
    CHECK_NEAR(e.h1, cplx(-2.0 / 3.0), 1e-14);
    CHECK_NEAR(e.curvature, -4.0, 1e-12);
}

TEST_CASE("half-plane Robin data") {
    const auto e = robin_data(DomainDescriptor::half_plane(), I);
    CHECK_NEAR(e.h0, std::log(2.0), 1e-14);
    CHECK_NEAR(e.h1, -0.5 * I, 1e-14);
}

TEST_CASE("slit-plane Robin function is the limit of the regular part") {
    const auto slit = DomainDescriptor::slit_plane();
    for (cplx a : {cplx(1.0, 0.0), cplx(-0.5, 0.7), cplx(2.0, -3.0)}) {
        const double h = 2.0 * pi * green(slit, a + 1e-7, a) + std::log(1e-7);
        CHECK_NEAR(robin_data(slit, a).h0, h, 1e-6);
        CHECK_NEAR(regular_part(slit, a, a), robin_data(slit, a).h0, 1e-13);
    }
    // a = 1: distance 1 to the slit, h0 = log 4 attains the upper bound
    CHECK_NEAR(robin_data(slit, 1.0).h0, std::log(4.0), 1e-14);
}

TEST_CASE("h1 is 2 dH/dz at the pole for the closed-form kinds") {
    const cplx a(0.3, 0.4);
    for (const auto& d : {DomainDescriptor::disk(1.5), DomainDescriptor::half_plane(), DomainDescriptor::slit_plane()}) {
        const cplx fd = 2.0 * wirtinger_derivative([&](cplx z) { return cplx(regular_part(d, z, a)); }, a, Wirtinger::d_dz, 1e-5);
        CHECK_NEAR(robin_data(d, a).h1, fd, 1e-8);
        CHECK_NEAR(regular_part_2dz(d, a, a), robin_data(d, a).h1, 1e-12);
    }
}

TEST_CASE("contour formula for h1") {
    const auto disk = DomainDescriptor::disk(1.0);
    CHECK_NEAR(h1_contour(disk, 0.0, 256).value, cplx(0.0), 1e-13);
    CHECK_NEAR(h1_contour(disk, 0.5, 256).value, cplx(-2.0 / 3.0), 1e-10);
    const auto hp = h1_contour(DomainDescriptor::half_plane(), I, 512);
    CHECK_NEAR(hp.value, -0.5 * I, 1e-4);
    CHECK(hp.truncation_error < 1e-3);
}

TEST_CASE("Poisson integral") {
    CHECK_NEAR(poisson_value([](cplx) { return 1.0; }, cplx(0.4, -0.2), 1.0, 64), 1.0, 1e-14);
    CHECK_NEAR(poisson_value([](cplx z) { return z.real(); }, 0.3, 1.0, 64), 0.3, 1e-14);
    CHECK_NEAR(poisson_value([](cplx z) { return std::real(z * z); }, cplx(0.3, 0.2), 1.0, 128), 0.05, 1e-14);
    CHECK_ERROR_KIND(poisson_value([](cplx) { return 1.0; }, 1.2, 1.0, 64), ErrorKind::domain);
}

TEST_CASE("conformal transport") {
    const auto disk = DomainDescriptor::disk(1.0);
    const auto src = robin_data(disk, cplx(0.2, 0.1));
    const auto same = conformal_transport(src, {1.0, 0.0});
    CHECK_NEAR(same.h0, src.h0, 0.0);
    CHECK_NEAR(same.h1, src.h1, 0.0);
    // dilation z -> 2z maps the unit disk to the disk of radius 2
    const auto moved = conformal_transport(src, {2.0, 0.0});
    const auto direct = robin_data(DomainDescriptor::disk(2.0), cplx(0.4, 0.2));
    CHECK_NEAR(moved.h0, direct.h0, 1e-14);
    CHECK_NEAR(moved.h1, direct.h1, 1e-14);
    CHECK_ERROR_KIND(conformal_transport(src, {0.0, 1.0}), ErrorKind::singular_map);
}

TEST_CASE("metric curvature") {
    const auto disk = DomainDescriptor::disk(1.0);
    CHECK_NEAR(curvature_of_metric([&](cplx p) { return robin_data(disk, p).h0; }, 0.5), -4.0, 1e-6);
    auto sphere = [](cplx z) { return std::log((1.0 + std::norm(z)) / 2.0); };
    CHECK_NEAR(curvature_of_metric(sphere, 0.2), 1.0, 1e-6);
    CHECK_NEAR(curvature_of_metric([](cplx) { return 0.7; }, 0.2), 0.0, 1e-12);
}

TEST_CASE("rectangle Green function against the sine series") {
    const auto rect = DomainDescriptor::rectangle(2.0, 1.0, 64);
    const cplx a(0.7, 0.4);
    for (cplx z : {cplx(0.3, 0.8), cplx(1.5, 0.2), cplx(1.0, 0.6)}) {
        CHECK_NEAR(green(rect, z, a), oracle::rectangle_green_series(z, a, 2.0, 1.0), 1e-6);
    }
}

TEST_CASE("rectangle Robin function") {
    // conformal radius of the unit square at its centre is 1 / K(m = 1/2)
    const auto sq = DomainDescriptor::rectangle(1.0, 1.0, 64);
    CHECK_NEAR(robin_data(sq, cplx(0.5, 0.5)).h0, std::log(0.53935260118837936), 1e-6);
    CHECK_NEAR(robin_data(sq, cplx(0.5, 0.5)).curvature, -4.0, 5e-3);
}

TEST_CASE("fd Dirichlet Green function") {
    const auto sq = DomainDescriptor::rectangle(1.0, 1.0, 64);
    const GridField g = fd_dirichlet_green(sq, cplx(0.25, 0.5));
    CHECK(g.at(0, 10) == 0.0);
    CHECK(g.at(64, 10) == 0.0);
    CHECK(g.at(16, 32) > g.at(20, 32));
    CHECK_ERROR_KIND(fd_dirichlet_green(sq, cplx(0.2501, 0.5)), ErrorKind::domain);
    CHECK_ERROR_KIND(fd_dirichlet_green(DomainDescriptor::rectangle(1.0, 1.0, 16), cplx(0.25, 0.5)), ErrorKind::parameter);
}

TEST_CASE("periodic strip uses the electrostatic Green function of the double") {
    const auto strip = DomainDescriptor::periodic_strip(2.0);
    const StripDouble s(2.0);
    const cplx z(-0.1, 0.7);
    const cplx a(-0.3, 1.1);
    CHECK_NEAR(green(strip, z, a), s.green_electro(z, a), 1e-15);
    CHECK_NEAR(robin_data(strip, a).h0, s.robin_electro(a), 1e-15);
}

TEST_CASE("sandwich bounds for the Robin function") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto half = DomainDescriptor::half_plane();
    const auto slit = DomainDescriptor::slit_plane();
    for (int k = 0; k < 50; ++k) {
        const cplx ah(10.0 * u(rng) - 5.0, 3.0 * u(rng) + 0.01);
        const double dh = half.boundary_distance(ah);
        CHECK(robin_data(half, ah).h0 >= std::log(dh) - 1e-12);
        CHECK_NEAR(robin_data(half, ah).h0, std::log(2.0 * dh), 1e-12);  // convex bound is attained
        const cplx as = std::polar(5.0 * u(rng) + 0.05, (2.0 * u(rng) - 1.0) * 0.99 * pi);
        const double ds = slit.boundary_distance(as);
        CHECK(robin_data(slit, as).h0 >= std::log(ds) - 1e-12);
        CHECK(robin_data(slit, as).h0 <= std::log(4.0 * ds) + 1e-12);
    }
    // slit plane attains log 4d on the positive axis
    CHECK_NEAR(robin_data(slit, 3.0).h0, std::log(12.0), 1e-13);
}

TEST_CASE("descriptor validation and evaluation errors") {
    CHECK_ERROR_KIND(DomainDescriptor::disk(-1.0), ErrorKind::parameter);
    CHECK_ERROR_KIND(DomainDescriptor::rectangle(1.0, 1.0, 4), ErrorKind::parameter);
    const auto disk = DomainDescriptor::disk(1.0);
    CHECK_ERROR_KIND(green(disk, 0.3, 0.3), ErrorKind::pole);
    CHECK_ERROR_KIND(green(disk, 1.3, 0.3), ErrorKind::domain);
    CHECK_ERROR_KIND(robin_data(disk, 1.0 - 1e-10), ErrorKind::conditioning);
    CHECK(disk.is_convex());
    CHECK(!DomainDescriptor::slit_plane().is_convex());
}
