#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <array>

#include "oracles/fekete_grid.hpp"
#include "potkit/equilibrium.hpp"

using namespace potkit;

TEST_CASE("discrete energy") {
    const std::array<cplx, 2> near{cplx(0.0), cplx(1.0)};
    const std::array<cplx, 2> far{cplx(0.0), cplx(std::exp(1.0))};
    const std::array<double, 2> same{1.0, 1.0};
    const std::array<double, 2> opposite{1.0, -1.0};
    CHECK_NEAR(discrete_energy(near, same), 0.0, 1e-15);
    CHECK_NEAR(discrete_energy(far, same), -1.0 / (2.0 * pi), 1e-15);
    CHECK_NEAR(discrete_energy(far, opposite), 1.0 / (2.0 * pi), 1e-15);
    const std::array<cplx, 2> clash{cplx(0.5), cplx(0.5)};
    CHECK_ERROR_KIND(discrete_energy(clash, same), ErrorKind::collision);
}

TEST_CASE("small Fekete problems against exhaustive search") {
    const auto circle = CompactSet::circle(1.0);
    const auto segment = CompactSet::segment(2.0);
    CHECK_NEAR(fekete_points(circle, 2).delta_n, 2.0, 1e-12);
    CHECK_NEAR(fekete_points(circle, 3).delta_n, std::sqrt(3.0), 1e-12);
    CHECK_NEAR(fekete_points(segment, 2).delta_n, 2.0, 1e-12);
    const double grid3 = oracle::fekete_grid([&](double t) { return circle.point(t); }, 3, 240, true);
    CHECK_NEAR(grid3, std::sqrt(3.0), 1e-12);
    const double seg3 = oracle::fekete_grid([&](double t) { return segment.point(t); }, 3, 120, false);
    CHECK_NEAR(fekete_points(segment, 3).delta_n, seg3, 1e-6);
    CHECK_NEAR(fekete_delta_bruteforce(segment, 3, 121), seg3, 1e-9);
    // three points on a segment: endpoints and the midpoint, delta_3 = (2 * 1 * 1)^(1/3)
    CHECK_NEAR(fekete_points(segment, 3).delta_n, std::cbrt(2.0), 1e-10);
    const auto sq = CompactSet::rectangle_boundary(1.0, 1.0);
    const double sq4 = oracle::fekete_grid([&](double t) { return sq.point(t); }, 4, 64, true);
    CHECK(fekete_points(sq, 4).delta_n >= sq4 - 1e-9);
}

TEST_CASE("Fekete points lie on the set") {
    const auto seg = CompactSet::segment(3.0);
    const auto f = fekete_points(seg, 12);
    for (cplx p : f.points) CHECK(seg.contains(p, 1e-12));
    CHECK(f.converged);
    CHECK_ERROR_KIND(fekete_points(seg, 1), ErrorKind::parameter);
    CHECK_ERROR_KIND(fekete_points(CompactSet::disk_complement(1.0), 4), ErrorKind::parameter);
}

TEST_CASE("transfinite diameter") {
    const auto circle = transfinite_diameter(CompactSet::circle(1.0), std::nullopt, 32);
    CHECK_NEAR(circle.delta, 1.0, 5e-3);
    CHECK_NEAR(circle.logcap, 1.0, 1e-8);
    CHECK(circle.points.size() == circle.ladder.size());
    for (std::size_t i = 1; i < circle.delta_n.size(); ++i) CHECK(circle.delta_n[i] <= circle.delta_n[i - 1] + 1e-12);
    const auto seg = transfinite_diameter(CompactSet::segment(2.0), std::nullopt, 32);
    CHECK_NEAR(seg.delta, 0.5, 1e-2);
    CHECK_NEAR(seg.logcap, 0.5, 1e-4);
    const auto outside = transfinite_diameter(CompactSet::disk_complement(1.0), cplx(0.0), 32);
    CHECK_NEAR(outside.delta, 1.0, 2e-2);
}

TEST_CASE("equilibrium measures") {
    const auto c = equilibrium_measure(CompactSet::circle(1.0), 64);
    CHECK_NEAR(c.gamma, 0.0, 1e-10);
    for (double w : c.measure.weights) CHECK_NEAR(w, 1.0 / 64.0, 1e-12);
    CHECK_NEAR(equilibrium_measure(CompactSet::circle(2.0), 64).gamma, -std::log(2.0), 1e-10);
    const auto s = equilibrium_measure(CompactSet::segment(2.0), 128);
    CHECK_NEAR(std::exp(-s.gamma), 0.5, 1e-4);
    CHECK_NEAR(4.0 * pi * s.energy, s.gamma, 1e-10);
    CHECK_NEAR(s.measure.total(), 1.0, 1e-12);
    // the potential is constant on the set and smaller off it
    CHECK_NEAR(s.potential(cplx(0.3, 0.0)), s.gamma / (2.0 * pi), 1e-3);
    CHECK(s.potential(cplx(0.0, 1.0)) < s.gamma / (2.0 * pi));
    // logarithmic capacity of the unit square: Gamma(1/4)^2 / (4 pi^{3/2})
    const double square = std::pow(std::tgamma(0.25), 2) / (4.0 * std::pow(pi, 1.5));
    CHECK_NEAR(std::exp(-equilibrium_measure(CompactSet::rectangle_boundary(1.0, 1.0), 256).gamma), square, 5e-4);
    CHECK_ERROR_KIND(equilibrium_measure(CompactSet::circle(1.0), 8), ErrorKind::parameter);
}

TEST_CASE("harmonic measure") {
    const auto disk = DomainDescriptor::disk(1.0);
    const auto centre = harmonic_measure(disk, 0.0, 64);
    for (double w : centre.weights) CHECK_NEAR(w, 1.0 / 64.0, 1e-15);
    const auto off = harmonic_measure(disk, 0.3, 128);
    CHECK_NEAR(off.integrate([](cplx z) { return z.real(); }), 0.3, 1e-13);
    const auto rect = DomainDescriptor::rectangle(1.0, 1.0, 32);
    const auto r = harmonic_measure(rect, cplx(0.5, 0.5), 0);
    CHECK_NEAR(r.total(), 1.0, 1e-10);
    // x is harmonic and also harmonic for the five-point scheme
    CHECK_NEAR(r.integrate([](cplx z) { return z.real(); }), 0.5, 1e-10);
    CHECK_ERROR_KIND(harmonic_measure(disk, 1.5, 64), ErrorKind::domain);
}

TEST_CASE("condenser capacity") {
    CHECK_NEAR(condenser_capacity(1.0, std::exp(1.0), 2), 2.0 * pi, 1e-14);
    CHECK_NEAR(condenser_capacity(1.0, std::numeric_limits<double>::infinity(), 3), 4.0 * pi, 1e-14);
    CHECK_NEAR(condenser_capacity(3.0, 3.0 * std::exp(1.0), 2), 2.0 * pi, 1e-14);
    CHECK_ERROR_KIND(condenser_capacity(2.0, 1.0, 2), ErrorKind::parameter);
}
