#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "potkit/vortex.hpp"

using namespace potkit;

TEST_CASE("pair force") {
    const cplx f = pair_force(0.0, 1.0, 1.0, -1.0);
    CHECK_NEAR(std::abs(f), 1.0 / (2.0 * pi), 1e-15);
    CHECK(f.real() > 0.0);  // opposite vortices attract: force on a points toward b
    CHECK(pair_force(0.0, 1.0, 1.0, 1.0).real() < 0.0);
    CHECK_ERROR_KIND(pair_force(0.2, 0.2, 1.0, 1.0), ErrorKind::collision);
}

TEST_CASE("bound vortex force") {
    CHECK(bound_vortex_force(0.0, 1.0) == cplx(0.0));
    const cplx f = bound_vortex_force(-2.0 / 3.0, 1.0);
    CHECK_NEAR(f, cplx(1.0 / (3.0 * pi)), 1e-15);  // 0.1061033, toward the nearest wall
}

TEST_CASE("free vortex velocities") {
    VortexSystem single{{cplx(0.3, 0.4)}, {1.0}, VortexDomain::plane()};
    CHECK(free_vortex_velocity(single, 0) == cplx(0.0));

    VortexSystem disk{{cplx(0.5)}, {1.0}, VortexDomain::disk(1.0)};
    const cplx v = free_vortex_velocity(disk, 0);
    CHECK_NEAR(v, cplx(0.0, 1.0 / (3.0 * pi)), 1e-15);
    CHECK_NEAR(std::abs(v) / 0.5, 1.0 / (2.0 * pi * 0.75), 1e-15);

    VortexSystem pair{{cplx(0.0), cplx(1.0)}, {1.0, -1.0}, VortexDomain::plane()};
    const cplx v0 = free_vortex_velocity(pair, 0);
    const cplx v1 = free_vortex_velocity(pair, 1);
    CHECK_NEAR(v0, v1, 1e-15);
    CHECK_NEAR(std::abs(v0), 1.0 / (2.0 * pi), 1e-15);
    CHECK_NEAR(v0.real(), 0.0, 1e-15);  // perpendicular to the chord
    CHECK_ERROR_KIND(free_vortex_velocity(pair, 2), ErrorKind::parameter);
}

TEST_CASE("velocity is rotation equivariant in the disk") {
    VortexSystem sys{{cplx(0.3, 0.1), cplx(-0.2, 0.5), cplx(0.1, -0.6)}, {1.0, -0.5, 2.0}, VortexDomain::disk(1.0)};
    const cplx r = std::polar(1.0, 0.8);
    VortexSystem rotated = sys;
    for (auto& z : rotated.positions) z *= r;
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK_NEAR(free_vortex_velocity(rotated, k), r * free_vortex_velocity(sys, k), 1e-12);
    }
    const auto s = vortex_field(sys, sys.positions, Exec::serial);
    const auto p = vortex_field(sys, sys.positions, Exec::parallel);
    CHECK(s == p);
}

TEST_CASE("forced vortex velocity") {
    const cplx h1(0.2, -0.1);
    CHECK_NEAR(forced_vortex_velocity(h1, 1.5, 0.0), 1.5 / (2.0 * pi * I) * std::conj(h1), 1e-15);
    CHECK_NEAR(forced_vortex_velocity(h1, 1.5, bound_vortex_force(h1, 1.5)), cplx(0.0), 1e-15);
    CHECK_NEAR(forced_vortex_velocity(0.0, 1.0, I), cplx(1.0), 1e-15);
    CHECK_ERROR_KIND(forced_vortex_velocity(h1, 0.0, I), ErrorKind::parameter);
}

TEST_CASE("stream function near a vortex") {
    VortexSystem sys{{cplx(0.3, 0.2)}, {1.0}, VortexDomain::disk(1.0)};
    const double eps = 1e-7;
    const double psi = stream_function(sys, cplx(0.3 + eps, 0.2));
    const double h0 = std::log(1.0 - 0.13);
    CHECK_NEAR(psi + std::log(eps) / (2.0 * pi), h0 / (2.0 * pi), 1e-7);
    CHECK_ERROR_KIND(stream_function(sys, cplx(0.3, 0.2)), ErrorKind::pole);
}

TEST_CASE("energy") {
    VortexSystem sys{{cplx(0.0), cplx(std::exp(1.0))}, {1.0, 1.0}, VortexDomain::plane()};
    CHECK_NEAR(vortex_energy(sys), -1.0 / (2.0 * pi), 1e-15);
}

TEST_CASE("trajectories") {
    const auto pair = simulate({{0.0, 1.0}, {1.0, -1.0}, VortexDomain::plane()}, 10.0, 1e-10);
    CHECK_NEAR(pair.monitors.at("displacement").back(), 10.0 / (2.0 * pi), 1e-6);

    const auto equal = simulate({{-0.5, 0.5}, {1.0, 1.0}, VortexDomain::plane()}, 2.0 * pi * pi, 1e-10);
    CHECK(std::abs(equal.states.back()[0] - cplx(-0.5)) < 1e-6);
    CHECK(std::abs(equal.states.back()[1] - cplx(0.5)) < 1e-6);

    const auto disk = simulate({{0.5}, {1.0}, VortexDomain::disk(1.0)}, 3.0 * pi * pi, 1e-10);
    for (double r : disk.monitors.at("radius")) CHECK(std::abs(r - 0.5) < 1e-9);
    CHECK(std::abs(disk.states.back()[0] - cplx(0.5)) < 1e-6);

    const auto three = simulate({{cplx(0.2, 0.1), cplx(-0.3, 0.2), cplx(0.1, -0.4)}, {1.0, 0.5, -0.7},
                                 VortexDomain::disk(1.0)}, 5.0, 1e-10);
    const auto& e = three.monitors.at("energy");
    for (double v : e) CHECK(std::abs(v - e.front()) < 1e-8);
    const auto& m = three.monitors.at("angular_moment");
    for (double v : m) CHECK(std::abs(v - m.front()) < 1e-8);
}

TEST_CASE("time reversal") {
    VortexSystem sys{{cplx(0.2, 0.1), cplx(-0.3, 0.2), cplx(0.4, -0.4)}, {1.0, 1.0, -0.5}, VortexDomain::plane()};
    const auto fwd = simulate(sys, 4.0, 1e-11);
    VortexSystem end = sys;
    end.positions = fwd.states.back();
    const auto back = simulate(end, -4.0, 1e-11);
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(back.states.back()[k] - sys.positions[k]) < 1e-8);
}

TEST_CASE("collapse is reported as a collision") {
    // strengths (2, 2, -1) with zero angular impulse collapse self-similarly
    const cplx z3 = std::polar(std::sqrt(3.0), 0.3);
    VortexSystem sys{{cplx(-1.0), cplx(1.0), z3}, {2.0, 2.0, -1.0}, VortexDomain::plane()};
    bool raised = false;
    try {
        (void)simulate(sys, 20.0, 1e-10);
    } catch (const CollisionError& e) {
        raised = true;
        CHECK(e.time() > 1.0);
        CHECK(e.time() < 20.0);
    }
    CHECK(raised);
}

TEST_CASE("validation") {
    CHECK_ERROR_KIND((VortexSystem{{cplx(1.2)}, {1.0}, VortexDomain::disk(1.0)}.validate()), ErrorKind::domain);
    CHECK_ERROR_KIND((VortexSystem{{cplx(0.1), cplx(0.1)}, {1.0, 1.0}, VortexDomain::plane()}.validate()),
                     ErrorKind::collision);
    CHECK_ERROR_KIND((VortexSystem{{cplx(0.1)}, {1.0, 2.0}, VortexDomain::plane()}.validate()), ErrorKind::parameter);
}
