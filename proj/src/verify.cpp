#include "potkit/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "potkit/elliptic.hpp"
#include "potkit/equilibrium.hpp"
#include "potkit/hadamard.hpp"
#include "potkit/planar_green.hpp"
#include "potkit/schottky.hpp"
#include "potkit/surface.hpp"
#include "potkit/vortex.hpp"

namespace potkit {

namespace {

class Table {
public:
    explicit Table(bool corrupt) : corrupt_(corrupt) {}

    void add(std::string name, std::string anchor, double tolerance, const std::function<double()>& residual,
             bool strict = false) {
        IdentityRow row;
        row.name = std::move(name);
        row.anchor = std::move(anchor);
        row.tolerance = corrupt_ ? -1.0 : tolerance;
        try {
            row.residual = residual();
        } catch (const std::exception& e) {
            row.residual = std::numeric_limits<double>::infinity();
            row.error = e.what();
        }
        row.pass = std::isfinite(row.residual) &&
                   (strict ? row.residual < row.tolerance : row.residual <= row.tolerance);
        rows.push_back(std::move(row));
    }

    std::vector<IdentityRow> rows;

private:
    bool corrupt_;
};

using Rng = std::mt19937_64;

cplx random_in_disk(Rng& rng, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(rmax * std::sqrt(u(rng)), 2.0 * pi * u(rng));
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// ---------------------------------------------------------------- planar

void planar_suite(Table& t) {
    const auto disk = DomainDescriptor::disk(1.0);
    const auto half = DomainDescriptor::half_plane();
    const auto slit = DomainDescriptor::slit_plane();

    t.add("Deltah0K", "disk: -Laplacian h0(a) = 4 pi K(a,a) at a = 0.5", 1e-8, [&] {
        const double lap = laplacian([&](cplx p) { return robin_data(disk, p).h0; }, 0.5, 2e-3, true);
        return std::abs(-lap - 4.0 * pi * bergman_disk(0.5, 0.5).real());
    });

    t.add("h1_contour_disk", "disk: h1 from the boundary integral of (dG/dz)^2, 20 points", 1e-8, [&] {
        Rng rng(11);
        double r = 0.0;
        for (int k = 0; k < 20; ++k) {
            const cplx a = random_in_disk(rng, 0.85);
            r = std::max(r, std::abs(h1_contour(disk, a, 256).value - robin_data(disk, a).h1));
        }
        return r;
    });

    t.add("h1_contour_half_plane", "half-plane: truncated boundary integral gives h1(i) = -i/2", 1e-4, [&] {
        return std::abs(h1_contour(half, I, 512).value + 0.5 * I);
    });

    t.add("green_flux", "disk: boundary flux of -dG/dn equals 1", 1e-10, [&] {
        const cplx a(0.3, 0.2);
        const std::size_t n = 256;
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx z = std::polar(1.0, 2.0 * pi * static_cast<double>(k) / static_cast<double>(n));
            s -= 2.0 * std::real(green_dz(disk, z, a) * z);
        }
        return std::abs(s * 2.0 * pi / static_cast<double>(n) - 1.0);
    });

    t.add("green_boundary_values", "disk, half-plane, slit plane: G = 0 on 200 boundary points", 1e-9, [&] {
        double r = 0.0;
        for (int k = 0; k < 200; ++k) {
            const double s = static_cast<double>(k) / 200.0;
            r = std::max(r, std::abs(green(disk, std::polar(1.0, 2.0 * pi * s), cplx(0.3, -0.4))));
            r = std::max(r, std::abs(green(half, cplx(20.0 * (s - 0.5), 0.0), cplx(0.2, 0.7))));
            r = std::max(r, std::abs(green(slit, cplx(-10.0 * s - 0.01, 0.0), cplx(0.5, 0.5))));
        }
        return r;
    });

    t.add("green_symmetry", "G(z,a) = G(a,z) on the disk and the slit plane", 1e-12, [&] {
        const cplx z(0.3, 0.1);
        const cplx a(0.5, 0.0);
        const cplx p(-0.7, 0.4);
        return std::max(std::abs(green(disk, z, a) - green(disk, a, z)), std::abs(green(slit, p, a) - green(slit, a, p)));
    });

    t.add("poisson_re_z3", "Poisson integral reproduces Re z^3 at 10 points, 512 nodes", 1e-10, [&] {
        Rng rng(13);
        double r = 0.0;
        for (int k = 0; k < 10; ++k) {
            const cplx a = random_in_disk(rng, 0.8);
            const double v = poisson_value([](cplx z) { return std::real(z * z * z); }, a, 1.0, 512);
            r = std::max(r, std::abs(v - std::real(a * a * a)));
        }
        return r;
    });

    auto transport_residuals = [&] {
        Rng rng(17);
        double r0 = 0.0;
        double r1 = 0.0;
        for (int k = 0; k < 20; ++k) {
            const cplx b = random_in_disk(rng, 0.7);
            const cplx rot = std::polar(1.0, uniform(rng, 0.0, 2.0 * pi));
            const cplx at = random_in_disk(rng, 0.7);
            const cplx den = 1.0 - std::conj(b) * at;
            const cplx image = rot * (at - b) / den;
            const MapJet jet{rot * (1.0 - std::norm(b)) / (den * den),
                             rot * (1.0 - std::norm(b)) * 2.0 * std::conj(b) / (den * den * den)};
            const GreenExpansion moved = conformal_transport(robin_data(disk, at), jet);
            const GreenExpansion direct = robin_data(disk, image);
            r0 = std::max(r0, std::abs(moved.h0 - direct.h0));
            r1 = std::max(r1, std::abs(moved.h1 - direct.h1));
        }
        return std::array<double, 2>{r0, r1};
    };
    t.add("transformation_h0", "h0 gains log|f'| under 20 disk automorphisms", 1e-10,
          [&] { return transport_residuals()[0]; });
    t.add("transformation_h1", "h1 transforms as an affine connection under 20 disk automorphisms", 1e-10,
          [&] { return transport_residuals()[1]; });

    t.add("robin_monotonicity", "h0 on the unit disk is below h0 on the disk of radius 2", 0.0, [&] {
        Rng rng(19);
        double worst = -std::numeric_limits<double>::infinity();
        const auto big = DomainDescriptor::disk(2.0);
        for (int k = 0; k < 50; ++k) {
            const cplx a = random_in_disk(rng, 0.95);
            worst = std::max(worst, robin_data(disk, a).h0 - robin_data(big, a).h0);
        }
        return worst;
    }, true);

    t.add("robin_sandwich", "log d <= h0 <= log 2d (convex), <= log 4d (slit plane), 50 points per kind", 1e-12, [&] {
        Rng rng(23);
        double v = 0.0;
        auto check = [&](const DomainDescriptor& dom, cplx a, double h0, double factor) {
            const double d = dom.boundary_distance(a);
            v = std::max({v, std::log(d) - h0, h0 - std::log(factor * d)});
        };
        const auto rect = DomainDescriptor::rectangle(1.0, 1.0, 64);
        for (int k = 0; k < 50; ++k) {
            const cplx a = random_in_disk(rng, 0.98);
            check(disk, a, robin_data(disk, a).h0, 2.0);
            const cplx ah(uniform(rng, -5.0, 5.0), uniform(rng, 0.01, 3.0));
            check(half, ah, robin_data(half, ah).h0, 2.0);
            const cplx as = std::polar(uniform(rng, 0.05, 5.0), uniform(rng, -0.99 * pi, 0.99 * pi));
            check(slit, as, robin_data(slit, as).h0, 4.0);
            const cplx ar(uniform(rng, 0.05, 0.95), uniform(rng, 0.05, 0.95));
            check(rect, ar, regular_part(rect, ar, ar), 2.0);
        }
        return v;
    });

    t.add("liouville_disk", "curvature of exp(-h0)|dz| on the disk is -4", 1e-6, [&] {
        return std::abs(curvature_of_metric([&](cplx p) { return robin_data(disk, p).h0; }, 0.5) + 4.0);
    });

    t.add("liouville_sphere", "curvature of the spherical metric is +1", 1e-6, [&] {
        auto gamma = [](cplx z) { return -0.5 * std::log(sphere::metric_density_sq(z)); };
        return std::abs(curvature_of_metric(gamma, 0.2) - 1.0);
    });

    t.add("bergman_reproducing", "disk Bergman kernel reproduces z^2 at 0.4", 1e-10, [&] {
        const auto q = area_quadrature([](cplx z) { return z * z * std::conj(bergman_disk(z, 0.4)); },
                                       Region::make_disk(0.0, 1.0), 64);
        return std::abs(q.value - 0.16);
    });

    t.add("bergman_hermitian", "K(a,z) = conj K(z,a) on the disk", 1e-14, [&] {
        const cplx z(0.3, -0.2);
        const cplx a(-0.1, 0.6);
        return std::abs(bergman_disk(a, z) - std::conj(bergman_disk(z, a)));
    });

    t.add("rectangle_fd_symmetry", "fd Green function of the unit square is symmetric on node pairs", 1e-8, [&] {
        const auto sq = DomainDescriptor::rectangle(1.0, 1.0, 64);
        const cplx a(0.25, 0.5);
        const cplx b(0.75, 0.375);
        const GridField ga = fd_dirichlet_green(sq, a);
        const GridField gb = fd_dirichlet_green(sq, b);
        return std::abs(ga.at(48, 24) - gb.at(16, 32));
    });

    t.add("harmonic_measure_disk", "disk harmonic measure reproduces 5 harmonic polynomials at 5 points", 1e-8, [&] {
        Rng rng(29);
        const std::array<std::function<double(cplx)>, 5> polys{
            [](cplx) { return 1.0; }, [](cplx z) { return z.real(); }, [](cplx z) { return z.imag(); },
            [](cplx z) { return std::real(z * z); }, [](cplx z) { return std::imag(z * z * z); }};
        double r = 0.0;
        for (int k = 0; k < 5; ++k) {
            const cplx a = random_in_disk(rng, 0.7);
            const WeightedMeasure mu = harmonic_measure(disk, a, 256);
            for (const auto& p : polys) r = std::max(r, std::abs(mu.integrate(p) - p(a)));
        }
        return r;
    });

    t.add("harmonic_measure_rectangle", "rectangle fd harmonic measure has unit mass", 1e-10, [&] {
        const auto rect = DomainDescriptor::rectangle(2.0, 1.0, 64);
        return std::abs(harmonic_measure(rect, cplx(0.5, 0.25), 0).total() - 1.0);
    });

    t.add("balayage", "swept measure has the potential of the point mass outside the disk", 1e-6, [&] {
        const cplx a(0.3, 0.0);
        const WeightedMeasure mu = harmonic_measure(disk, a, 512);
        double r = 0.0;
        for (int k = 0; k < 10; ++k) {
            const cplx z = std::polar(1.5 + 0.2 * k, 0.7 * k);
            r = std::max(r, std::abs(mu.potential(z) + std::log(std::abs(z - a)) / (2.0 * pi)));
        }
        return r;
    });

    t.add("hadamard_green_dilation", "dG(0,0.5) under dilation equals 1/2pi on both sides", 1e-6, [&] {
        const auto p = hadamard_delta_green(BoundaryVariation::dilation(1e-4), 0.0, 0.5, 512);
        return std::max(std::abs(p.lhs - 1.0 / (2.0 * pi)), std::abs(p.rhs - 1.0 / (2.0 * pi)));
    });

    t.add("hadamard_green_translation", "translation mode: fd and boundary integral agree", 1e-5, [&] {
        const auto p = hadamard_delta_green(BoundaryVariation::translation(1e-4), 0.0, 0.5, 512);
        return std::abs(p.lhs - p.rhs);
    });

    t.add("hadamard_h0_dilation", "dh0(0.5) under dilation equals 5/3", 1e-6, [&] {
        const auto p = hadamard_delta_h0(BoundaryVariation::dilation(1e-4), 0.5, 512);
        return std::max(std::abs(p.lhs - 5.0 / 3.0), std::abs(p.rhs - 5.0 / 3.0));
    });

    t.add("hadamard_h0_odd", "dh0(0) vanishes for the translation mode", 1e-10, [&] {
        return std::abs(hadamard_delta_h0(BoundaryVariation::translation(1e-4), 0.0, 512).rhs);
    });

    t.add("hadamard_first_order", "forward-difference discrepancy decays like epsilon (slope 1)", 0.2, [&] {
        double worst = 0.0;
        for (int mode = 0; mode < 3; ++mode) {
            std::vector<double> rel;
            for (double e : {1e-3, 1e-4, 1e-5}) {
                const BoundaryVariation v = mode == 0   ? BoundaryVariation::dilation(e)
                                            : mode == 1 ? BoundaryVariation::translation(e)
                                                        : BoundaryVariation::general(
                                                              [](double th) { return std::cos(2.0 * th); }, e);
                const auto p = hadamard_delta_green(v, cplx(0.1, 0.2), cplx(0.5, -0.1), 512, Difference::forward);
                rel.push_back(std::abs(p.lhs - p.rhs) / std::abs(p.rhs));
            }
            const double slope = std::log10(rel.front() / rel.back()) / 2.0;
            worst = std::max(worst, std::abs(slope - 1.0));
        }
        return worst;
    });

    t.add("triple_green_symmetry", "boundary triple product symmetric under all permutations", 1e-10, [&] {
        const std::array<cplx, 3> p{cplx(0.2, 0.1), cplx(-0.3, 0.4), cplx(0.1, -0.5)};
        std::array<int, 3> idx{0, 1, 2};
        const double ref = triple_green(p[0], p[1], p[2], 512);
        double r = 0.0;
        do {
            r = std::max(r, std::abs(triple_green(p[idx[0]], p[idx[1]], p[idx[2]], 512) - ref));
        } while (std::next_permutation(idx.begin(), idx.end()));
        return r + std::abs(triple_green(0.0, 0.0, 0.0, 512) + 1.0 / (4.0 * pi * pi));
    });

    t.add("triple_green_hele_shaw", "dG(a,b) under the Hele-Shaw variation of c equals minus the triple product",
          1e-4, [&] {
              const cplx a(0.2, 0.1);
              const cplx b(-0.3, 0.4);
              const cplx c(0.1, -0.5);
              const auto v = BoundaryVariation::general(
                  [c](double th) { return -disk_normal_derivative(std::polar(1.0, th), c, 1.0); }, 1e-4);
              return std::abs(hadamard_delta_green(v, a, b, 512).lhs + triple_green(a, b, c, 512));
          });

    t.add("equilibrium_circle", "Robin constant of the circle of radius 2 is -log 2", 1e-8, [&] {
        return std::abs(equilibrium_measure(CompactSet::circle(2.0), 128).gamma + std::log(2.0));
    });

    t.add("equilibrium_energy", "4 pi E = gamma for the segment", 1e-8, [&] {
        const auto e = equilibrium_measure(CompactSet::segment(2.0), 128);
        return std::abs(4.0 * pi * e.energy - e.gamma);
    });

    CapacityReport circle_rep;
    CapacityReport segment_rep;
    t.add("logcap_circle", "extrapolated Fekete ladder for the unit circle gives 1", 5e-3, [&] {
        circle_rep = transfinite_diameter(CompactSet::circle(1.0), std::nullopt, 32);
        return std::abs(circle_rep.delta - 1.0);
    });
    t.add("logcap_segment", "extrapolated Fekete ladder for a segment of length 2 gives 1/2", 1e-2, [&] {
        segment_rep = transfinite_diameter(CompactSet::segment(2.0), std::nullopt, 32);
        return std::abs(segment_rep.delta - 0.5);
    });
    t.add("capacity_identity", "logcap = delta = exp(-4 pi E) on the circle and the segment", 1e-2, [&] {
        double r = 0.0;
        for (const auto* rep : {&circle_rep, &segment_rep}) {
            if (rep->delta_n.empty()) return std::numeric_limits<double>::infinity();
            r = std::max({r, std::abs(rep->logcap - rep->delta), std::abs(std::exp(-4.0 * pi * rep->energy) - rep->delta)});
        }
        return r;
    });

    t.add("fekete_triangle", "three Fekete points on the circle: delta_3 = sqrt 3", 1e-10, [&] {
        return std::abs(fekete_points(CompactSet::circle(1.0), 3).delta_n - std::sqrt(3.0));
    });

    t.add("condenser_capacity", "2 pi / log(R/r) in the plane, 4 pi r in space", 1e-12, [&] {
        return std::max(std::abs(condenser_capacity(1.0, std::exp(1.0), 2) - 2.0 * pi),
                        std::abs(condenser_capacity(1.0, std::numeric_limits<double>::infinity(), 3) - 4.0 * pi));
    });

    double energy_drift = 0.0;
    auto drift = [&](const Trajectory& tr) {
        const auto& e = tr.monitors.at("energy");
        for (double v : e) energy_drift = std::max(energy_drift, std::abs(v - e.front()));
    };
    t.add("vortex_pair_translation", "opposite pair translates 10/2pi in time 10", 1e-6, [&] {
        const auto tr = simulate({{0.0, 1.0}, {1.0, -1.0}, VortexDomain::plane()}, 10.0, 1e-10);
        drift(tr);
        return std::abs(tr.monitors.at("displacement").back() - 10.0 / (2.0 * pi));
    });
    t.add("vortex_equal_pair_period", "equal pair returns after 2 pi^2", 1e-6, [&] {
        const auto tr = simulate({{-0.5, 0.5}, {1.0, 1.0}, VortexDomain::plane()}, 2.0 * pi * pi, 1e-10);
        drift(tr);
        return tr.monitors.at("displacement").back();
    });
    t.add("vortex_disk_radius", "single disk vortex keeps its radius over one period", 1e-9, [&] {
        const auto tr = simulate({{0.5}, {1.0}, VortexDomain::disk(1.0)}, 4.0 * pi * pi * 0.75, 1e-10);
        drift(tr);
        double r = 0.0;
        for (double v : tr.monitors.at("radius")) r = std::max(r, std::abs(v - 0.5));
        return r;
    });
    t.add("vortex_energy_drift", "Hamiltonian drift along the three runs above", 1e-8, [&] { return energy_drift; });
}

// ---------------------------------------------------------------- surface

void surface_suite(Table& t) {
    const std::array<cplx, 4> taus{cplx(0, 1.5), cplx(0, 2), cplx(0, 3), cplx(0.3, 2)};

    t.add("legendre", "eta1 tau - eta2 = 2 pi i for four moduli", 1e-12, [&] {
        double r = 0.0;
        for (cplx tau : taus) r = std::max(r, TorusLattice(tau).legendre_residual());
        return r;
    });

    t.add("root_sum", "e1 + e2 + e3 = 0 for four moduli", 1e-12, [&] {
        double r = 0.0;
        for (cplx tau : taus) {
            const TorusLattice L(tau);
            r = std::max(r, std::abs(L.e1() + L.e2() + L.e3()));
        }
        return r;
    });

    t.add("wp_ode", "(wp')^2 = 4 (wp - e1)(wp - e2)(wp - e3) at 100 random points", 1e-9, [&] {
        Rng rng(31);
        double r = 0.0;
        for (cplx tau : taus) {
            const TorusLattice L(tau);
            int done = 0;
            while (done < 25) {
                const cplx z = uniform(rng, -0.5, 0.5) + tau * uniform(rng, -0.5, 0.5);
                if (std::abs(z) < 0.2) continue;
                const cplx p = wp(z, L);
                const cplx d = wp_prime(z, L);
                r = std::max(r, std::abs(d * d - 4.0 * (p - L.e1()) * (p - L.e2()) * (p - L.e3())));
                ++done;
            }
        }
        return r;
    });

    t.add("wp_periodicity", "wp(z+1) = wp(z+tau) = wp(z) on a 10x10 grid", 1e-10, [&] {
        const TorusLattice L(cplx(0, 2));
        double r = 0.0;
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                const cplx z = (i + 0.5) / 10.0 + L.tau() * ((j + 0.5) / 10.0);
                const cplx p = wp(z, L);
                r = std::max({r, std::abs(wp(z + 1.0, L) - p), std::abs(wp(z + L.tau(), L) - p)});
            }
        }
        return r;
    });

    t.add("wp_laurent_head", "z^2 wp(z) -> 1 at |z| = 1e-3", 1e-6, [&] {
        const TorusLattice L(cplx(0, 2));
        const cplx z = std::polar(1e-3, 0.4);
        return std::abs(z * z * wp(z, L) - 1.0);
    });

    const TorusSpec spec(cplx(0, 2));
    const cplx a0(0.1, 0.2);
    t.add("torus_green_ddbar", "d^2 G / dz dzbar = 1/(4 Im tau) off the pole", 1e-5, [&] {
        auto g = [&](cplx z) { return cplx(torus_green(z, a0, spec)); };
        return std::abs(wirtinger_derivative(g, cplx(0.4, 1.1), Wirtinger::d2_dz_dzbar, 1e-3).real() - 0.125);
    });
    t.add("torus_green_mean", "integral of G over the period cell is 0", 1e-6, [&] {
        const auto q = area_quadrature([&](cplx z) { return cplx(torus_green(z, a0, spec)); },
                                       spec.cell_centered_at(a0), 64, a0);
        return std::abs(q.value);
    });
    t.add("torus_green_symmetry", "G(z,a) = G(a,z) on the torus", 1e-10, [&] {
        Rng rng(37);
        double r = 0.0;
        for (int k = 0; k < 20; ++k) {
            const cplx z(uniform(rng, -1, 1), uniform(rng, -2, 2));
            const cplx a(uniform(rng, -1, 1), uniform(rng, -2, 2));
            r = std::max(r, std::abs(torus_green(z, a, spec) - torus_green(a, z, spec)));
        }
        return r;
    });
    t.add("torus_bergman_constant", "K_double = 1/Im tau = 0.5", 1e-15, [&] {
        return std::abs(torus_kernels(cplx(0.3, 0.2), cplx(-0.1, 0.9), spec).bergman - 0.5);
    });
    t.add("schiffer_head", "(z-a)^2 L(z,a) -> 1/pi", 1e-6, [&] {
        const cplx w = std::polar(1e-4, 0.3);
        return std::abs(w * w * torus_kernels(a0 + w, a0, spec).schiffer - 1.0 / pi);
    });
    t.add("schiffer_principal_value", "principal value of the Schiffer kernel over the cell is 0", 1e-6, [&] {
        const auto q = principal_value_quadrature([&](cplx z) { return torus_kernels(z, a0, spec).schiffer; },
                                                  spec.cell_centered_at(a0), a0, 64);
        return std::abs(q.value);
    });

    t.add("period_matrices", "PQ = I + R^2, symmetry and positivity of the closed forms", 1e-10, [&] {
        double r = 0.0;
        for (cplx tau : taus) {
            const auto pm = torus_harmonic_basis(TorusSpec(tau)).periods;
            if (!pm.positive_definite()) return std::numeric_limits<double>::infinity();
            r = std::max(r, pm.identity_residual());
        }
        return r;
    });
    t.add("period_matrices_numeric", "P, Q, R recomputed from cycle integrals of the harmonic basis", 1e-10, [&] {
        double r = 0.0;
        for (cplx tau : taus) {
            const TorusSpec s(tau);
            const auto closed = torus_harmonic_basis(s).periods;
            const auto num = torus_period_matrices_numeric(s);
            r = std::max({r, (closed.P - num.P).cwiseAbs().maxCoeff(), (closed.Q - num.Q).cwiseAbs().maxCoeff(),
                          (closed.R - num.R).cwiseAbs().maxCoeff()});
        }
        return r;
    });
    t.add("form_periods", "cycle periods of eta and omega on the torus tau = 0.3 + 2i", 1e-12, [&] {
        const TorusSpec s(cplx(0.3, 2.0));
        const auto b = torus_harmonic_basis(s);
        const double Q = b.periods.Q(0, 0);
        const double R = b.periods.R(0, 0);
        const Cycle al = alpha_cycle(s);
        const Cycle be = beta_cycle(s);
        return std::max({std::abs(form_period(b.eta_beta, al) + 1.0), std::abs(form_period(b.eta_alpha, be) - 1.0),
                         std::abs(form_period(b.omega_alpha, be) - (1.0 + I * R)),
                         std::abs(form_period(b.omega_alpha, al) + I * Q)});
    });
    t.add("cycle_intersection", "integral of eta_alpha ^ eta_beta over the torus is 1", 1e-10, [&] {
        const TorusSpec s(cplx(0.3, 2.0));
        const auto b = torus_harmonic_basis(s);
        return std::abs(wedge_integral(b.eta_alpha, b.eta_beta, s) - 1.0);
    });
    t.add("UQRU", "Q^{-1}(R + i) omega_alpha + omega_beta = 0", 1e-12, [&] {
        double r = 0.0;
        for (cplx tau : taus) {
            const auto b = torus_harmonic_basis(TorusSpec(tau));
            const double Q = b.periods.Q(0, 0);
            const double R = b.periods.R(0, 0);
            r = std::max(r, std::abs((R + I) * b.omega_alpha_coefficient / Q + b.omega_beta_coefficient));
        }
        return r;
    });
    t.add("bergman_expansion", "K_double from P^{-1} and Q^{-1} expansions, tau = 2i and 0.3 + 2i", 1e-10, [&] {
        double r = 0.0;
        for (cplx tau : {cplx(0, 2), cplx(0.3, 2)}) {
            const auto e = bergman_expansion_check(TorusSpec(tau));
            r = std::max({r, e.p_form, e.q_form});
        }
        return r;
    });
    t.add("torus_reproducing", "K_double reproduces dz over the cell", 1e-8, [&] {
        const auto q = area_quadrature(
            [&](cplx z) { return std::conj(torus_kernels(z, a0, spec).bergman); },
            Region::make_parallelogram(0.0, 1.0, spec.tau()), 16);
        return std::abs(q.value - 1.0);
    });

    t.add("sphere_volume", "integral of the spherical area form is 4 pi", 1e-6, [&] {
        return std::abs(sphere::integrate([](cplx) { return 1.0; }, 64).value - 4.0 * pi);
    });
    t.add("sphere_green_mean", "integral of the sphere Green function is 0", 1e-6, [&] {
        const cplx a(0.2, 0.3);
        return std::abs(sphere::integrate([&](cplx z) { return sphere::green(z, a); }, 64, a).value);
    });
    t.add("sphere_green_isometry", "G(1/conj z, 1/conj a) = G(z,a)", 1e-12, [&] {
        const cplx z(0.3, -0.8);
        const cplx a(-1.2, 0.4);
        return std::abs(sphere::green(1.0 / std::conj(z), 1.0 / std::conj(a)) - sphere::green(z, a));
    });
    t.add("sphere_green_ddbar", "d^2 G / dz dzbar at 0 equals lambda^2/(4V) = 1/(4 pi)", 1e-5, [&] {
        auto g = [](cplx z) { return cplx(sphere::green(z, 1.0)); };
        return std::abs(wirtinger_derivative(g, 0.0, Wirtinger::d2_dz_dzbar, 1e-3).real() - 1.0 / (4.0 * pi));
    });
    t.add("sphere_robin_laplacian", "Laplacian of h0 equals lambda^2 at 10 points", 1e-6, [&] {
        Rng rng(41);
        double r = 0.0;
        for (int k = 0; k < 10; ++k) {
            const cplx a = random_in_disk(rng, 2.0);
            const double lap = laplacian([](cplx p) { return sphere::expansion(p).h0; }, a, 2e-3, true);
            r = std::max(r, std::abs(lap - sphere::metric_density_sq(a)));
        }
        return r;
    });
    t.add("sphere_h11", "8 h11 = lambda^2 and h11 = d^2 H/dz dzbar at the pole", 1e-6, [&] {
        const cplx a(0.4, -0.3);
        const auto e = sphere::expansion(a);
        auto H = [&](cplx z) { return cplx(sphere::regular_part(z, a)); };
        const double fd = wirtinger_derivative(H, a, Wirtinger::d2_dz_dzbar, 1e-3).real();
        return std::max(std::abs(8.0 * e.h11 - e.lambda_sq), std::abs(fd - e.h11));
    });
    t.add("sphere_h1", "h1 = dh0/da on the sphere", 1e-8, [&] {
        const cplx a(1.0, 0.5);
        auto h0 = [](cplx p) { return cplx(sphere::expansion(p).h0); };
        return std::abs(wirtinger_derivative(h0, a, Wirtinger::d_dz, 1e-5) - sphere::expansion(a).h1);
    });
    t.add("sphere_mutual_energy", "Dirichlet pairing of G(.,a) and G(.,b) equals G(a,b)", 1e-3, [&] {
        const cplx a(0.3, 0.1);
        const cplx b(1.5, -2.0);
        return std::abs(sphere::mutual_energy(a, b, 64).value.real() - sphere::green(a, b));
    });
    t.add("sphere_kernels", "Bergman kernel 0, Schiffer kernel -4 d^2 G/dz da", 1e-6, [&] {
        const cplx z(0.3, 0.4);
        const cplx a(-0.5, 0.2);
        auto dz = [&](cplx p) { return sphere::green_dz(z, p); };
        const cplx fd = -4.0 * wirtinger_derivative(dz, a, Wirtinger::d_dz, 1e-5);
        return std::abs(fd - sphere::schiffer(z, a)) + std::abs(sphere::bergman(z, a));
    });
}

// ---------------------------------------------------------------- schottky

double line_flux(const std::function<cplx(cplx)>& grad_z, double x0, double T) {
    // integral over y in [0, T] of dG/dx = 2 Re dG/dz along the vertical line Re z = x0
    const cplx v = segment_integral([&](cplx z) { return cplx(2.0 * std::real(grad_z(z))); }, cplx(x0, 0.0),
                                    cplx(x0, T), 16, 16);
    return v.imag();  // dz = i dy along the line
}

void schottky_suite(Table& t) {
    const StripDouble S(2.0);
    const double T = 2.0;
    const std::array<cplx, 5> pts{cplx(-0.25, 0.5), cplx(-0.1, 0.3), cplx(-0.4, 1.2), cplx(-0.3, 1.7),
                                  cplx(-0.15, 1.0)};
    const cplx a = pts[0];

    t.add("KKH", "K_electro - K_hydro = 2 K_double", 1e-15, [&] {
        double r = 0.0;
        for (cplx z : pts)
            for (cplx b : pts) {
                if (z == b) continue;
                const auto k = S.kernels(z, b);
                r = std::max(r, std::abs(k.electro - k.hydro - 2.0 * k.doubled));
            }
        return r;
    });

    auto periods = [](const StripDouble& D, cplx b) {
        const double Th = D.period();
        const cplx start = cplx(-0.5, 0.5 * Th) - std::conj(b);
        auto el = [&](cplx z) { return D.kernels(z, b).electro; };
        auto hy = [&](cplx z) { return D.kernels(z, b).hydro; };
        const cplx tau(0.0, Th);
        return std::array<cplx, 4>{segment_integral(el, start, start + 1.0, 32, 16),
                                   segment_integral(el, start, start + tau, 32, 16),
                                   segment_integral(hy, start, start + 1.0, 32, 16),
                                   segment_integral(hy, start, start + tau, 32, 16)};
    };
    const std::array<std::string, 4> period_names{"alpha_K_electro", "beta_K_electro", "alpha_K_hydro",
                                                  "beta_K_hydro"};
    for (std::size_t k = 0; k < 4; ++k) {
        t.add("period_" + period_names[k], "strip kernel cycle periods 0, 2i, -2/T, 0 for T in {1.5, 2, 3}", 1e-8,
              [&, k] {
                  double r = 0.0;
                  for (double Th : {1.5, 2.0, 3.0}) {
                      const StripDouble D(Th);
                      const std::array<cplx, 4> expect{0.0, 2.0 * I, -2.0 / Th, 0.0};
                      r = std::max(r, std::abs(periods(D, cplx(-0.25, 0.5))[k] - expect[k]));
                  }
                  return r;
              });
    }

    t.add("KKL", "K_electro = K_double + L(z, J a), K_hydro = -K_double + L(z, J a)", 1e-10, [&] {
        double r = 0.0;
        for (cplx z : pts)
            for (cplx b : pts) {
                if (z == b) continue;
                const auto k = S.kkl(z, b);
                r = std::max({r, k.electro, k.hydro});
            }
        const auto k = S.kernels(cplx(-0.2, 0.3), a);
        const cplx L = torus_kernels(cplx(-0.2, 0.3), StripDouble::involution(a), S.torus()).schiffer;
        return std::max(r, std::abs(L - 0.5 * (k.electro + k.hydro)));
    });

    t.add("kernel_hermitian", "K(a,z) = conj K(z,a) for the three Bergman kernels", 1e-12, [&] {
        double r = 0.0;
        for (cplx z : pts)
            for (cplx b : pts) {
                const auto k1 = S.kernels(z, b);
                const auto k2 = S.kernels(b, z);
                r = std::max({r, std::abs(k1.electro - std::conj(k2.electro)), std::abs(k1.hydro - std::conj(k2.hydro)),
                              std::abs(k1.doubled - std::conj(k2.doubled))});
            }
        return r;
    });

    t.add("g_electro_boundary", "G_electro vanishes on both boundary lines", 1e-10, [&] {
        double r = 0.0;
        for (int k = 0; k < 64; ++k) {
            const double y = T * k / 64.0;
            r = std::max({r, std::abs(S.green_electro(cplx(0.0, y), a)), std::abs(S.green_electro(cplx(-0.5, y), a))});
        }
        return r;
    });
    t.add("g_electro_positive", "G_electro >= 0 on a 64x64 interior grid", 0.0, [&] {
        double worst = 0.0;
        for (int i = 1; i < 64; ++i)
            for (int j = 0; j < 64; ++j) {
                const cplx z(-0.5 * i / 64.0, T * (j + 0.5) / 64.0);
                if (std::abs(z - a) < 1e-9) continue;
                worst = std::max(worst, -S.green_electro(z, a));
            }
        return worst;
    });
    t.add("g_electro_flux", "boundary flux of -dG_electro/dn is 1", 1e-6, [&] {
        auto g = [&](cplx z) { return S.green_electro_dz(z, a); };
        // outward normals: +x on Re z = 0, -x on Re z = -1/2
        return std::abs(-line_flux(g, 0.0, T) + line_flux(g, -0.5, T) - 1.0);
    });

    auto hydro_grad = [&](double p) {
        return [&, p](cplx z) {
            // d/dz of (u1(z) - p)(u1(a) - p)/(2T) with u1 = -(z + conj z)
            return S.green_electro_dz(z, a) - (StripDouble::boundary_measure(a) - p) / (2.0 * T);
        };
    };
    t.add("g_hydro_period", "flux of G_hydro through the line Re z = -1/2 equals p, p in {0, 0.7}", 1e-8, [&] {
        double r = 0.0;
        for (double p : {0.0, 0.7}) r = std::max(r, std::abs(line_flux(hydro_grad(p), -0.5, T) - p));
        return r;
    });
    t.add("g_hydro_locally_constant", "tangential derivative of G_hydro vanishes on the boundary", 1e-8, [&] {
        double r = 0.0;
        for (double p : {0.0, 0.7}) {
            const auto g = hydro_grad(p);
            for (int k = 0; k < 32; ++k) {
                const double y = T * k / 32.0;
                // dG/dy = -2 Im dG/dz
                r = std::max({r, std::abs(std::imag(g(cplx(0.0, y)))), std::abs(std::imag(g(cplx(-0.5, y))))});
            }
        }
        return r;
    });
    t.add("hydro_hydro", "boundary integral of G_hydro(.,a) *dG_hydro(.,b) vanishes", 1e-8, [&] {
        const cplx b = pts[2];
        double r = 0.0;
        for (double p : {0.0, 0.7}) {
            auto gb = [&](cplx z) {
                return S.green_electro_dz(z, b) - (StripDouble::boundary_measure(b) - p) / (2.0 * T);
            };
            const double right = -line_flux(gb, 0.0, T);  // outward derivative on Re z = 0
            const double left = line_flux(gb, -0.5, T);
            const double v = S.green_hydro(cplx(0.0, 0.3), a, p) * right + S.green_hydro(cplx(-0.5, 0.3), a, p) * left;
            r = std::max(r, std::abs(v));
        }
        return r;
    });

    t.add("neumann_normal", "normal derivative of the Neumann function vanishes on both boundary lines", 1e-6, [&] {
        double r = 0.0;
        const double h = 1e-5;
        for (int k = 0; k < 16; ++k) {
            for (double x : {0.0, -0.5}) {
                const cplx z(x, T * (k + 0.3) / 16.0);
                r = std::max(r, std::abs((S.neumann(z + h, a) - S.neumann(z - h, a)) / (2.0 * h)));
            }
        }
        return r;
    });
    t.add("neumann_ddbar", "d^2 N / dz dzbar = 1/(2T) off the pole", 1e-5, [&] {
        auto n = [&](cplx z) { return cplx(S.neumann(z, a)); };
        return std::abs(wirtinger_derivative(n, cplx(-0.1, 1.3), Wirtinger::d2_dz_dzbar, 1e-3).real() - 0.25);
    });
    t.add("NG", "d^2 N/dz dabar = -d^2 G_hydro/dz dabar at 10 pairs and p in {0, 0.7}", 1e-6, [&] {
        Rng rng(43);
        double r = 0.0;
        for (int k = 0; k < 10; ++k) {
            const cplx z(uniform(rng, -0.45, -0.05), uniform(rng, 0.0, T));
            const cplx b(uniform(rng, -0.45, -0.05), uniform(rng, 0.0, T));
            if (std::abs(z - b) < 0.1) continue;
            const cplx n = mixed_derivative_z_abar([&](cplx zz, cplx bb) { return cplx(S.neumann(zz, bb)); }, z, b);
            for (double p : {0.0, 0.7}) {
                const cplx g = mixed_derivative_z_abar(
                    [&](cplx zz, cplx bb) { return cplx(S.green_hydro(zz, bb, p)); }, z, b);
                r = std::max(r, std::abs(n + g));
            }
        }
        return r;
    });

    t.add("reproducing_hydro", "K_hydro reproduces the exact differential pi exp(pi z) at 3 points", 1e-8, [&] {
        auto g = [T](cplx z) { return (2.0 * pi / T) * std::exp(2.0 * pi * z / T); };
        double r = 0.0;
        for (int k = 0; k < 3; ++k) {
            const cplx b = pts[static_cast<std::size_t>(k)];
            r = std::max(r, std::abs(S.reproducing_check(ReproducingKernel::hydro, g, b, 160) - g(b)));
        }
        return r;
    });
    t.add("reproducing_electro", "K_electro reproduces the constant 1", 1e-6, [&] {
        return std::abs(S.reproducing_check(ReproducingKernel::electro, [](cplx) { return cplx(1.0); }, a) - 1.0);
    });
    t.add("orthogonality", "K_double is orthogonal to K_hydro(., b)", 1e-8, [&] {
        const auto q = area_quadrature(
            [&](cplx z) { return S.kernels(z, z).doubled * std::conj(S.kernels(z, pts[1]).hydro); },
            Region::make_rectangle(-0.5, 0.0, 0.5, T), 160);
        return std::abs(q.value);
    });

    t.add("upsilon_residues", "third-kind differential has residues +1 at a and -1 at b", 1e-10, [&] {
        const cplx b = pts[2];
        auto u = [&](cplx z) { return S.upsilon(z, a, b); };
        const cplx ra = contour_integral(u, Curve::circle(a, 0.05), 64) / (2.0 * pi * I);
        const cplx rb = contour_integral(u, Curve::circle(b, 0.05), 64) / (2.0 * pi * I);
        return std::max(std::abs(ra - 1.0), std::abs(rb + 1.0));
    });
    t.add("upsilon_periods", "real parts of both cycle periods vanish", 1e-8, [&] {
        const cplx b = pts[2];
        auto u = [&](cplx z) { return S.upsilon(z, a, b); };
        const cplx pa = segment_integral(u, cplx(-0.5, 1.9), cplx(0.5, 1.9), 32, 16);
        const cplx pb = segment_integral(u, cplx(-0.35, 0.0), cplx(-0.35, T), 32, 16);
        return std::max(std::abs(pa.real()), std::abs(pb.real()));
    });
    t.add("upsilon_green", "upsilon with b = J(a) equals -4 pi dG_electro/dz", 1e-8, [&] {
        double r = 0.0;
        for (cplx z : {cplx(-0.1, 0.2), cplx(-0.4, 1.5), cplx(0.2, -0.7)}) {
            r = std::max(r, std::abs(S.upsilon(z, a, StripDouble::involution(a)) + 4.0 * pi * S.green_electro_dz(z, a)));
        }
        return r;
    });

    t.add("szego_head", "(z-a) L_Szego -> 1/2pi", 1e-6, [&] {
        const cplx w = std::polar(1e-6, 1.1);
        return std::abs(w * S.szego_l(a + w, a) - 1.0 / (2.0 * pi));
    });
    t.add("szego_branch", "theta-quotient branch agrees with square-root continuation", 1e-10, [&] {
        double r = 0.0;
        for (cplx z : {cplx(-0.1, 1.7), cplx(0.35, -0.6), cplx(-0.45, 0.05), cplx(0.1, 0.9)}) {
            r = std::max(r, std::abs(S.szego_l(z, a) - S.szego_l_tracked(z, a)));
        }
        return r;
    });
    t.add("szego_boundary_modulus", "|L_Szego| = |K_Szego| along Re z = 0", 1e-8, [&] {
        double r = 0.0;
        for (int k = 0; k < 32; ++k) {
            const cplx z(0.0, T * (k + 0.5) / 32.0);
            r = std::max(r, std::abs(std::abs(S.szego_l(z, a)) - std::abs(S.szego_k(z, a))));
        }
        return r;
    });
    t.add("szego_hermitian", "K_Szego(a,z) = conj K_Szego(z,a)", 1e-12, [&] {
        double r = 0.0;
        for (cplx z : pts)
            for (cplx b : pts) r = std::max(r, std::abs(S.szego_k(b, z) - std::conj(S.szego_k(z, b))));
        return r;
    });
    t.add("szego_sandwich", "pi K_hydro < 4 pi^2 K_Szego^2 < pi K_electro at a (negated margin)", 0.0, [&] {
        const auto k = S.kernels(a, a);
        const double ks = S.szego_diagonal(a);
        const double mid = 4.0 * pi * pi * ks * ks;
        return -std::min(mid - pi * k.hydro.real(), pi * k.electro.real() - mid);
    }, true);

    t.add("capacity_chain", "c1 < cD < cB < c_beta < sqrt M at 5 points (negated smallest margin)", 0.0, [&] {
        double m = std::numeric_limits<double>::infinity();
        for (cplx z : pts)
            for (double v : S.capacity_functions(z).margins()) m = std::min(m, v);
        return -m;
    }, true);
    t.add("capacity_disk_control", "all five capacity functions coincide on the disk", 1e-8, [&] {
        const auto c = disk_capacity_functions(0.3);
        const std::array<double, 5> v{c.c1, c.cD, c.cB, c.c_beta, c.M_sqrt};
        return *std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end());
    });
    t.add("capacity_curvature", "curvature of the c_beta metric is at most -4 at 5 points", 0.0, [&] {
        double worst = -std::numeric_limits<double>::infinity();
        for (cplx z : pts) {
            worst = std::max(worst, curvature_of_metric([&](cplx p) { return S.robin_electro(p); }, z, 1e-3) + 4.0);
        }
        return worst;
    });
    t.add("strip_period_matrix", "P = T and Q = 1/T on the strip double", 1e-10, [&] {
        const auto pm = S.period_matrices_numeric();
        return std::max(std::abs(pm.P(0, 0) - T), std::abs(pm.Q(0, 0) - 1.0 / T));
    });

    t.add("schwarz_circle", "S(z) = conj z on the circle, S(conj S(z)) = conj z, S' T^2 = 1", 1e-14, [&] {
        double r = 0.0;
        for (int k = 0; k < 16; ++k) {
            const cplx z = std::polar(2.0, 0.4 * k);
            const cplx tangent = I * z / 2.0;
            r = std::max({r, std::abs(schwarz_circle(z, 2.0) - std::conj(z)),
                          std::abs(-4.0 / (z * z) * tangent * tangent - 1.0)});
        }
        const cplx z(0.3, 0.4);
        return std::max(r, std::abs(std::conj(schwarz_circle(std::conj(schwarz_circle(z, 2.0)), 2.0)) - z));
    });
    t.add("ahlfors_disk", "Ahlfors map: unimodular on the circle, f'(a) = 2 pi K_Szego(a,a)", 1e-8, [&] {
        const cplx b(0.5, 0.0);
        double r = 0.0;
        for (int k = 0; k < 32; ++k) r = std::max(r, std::abs(std::abs(ahlfors_map_disk(std::polar(1.0, 0.2 * k), b)) - 1.0));
        const double h = 1e-5;
        const cplx d = (ahlfors_map_disk(b + h, b) - ahlfors_map_disk(b - h, b)) / (2.0 * h);
        return std::max(r, std::abs(d - 4.0 / 3.0));
    });
    t.add("circular_slit_disk", "slit map: |f| = exp(h0(a)) on the circle, f'(a) = 1, f(z) = z for a = 0", 1e-8, [&] {
        const cplx b(0.3, 0.2);
        const double radius = std::exp(robin_data(DomainDescriptor::disk(1.0), b).h0);
        double r = 0.0;
        for (int k = 0; k < 64; ++k) {
            r = std::max(r, std::abs(std::abs(circular_slit_map(std::polar(1.0, 2.0 * pi * k / 64.0), b)) - radius));
        }
        const double h = 1e-5;
        const cplx d = (circular_slit_map(b + h, b) - circular_slit_map(b - h, b)) / (2.0 * h);
        const cplx z(0.4, -0.3);
        return std::max({r, std::abs(d - 1.0), std::abs(circular_slit_map(z, 0.0) - z)});
    });
}

}  // namespace

bool is_known_suite(std::string_view suite) {
    return suite == "planar" || suite == "surface" || suite == "schottky" || suite == "all";
}

std::vector<IdentityRow> run_suite(std::string_view suite, bool corrupt_tolerance) {
    if (!is_known_suite(suite)) fail(ErrorKind::parameter, "unknown verification suite '" + std::string(suite) + "'");
    Table t(corrupt_tolerance);
    if (suite == "planar" || suite == "all") planar_suite(t);
    if (suite == "surface" || suite == "all") surface_suite(t);
    if (suite == "schottky" || suite == "all") schottky_suite(t);
    return std::move(t.rows);
}

}  // namespace potkit
