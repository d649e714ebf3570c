#include "potkit/schottky.hpp"

#include <cmath>

#include "potkit/planar_green.hpp"

namespace potkit {

StripDouble::StripDouble(double period, double circulation)
    : period_(period), circulation_(circulation), torus_([&] {
          if (!(period > 0.0) || !std::isfinite(period)) fail(ErrorKind::parameter, "strip period must be positive");
          return TorusSpec(cplx(0.0, period));
      }()) {}

bool StripDouble::contains(cplx z) const noexcept { return is_finite(z) && z.real() > -0.5 && z.real() < 0.0; }

void StripDouble::require_front(cplx a, const char* name) const {
    require_finite(a, name);
    if (!contains(a)) fail(ErrorKind::domain, std::string(name) + " is not inside the strip -1/2 < Re z < 0");
}

double StripDouble::green_double(cplx z, cplx a) const { return torus_green(z, a, torus_); }

double StripDouble::green_electro(cplx z, cplx a) const {
    require_front(a, "a");
    return torus_green(z, a, torus_) - torus_green(z, involution(a), torus_);
}

cplx StripDouble::green_electro_dz(cplx z, cplx a) const {
    require_front(a, "a");
    return torus_green_dz(z, a, torus_) - torus_green_dz(z, involution(a), torus_);
}

double StripDouble::green_hydro(cplx z, cplx a, double p) const {
    return green_electro(z, a) + (boundary_measure(z) - p) * (boundary_measure(a) - p) / (2.0 * period_);
}

double StripDouble::neumann(cplx z, cplx a) const {
    require_front(a, "a");
    return torus_green(z, a, torus_) + torus_green(z, involution(a), torus_);
}

double StripDouble::robin_electro(cplx a) const {
    require_front(a, "a");
    const TorusLattice& L = lattice();
    return log_abs_theta1(2.0 * a.real(), L) - std::log(std::abs(L.theta1_prime0()));
}

cplx StripDouble::robin_electro_2dz(cplx a) const {
    require_front(a, "a");
    return theta1_log_derivative(2.0 * a.real(), lattice());
}

double StripDouble::robin_hydro(cplx a, double p) const {
    const double u = boundary_measure(a) - p;
    return robin_electro(a) + pi * u * u / period_;
}

StripKernels StripDouble::kernels(cplx z, cplx a) const {
    const TorusLattice& L = lattice();
    const cplx electro = (wp(z + std::conj(a), L) + L.eta1()) / pi;
    return {electro, electro - 2.0 / period_, cplx(1.0 / period_, 0.0)};
}

KklResidual StripDouble::kkl(cplx z, cplx a) const {
    const StripKernels k = kernels(z, a);
    // dJ(a) = -d(conj a), so the Schiffer term enters with a plus sign.
    const cplx schiffer = torus_kernels(z, involution(a), torus_).schiffer;
    return {std::abs(k.electro - (k.doubled + schiffer)), std::abs(k.hydro - (-k.doubled + schiffer))};
}

cplx StripDouble::upsilon(cplx z, cplx a, cplx b) const {
    const TorusLattice& L = lattice();
    return zeta_w(z - a, L) - zeta_w(z - b, L) + L.eta1() * (a - b) + 2.0 * pi / L.tau() * (a - b).imag();
}

cplx StripDouble::szego_l(cplx z, cplx a) const {
    const TorusLattice& L = lattice();
    const auto r = L.reduce(z - a);
    if (std::abs(r.w) < 1e-12) fail(ErrorKind::pole, "Szego kernel at its pole");
    const double sign = ((r.m + r.n) % 2 == 0) ? 1.0 : -1.0;
    return sign * L.theta1_prime0() * theta3(r.w, L) / (theta3(0.0, L) * theta1(r.w, L)) / (2.0 * pi);
}

cplx StripDouble::szego_l_tracked(cplx z, cplx a, std::size_t steps) const {
    const TorusLattice& L = lattice();
    const cplx w = z - a;
    const double len = std::abs(w);
    if (len < 1e-12) fail(ErrorKind::pole, "Szego kernel at its pole");
    if (steps < 8) fail(ErrorKind::parameter, "branch tracking needs at least 8 steps");
    const cplx dir = w / len;
    const double start = std::min(1e-3, 0.5 * len);
    auto root = [&](double s) {
        const cplx v = wp(s * dir, L) - L.e2();
        if (std::abs(v) < 1e-10 * (1.0 + std::abs(L.e2()))) {
            fail(ErrorKind::branch, "continuation path passes through a zero of the Szego kernel");
        }
        return std::sqrt(v) / (2.0 * pi);
    };
    cplx value = root(start);
    if (std::abs(value - 1.0 / (2.0 * pi * start * dir)) > std::abs(value + 1.0 / (2.0 * pi * start * dir))) {
        value = -value;
    }
    for (std::size_t k = 1; k <= steps; ++k) {
        // geometric spacing: the kernel varies like 1/s near the pole
        const double s = start * std::pow(len / start, static_cast<double>(k) / static_cast<double>(steps));
        cplx next = root(s);
        const double keep = std::abs(next - value);
        const double flip = std::abs(next + value);
        if (std::min(keep, flip) > 0.5 * std::max(keep, flip)) {
            fail(ErrorKind::branch, "square-root continuation is ambiguous; refine the path");
        }
        if (flip < keep) next = -next;
        value = next;
    }
    return value;
}

cplx StripDouble::szego_k(cplx z, cplx a) const { return std::conj(szego_l(involution(z), a)); }

double StripDouble::szego_diagonal(cplx a) const {
    require_front(a, "a");
    return szego_k(a, a).real();
}

CapacityFunctions StripDouble::capacity_functions(cplx a) const {
    require_front(a, "a");
    if (std::min(-a.real(), a.real() + 0.5) < 1e-9) fail(ErrorKind::conditioning, "point too close to the boundary");
    const StripKernels k = kernels(a, a);
    CapacityFunctions c;
    c.c1 = std::exp(-robin_hydro(a, circulation_));
    c.cD = std::sqrt(pi * k.hydro.real());
    c.cB = 2.0 * pi * szego_diagonal(a);
    c.c_beta = std::exp(-robin_electro(a));
    c.M_sqrt = std::sqrt(pi * k.electro.real());
    return c;
}

cplx StripDouble::reproducing_check(ReproducingKernel kernel, const ComplexFn& f, cplx a,
                                    std::size_t resolution) const {
    require_front(a, "a");
    if (kernel == ReproducingKernel::hydro) {
        const cplx period = segment_integral(f, cplx(-0.25, 0.0), cplx(-0.25, period_), 16, 16);
        if (std::abs(period) > 1e-8) {
            fail(ErrorKind::admissibility, "the hydrodynamic kernel only reproduces differentials with zero period");
        }
    }
    const Region front = Region::make_rectangle(-0.5, 0.0, 0.5, period_);
    auto integrand = [&](cplx z) {
        const StripKernels k = kernels(z, a);
        const cplx K = kernel == ReproducingKernel::electro ? k.electro : k.hydro;
        return f(z) * std::conj(K);
    };
    return area_quadrature(integrand, front, resolution).value;
}

PeriodMatrices StripDouble::period_matrices_numeric(std::size_t n) const {
    return torus_period_matrices_numeric(torus_, n);
}

// ---------------------------------------------------------------- disk extremal maps

cplx schwarz_circle(cplx z, double R) {
    if (z == 0.0) fail(ErrorKind::pole, "Schwarz function of the circle at the origin");
    return R * R / z;
}

cplx ahlfors_map_disk(cplx z, cplx a) {
    if (std::abs(a) >= 1.0) fail(ErrorKind::domain, "Ahlfors base point outside the unit disk");
    if (z == a) return 0.0;
    const cplx szego = 1.0 / (2.0 * pi * (1.0 - z * std::conj(a)));
    const cplx garabedian = 1.0 / (2.0 * pi * (z - a));
    return szego / garabedian;
}

cplx circular_slit_map(cplx z, cplx a) {
    const DomainDescriptor disk = DomainDescriptor::disk(1.0);
    if (!disk.contains(a)) fail(ErrorKind::domain, "slit-map base point outside the unit disk");
    if (std::abs(z) > 1.0) fail(ErrorKind::domain, "slit map evaluated outside the unit disk");
    if (z == a) return 0.0;
    const cplx integral = segment_integral([&](cplx s) { return regular_part_2dz(disk, s, a); }, a, z, 8, 16);
    const double expected = regular_part(disk, z, a) - robin_data(disk, a).h0;
    if (std::abs(integral.real() - expected) > 1e-8) {
        fail(ErrorKind::normalization, "harmonic conjugate inconsistent with the regular part");
    }
    return (z - a) * std::exp(-integral);
}

CapacityFunctions disk_capacity_functions(cplx a) {
    const DomainDescriptor disk = DomainDescriptor::disk(1.0);
    const double h0 = robin_data(disk, a).h0;
    const double bergman = bergman_disk(a, a).real();
    const double szego = 1.0 / (2.0 * pi * (1.0 - std::norm(a)));
    CapacityFunctions c;
    c.c1 = std::exp(-h0);
    c.cD = std::sqrt(pi * bergman);
    c.cB = 2.0 * pi * szego;
    c.c_beta = std::exp(-h0);
    c.M_sqrt = std::sqrt(pi * bergman);
    return c;
}

}  // namespace potkit
