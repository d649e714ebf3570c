#pragma once

#include <array>
#include <functional>

#include "potkit/elliptic.hpp"
#include "potkit/numkit.hpp"
#include "potkit/surface.hpp"

namespace potkit {

struct StripKernels {
    cplx electro;
    cplx hydro;
    cplx doubled;
};

struct KklResidual {
    double electro;  // K_electro against K_double and the Schiffer kernel at J(a)
    double hydro;    // same for K_hydro
};

struct CapacityFunctions {
    double c1 = 0.0;
    double cD = 0.0;
    double cB = 0.0;
    double c_beta = 0.0;
    double M_sqrt = 0.0;
    // cD - c1, cB - cD, c_beta - cB, M_sqrt - c_beta
    [[nodiscard]] std::array<double, 4> margins() const {
        return {cD - c1, cB - cD, c_beta - cB, M_sqrt - c_beta};
    }
};

enum class ReproducingKernel { electro, hydro };

// The strip -1/2 < Re z < 0 with Im z taken modulo T, glued to its mirror
// image across both boundary lines. The double is the rectangular torus with
// periods 1 and iT; the involution is z -> -conj(z).
class StripDouble {
public:
    explicit StripDouble(double period, double circulation = 0.0);

    [[nodiscard]] double period() const noexcept { return period_; }
    [[nodiscard]] double circulation() const noexcept { return circulation_; }
    [[nodiscard]] const TorusSpec& torus() const noexcept { return torus_; }
    [[nodiscard]] const TorusLattice& lattice() const noexcept { return torus_.lattice(); }

    [[nodiscard]] static cplx involution(cplx z) noexcept { return -std::conj(z); }
    // Harmonic measure of the line Re z = -1/2.
    [[nodiscard]] static double boundary_measure(cplx z) noexcept { return -2.0 * z.real(); }
    [[nodiscard]] bool contains(cplx z) const noexcept;

    [[nodiscard]] double green_double(cplx z, cplx a) const;
    [[nodiscard]] double green_electro(cplx z, cplx a) const;
    [[nodiscard]] cplx green_electro_dz(cplx z, cplx a) const;
    [[nodiscard]] double green_hydro(cplx z, cplx a) const { return green_hydro(z, a, circulation_); }
    [[nodiscard]] double green_hydro(cplx z, cplx a, double p) const;
    [[nodiscard]] double neumann(cplx z, cplx a) const;

    [[nodiscard]] double robin_electro(cplx a) const;
    [[nodiscard]] cplx robin_electro_2dz(cplx a) const;
    [[nodiscard]] double robin_hydro(cplx a, double p) const;

    [[nodiscard]] StripKernels kernels(cplx z, cplx a) const;
    [[nodiscard]] KklResidual kkl(cplx z, cplx a) const;

    // Coefficient of the third-kind differential with poles at a (+1) and b (-1).
    [[nodiscard]] cplx upsilon(cplx z, cplx a, cplx b) const;

    // Square-root kernel (1/2pi) sqrt(wp(z-a) - e2) from the theta quotient.
    [[nodiscard]] cplx szego_l(cplx z, cplx a) const;
    // The same branch obtained by continuing the square root along the
    // segment from a to z; raises a branch error if the path meets a zero.
    [[nodiscard]] cplx szego_l_tracked(cplx z, cplx a, std::size_t steps = 512) const;
    [[nodiscard]] cplx szego_k(cplx z, cplx a) const;
    [[nodiscard]] double szego_diagonal(cplx a) const;

    [[nodiscard]] CapacityFunctions capacity_functions(cplx a) const;

    // (i/2) * integral over the front side of f dz ^ conj(K(., a) dz).
    [[nodiscard]] cplx reproducing_check(ReproducingKernel kernel, const ComplexFn& f, cplx a,
                                         std::size_t resolution = 48) const;

    [[nodiscard]] PeriodMatrices period_matrices_numeric(std::size_t n = 64) const;

private:
    void require_front(cplx a, const char* name) const;

    double period_;
    double circulation_;
    TorusSpec torus_;
};

// Schwarz function of the circle |z| = R.
cplx schwarz_circle(cplx z, double R);

// Ahlfors map of the unit disk built from the disk Szego and Garabedian kernels.
cplx ahlfors_map_disk(cplx z, cplx a);

// Circular-slit map of the unit disk normalized by f(a) = 0, f'(a) = 1; the
// image boundary is the circle of radius exp(h0(a)).
cplx circular_slit_map(cplx z, cplx a);

// Capacity functions of the unit disk; all five coincide there.
CapacityFunctions disk_capacity_functions(cplx a);

}  // namespace potkit
