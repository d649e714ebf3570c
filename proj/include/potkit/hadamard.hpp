#pragma once

#include <functional>

#include "potkit/numkit.hpp"

namespace potkit {

// Normal displacement epsilon * speed(theta) of the circle |z| = radius.
// Dilation and translation are the exact families (speed 1 and cos theta); any
// other speed goes through a harmonic-polynomial collocation solve.
struct BoundaryVariation {
    enum class Mode { dilation, translation, general };

    Mode mode = Mode::dilation;
    double radius = 1.0;
    double epsilon = 1e-4;
    std::function<double(double)> normal_speed;  // used by Mode::general

    static BoundaryVariation dilation(double epsilon, double radius = 1.0);
    static BoundaryVariation translation(double epsilon, double radius = 1.0);
    static BoundaryVariation general(std::function<double(double)> speed, double epsilon, double radius = 1.0);

    [[nodiscard]] double speed(double theta) const;
    void validate() const;
};

enum class Difference { central, forward };

struct VariationPair {
    double lhs;  // finite difference across the perturbation
    double rhs;  // boundary quadrature
};

VariationPair hadamard_delta_green(const BoundaryVariation& var, cplx a, cplx b, std::size_t n,
                                   Difference scheme = Difference::central);

VariationPair hadamard_delta_h0(const BoundaryVariation& var, cplx a, std::size_t n,
                                Difference scheme = Difference::central);

double triple_green(cplx a, cplx b, cplx c, std::size_t n);

// Outward normal derivative of the Green function of the disk |z| < R on its boundary.
double disk_normal_derivative(cplx z, cplx a, double R);

// Green function of the star-shaped domain r < radius + epsilon * speed(theta),
// from a least-squares harmonic-polynomial fit of the regular part.
double perturbed_disk_green(const BoundaryVariation& var, double epsilon, cplx z, cplx a,
                            std::size_t degree = 64);
double perturbed_disk_h0(const BoundaryVariation& var, double epsilon, cplx a, std::size_t degree = 64);

}  // namespace potkit
