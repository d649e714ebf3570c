#pragma once

#include <vector>

#include "potkit/numkit.hpp"

namespace potkit {

struct VortexDomain {
    enum class Kind { plane, disk };
    Kind kind = Kind::plane;
    double radius = 1.0;

    static VortexDomain plane() { return {}; }
    static VortexDomain disk(double R = 1.0) { return {Kind::disk, R}; }
};

struct VortexSystem {
    std::vector<cplx> positions;
    std::vector<double> strengths;
    VortexDomain domain;

    [[nodiscard]] std::size_t size() const noexcept { return positions.size(); }
    void validate() const;
};

// Force on the vortex at a exerted by the vortex at b.
cplx pair_force(cplx a, cplx b, double gamma_a, double gamma_b);

// Force needed to hold a vortex of strength gamma in place, given h1 at its position.
cplx bound_vortex_force(cplx h1, double gamma);

// Velocity of vortex k under the Kirchhoff-Routh field of the whole system.
cplx free_vortex_velocity(const VortexSystem& system, std::size_t k);

// Velocity of a single vortex subject to an external force.
cplx forced_vortex_velocity(cplx h1, double gamma, cplx external_force);

double stream_function(const VortexSystem& system, cplx z);

// Renormalized interaction energy; includes the Robin terms in the disk.
double vortex_energy(const VortexSystem& system);

// Velocities of all vortices for the given positions.
State vortex_field(const VortexSystem& system, const State& positions, Exec exec = Exec::parallel);

// Monitors: energy, moment_re, moment_im, angular_moment, displacement (of the
// first vortex from its start), radius (of the first vortex).
Trajectory simulate(const VortexSystem& system, double t_end, double tol);

}  // namespace potkit
