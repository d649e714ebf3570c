#include "potkit/vortex.hpp"

#include <cmath>
#include <limits>

namespace potkit {

namespace {

// 2 dG/dz (z, a) for the domain Green function.
cplx green_2dz(const VortexDomain& d, cplx z, cplx a) {
    cplx v = 1.0 / (z - a);
    if (d.kind == VortexDomain::Kind::disk) v += std::conj(a) / (d.radius * d.radius - z * std::conj(a));
    return -v / (2.0 * pi);
}

double green(const VortexDomain& d, cplx z, cplx a) {
    if (d.kind == VortexDomain::Kind::disk) {
        const double R = d.radius;
        return -std::log(std::abs(R * (z - a) / (R * R - z * std::conj(a)))) / (2.0 * pi);
    }
    return -std::log(std::abs(z - a)) / (2.0 * pi);
}

cplx domain_h1(const VortexDomain& d, cplx a) {
    if (d.kind == VortexDomain::Kind::plane) return 0.0;
    return -std::conj(a) / (d.radius * d.radius - std::norm(a));
}

double domain_h0(const VortexDomain& d, cplx a) {
    if (d.kind == VortexDomain::Kind::plane) return 0.0;
    const double R = d.radius;
    return std::log((R * R - std::norm(a)) / R);
}

double min_separation(const VortexDomain& d, const State& z) {
    double s = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (d.kind == VortexDomain::Kind::disk) s = std::min(s, d.radius - std::abs(z[j]));
        for (std::size_t k = j + 1; k < z.size(); ++k) s = std::min(s, std::abs(z[j] - z[k]));
    }
    return s;
}

VortexSystem with_positions(const VortexSystem& sys, const State& z) {
    VortexSystem out = sys;
    out.positions = z;
    return out;
}

}  // namespace

void VortexSystem::validate() const {
    if (positions.size() != strengths.size()) fail(ErrorKind::parameter, "positions and strengths differ in length");
    if (domain.kind == VortexDomain::Kind::disk && !(domain.radius > 0.0)) {
        fail(ErrorKind::parameter, "disk radius must be positive");
    }
    for (std::size_t j = 0; j < positions.size(); ++j) {
        require_finite(positions[j], "vortex position");
        if (!std::isfinite(strengths[j])) fail(ErrorKind::parameter, "non-finite vortex strength");
        if (domain.kind == VortexDomain::Kind::disk && std::abs(positions[j]) >= domain.radius) {
            fail(ErrorKind::domain, "vortex outside the disk");
        }
        for (std::size_t k = j + 1; k < positions.size(); ++k) {
            if (std::abs(positions[j] - positions[k]) < 1e-10) fail(ErrorKind::collision, "coincident vortices");
        }
    }
}

cplx pair_force(cplx a, cplx b, double gamma_a, double gamma_b) {
    if (std::abs(a - b) == 0.0) fail(ErrorKind::collision, "pair force between coincident vortices");
    return gamma_a * gamma_b / (2.0 * pi) * (a - b) / std::norm(a - b);
}

cplx bound_vortex_force(cplx h1, double gamma) { return -gamma * gamma / (2.0 * pi) * std::conj(h1); }

cplx free_vortex_velocity(const VortexSystem& sys, std::size_t k) {
    if (k >= sys.size()) fail(ErrorKind::parameter, "vortex index out of range");
    const cplx a = sys.positions[k];
    // Gamma_k * h1^{(k)}, assembled without dividing by Gamma_k
    cplx weighted = sys.strengths[k] * domain_h1(sys.domain, a);
    for (std::size_t j = 0; j < sys.size(); ++j) {
        if (j == k) continue;
        const cplx d = a - sys.positions[j];
        if (std::abs(d) < 1e-10) throw CollisionError(0.0, "vortices closer than 1e-10");
        weighted += sys.strengths[j] * 2.0 * pi * green_2dz(sys.domain, a, sys.positions[j]);
    }
    return std::conj(weighted) / (2.0 * pi * I);
}

cplx forced_vortex_velocity(cplx h1, double gamma, cplx external_force) {
    if (gamma == 0.0) fail(ErrorKind::parameter, "forced motion needs a nonzero strength");
    return gamma / (2.0 * pi * I) * std::conj(h1) - I * external_force / gamma;
}

double stream_function(const VortexSystem& sys, cplx z) {
    double psi = 0.0;
    for (std::size_t k = 0; k < sys.size(); ++k) {
        if (z == sys.positions[k]) fail(ErrorKind::pole, "stream function evaluated at a vortex");
        psi += sys.strengths[k] * green(sys.domain, z, sys.positions[k]);
    }
    return psi;
}

double vortex_energy(const VortexSystem& sys) {
    std::vector<double> terms;
    for (std::size_t j = 0; j < sys.size(); ++j) {
        const double g = sys.strengths[j];
        terms.push_back(g * g * domain_h0(sys.domain, sys.positions[j]) / (4.0 * pi));
        for (std::size_t k = j + 1; k < sys.size(); ++k) {
            terms.push_back(g * sys.strengths[k] * green(sys.domain, sys.positions[j], sys.positions[k]));
        }
    }
    return ordered_sum<double>(terms);
}

State vortex_field(const VortexSystem& sys, const State& z, Exec exec) {
    const VortexSystem cur = with_positions(sys, z);
    return parallel_map(z.size(), [&](std::size_t k) { return free_vortex_velocity(cur, k); }, exec);
}

Trajectory simulate(const VortexSystem& sys, double t_end, double tol) {
    sys.validate();
    if (sys.size() == 0) fail(ErrorKind::parameter, "empty vortex system");
    const cplx start = sys.positions.front();
    RkOptions opt;
    opt.separation = [&](const State& z) { return min_separation(sys.domain, z); };
    opt.monitors["energy"] = [&](const State& z) { return vortex_energy(with_positions(sys, z)); };
    opt.monitors["moment_re"] = [&](const State& z) {
        cplx m{};
        for (std::size_t k = 0; k < z.size(); ++k) m += sys.strengths[k] * z[k];
        return m.real();
    };
    opt.monitors["moment_im"] = [&](const State& z) {
        cplx m{};
        for (std::size_t k = 0; k < z.size(); ++k) m += sys.strengths[k] * z[k];
        return m.imag();
    };
    opt.monitors["angular_moment"] = [&](const State& z) {
        double m = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) m += sys.strengths[k] * std::norm(z[k]);
        return m;
    };
    opt.monitors["displacement"] = [start](const State& z) { return std::abs(z.front() - start); };
    opt.monitors["radius"] = [](const State& z) { return std::abs(z.front()); };
    const Field field = [&](double, const State& z) { return vortex_field(sys, z, Exec::serial); };
    return rk_integrate(field, sys.positions, t_end, tol, opt);
}

}  // namespace potkit
