#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "potkit/numkit.hpp"
#include "potkit/planar_green.hpp"

namespace potkit {

// Compact carrier sets. Every kind is described through its outer boundary,
// parametrized by t in [0, 1]; the segment parametrization is x = -(l/2) cos(pi t)
// so that its endpoints are critical points of the parametrization.
struct CompactSet {
    enum class Kind { circle, disk, segment, rectangle_boundary, disk_complement };

    Kind kind = Kind::circle;
    double radius = 1.0;
    double length = 2.0;
    double width = 1.0;
    double height = 1.0;

    static CompactSet circle(double R = 1.0);
    static CompactSet disk(double R = 1.0);
    static CompactSet segment(double length = 2.0);
    static CompactSet rectangle_boundary(double w, double h);
    // {|z| >= R}; meaningful only together with a finite pole inside the disk.
    static CompactSet disk_complement(double R = 1.0);

    [[nodiscard]] bool periodic() const noexcept { return kind != Kind::segment; }
    [[nodiscard]] cplx point(double t) const;
    [[nodiscard]] cplx tangent(double t) const;
    [[nodiscard]] cplx second_derivative(double t) const;
    [[nodiscard]] bool contains(cplx z, double tol = 1e-12) const;
    void validate() const;
};

std::string kind_name(CompactSet::Kind kind);

struct WeightedMeasure {
    std::vector<cplx> points;
    std::vector<double> weights;

    [[nodiscard]] double total() const;
    [[nodiscard]] double integrate(const RealFn& f) const;
    // Logarithmic potential (1/2pi) * sum w log(1/|z - point|).
    [[nodiscard]] double potential(cplx z) const;
};

// (1/4pi) sum_{j != k} G_j G_k log(1/|z_j - z_k|)
double discrete_energy(std::span<const cplx> points, std::span<const double> strengths);

struct FeketeResult {
    std::vector<double> parameters;
    std::vector<cplx> points;
    double delta_n = 0.0;  // normalized with the exponent 2/(n(n-1))
    bool converged = false;
};

struct FeketeOptions {
    std::size_t max_sweeps = 40;
    double sweep_gain = 1e-10;
    std::size_t newton_steps = 60;
    Exec exec = Exec::parallel;
};

FeketeResult fekete_points(const CompactSet& K, std::size_t n, std::optional<cplx> pole = std::nullopt,
                           const FeketeOptions& options = {});

// Brute-force oracle for small n: grid search over the parameters with a
// fixed first point on periodic sets.
double fekete_delta_bruteforce(const CompactSet& K, std::size_t n, std::size_t grid);

struct CapacityReport {
    std::vector<std::size_t> ladder;
    std::vector<double> delta_n;
    std::vector<std::vector<cplx>> points;  // Fekete points for each ladder entry
    double delta = 0.0;   // extrapolated transfinite diameter
    double gamma = 0.0;   // Robin constant
    double logcap = 0.0;  // exp(-gamma)
    double energy = 0.0;  // gamma / (4 pi)
};

CapacityReport transfinite_diameter(const CompactSet& K, std::optional<cplx> pole, std::size_t n_max,
                                    const FeketeOptions& options = {});

struct EquilibriumResult {
    CompactSet set;
    std::vector<std::array<double, 2>> panels;  // parameter intervals
    WeightedMeasure measure;                    // panel masses at the collocation points
    std::vector<double> panel_lengths;
    double gamma = 0.0;
    double energy = 0.0;
    double potential_spread = 0.0;  // max - min of the discrete potential at the nodes

    // Equilibrium potential, panel-averaged kernel; equals gamma/2pi on K.
    [[nodiscard]] double potential(cplx z) const;
};

EquilibriumResult equilibrium_measure(const CompactSet& K, std::size_t m);

// Harmonic measure of the domain seen from a. Disk: m equispaced nodes.
// Rectangle: the boundary nodes of the fd grid of the descriptor (m unused);
// a must be a grid node there.
WeightedMeasure harmonic_measure(const DomainDescriptor& domain, cplx a, std::size_t m);

double condenser_capacity(double r, double R, int n_dim);

}  // namespace potkit
