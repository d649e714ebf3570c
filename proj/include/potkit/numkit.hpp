#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "potkit/error.hpp"

namespace potkit {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

enum class Exec { serial, parallel };

// Evaluates f(i) for i in [0, n) and returns the values in index order.
// The parallel variant only distributes the evaluations; any reduction over the
// result stays with the caller so sums are bitwise reproducible.
template <class F>
auto parallel_map(std::size_t n, F&& f, Exec exec = Exec::parallel)
    -> std::vector<decltype(f(std::size_t{}))>;

[[nodiscard]] bool is_finite(cplx z) noexcept;
void require_finite(cplx z, std::string_view what);

// ---------------------------------------------------------------- quadrature rules

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre rule with n nodes; computed once per n and cached.
const GaussRule& gauss_legendre(std::size_t n);

// Kahan-compensated sum, used for the serial reduction after a parallel map.
template <class T>
T ordered_sum(std::span<const T> values);

// ---------------------------------------------------------------- curves

struct Curve {
    std::function<cplx(double)> point;    // t in [0,1), closed
    std::function<cplx(double)> tangent;  // d point / dt
    int orientation = +1;
    std::size_t sample_count = 256;

    static Curve circle(cplx center, double radius, std::size_t samples = 256, int orientation = +1);
};

using ComplexFn = std::function<cplx(cplx)>;
using RealFn = std::function<double(cplx)>;

// Trapezoid rule for the closed-curve integral of f(z) dz.
cplx contour_integral(const ComplexFn& f, const Curve& curve, std::size_t n, Exec exec = Exec::parallel);

// Trapezoid rule for the closed-curve integral of f(z) |dz|.
cplx arclength_integral(const ComplexFn& f, const Curve& curve, std::size_t n, Exec exec = Exec::parallel);

// Composite Gauss-Legendre integral of f(z) dz along the straight segment from a to b.
cplx segment_integral(const ComplexFn& f, cplx a, cplx b, std::size_t panels = 8, std::size_t order = 16);

// ---------------------------------------------------------------- finite differences

enum class Wirtinger { d_dz, d_dzbar, d2_dz_dzbar };

inline constexpr double default_first_step = 1e-5;
inline constexpr double default_mixed_step = 1e-4;

// Central-difference Wirtinger derivative. `inside` (optional) marks the
// admissible region; a stencil node outside it raises a domain error.
cplx wirtinger_derivative(const ComplexFn& f, cplx z0, Wirtinger which, double h,
                          const std::function<bool(cplx)>& inside = {});

// d^2 f / dz da-bar for a function of two complex variables.
cplx mixed_derivative_z_abar(const std::function<cplx(cplx, cplx)>& f, cplx z0, cplx a0,
                             double h = default_mixed_step);

// Five-point Laplacian from stencil values {center, east, west, north, south}.
double fd_laplacian(const std::array<double, 5>& samples, double h);

// Laplacian of a real field at z; `richardson` combines steps h and h/2.
double laplacian(const RealFn& f, cplx z, double h, bool richardson = false,
                 const std::function<bool(cplx)>& inside = {});

// ---------------------------------------------------------------- area quadrature

struct DiskRegion {
    cplx center{0.0, 0.0};
    double radius = 1.0;
};

struct ParallelogramRegion {
    cplx origin{0.0, 0.0};
    cplx edge1{1.0, 0.0};
    cplx edge2{0.0, 1.0};
};

struct Region {
    enum class Shape { disk, parallelogram } shape = Shape::disk;
    DiskRegion disk{};
    ParallelogramRegion cell{};

    static Region make_disk(cplx center, double radius);
    static Region make_parallelogram(cplx origin, cplx e1, cplx e2);
    static Region make_rectangle(double x0, double y0, double w, double h);
    [[nodiscard]] bool contains(cplx z) const;
    [[nodiscard]] double area() const;
};

struct QuadratureResult {
    cplx value;
    double error_estimate;
};

// Integral of f over the region with respect to dx dy. At most one integrable
// singular point may be declared; the rule then becomes a polar fan around it
// with sqrt(r) clustering of the radial nodes.
QuadratureResult area_quadrature(const ComplexFn& f, const Region& region, std::size_t resolution,
                                 std::optional<cplx> singular_point = std::nullopt,
                                 Exec exec = Exec::parallel);

// Principal-value integral for a pole of order two at `pole`: the integral over
// the region minus a disk of radius eps, extrapolated to eps = 0 over the ladder.
QuadratureResult principal_value_quadrature(const ComplexFn& f, const Region& region, cplx pole,
                                            std::size_t resolution,
                                            std::span<const double> eps_ladder = {},
                                            Exec exec = Exec::parallel);

// ---------------------------------------------------------------- ODE integration

using State = std::vector<cplx>;
using Field = std::function<State(double, const State&)>;

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    std::map<std::string, std::vector<double>> monitors;
};

struct RkOptions {
    std::map<std::string, std::function<double(const State&)>> monitors;
    // Returns the smallest pairwise separation in the state; integration stops
    // with a collision error once it drops below `collision_distance`.
    std::function<double(const State&)> separation;
    double collision_distance = 1e-10;
    double initial_step = 1e-3;
    std::size_t max_steps = 5'000'000;
};

// Dormand-Prince 5(4) with PI step control. Negative t_end integrates backwards.
Trajectory rk_integrate(const Field& field, const State& state0, double t_end, double tol,
                        const RkOptions& options = {});

// ---------------------------------------------------------------- template definitions

template <class F>
auto parallel_map(std::size_t n, F&& f, Exec exec) -> std::vector<decltype(f(std::size_t{}))> {
    using T = decltype(f(std::size_t{}));
    std::vector<T> out(n);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    }
    return out;
}

template <class T>
T ordered_sum(std::span<const T> values) {
    T sum{};
    T carry{};
    for (const T& v : values) {
        const T y = v - carry;
        const T t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace potkit
