#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace potkit {

enum class ErrorKind {
    evaluation,
    domain,
    pole,
    conditioning,
    collision,
    convergence,
    parameter,
    branch,
    normalization,
    singular_map,
    solver,
    admissibility,
    schema,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Collision errors carry the simulation time at which two vortices met.
class CollisionError : public Error {
public:
    CollisionError(double time, const std::string& what)
        : Error(ErrorKind::collision, what), time_(time) {}
    [[nodiscard]] double time() const noexcept { return time_; }

private:
    double time_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace potkit
