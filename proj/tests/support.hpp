#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>

#include "potkit/error.hpp"

#define CHECK_NEAR(lhs, rhs, tol)                                                              \
    CHECK_MESSAGE(std::abs((lhs) - (rhs)) <= (tol), "lhs=" << (lhs) << " rhs=" << (rhs)       \
                                                           << " diff=" << std::abs((lhs) - (rhs)))

// Runs `expr` and checks that it raises a potkit error of the given kind.
#define CHECK_ERROR_KIND(expr, expected)                  \
    do {                                                  \
        bool raised_ = false;                             \
        try {                                             \
            (void)(expr);                                 \
        } catch (const potkit::Error& e_) {               \
            raised_ = true;                               \
            CHECK(e_.kind() == (expected));               \
        }                                                 \
        CHECK_MESSAGE(raised_, "no error raised");        \
    } while (false)
