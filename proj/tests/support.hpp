#pragma once

#include <doctest.h>

#include "m0n/error.hpp"

// Evaluates `expr` and checks that it throws m0n::Error carrying `code`.
#define CHECK_ERROR(expr, expected)                                   \
    do {                                                              \
        bool m0n_thrown = false;                                      \
        try {                                                         \
            (void)(expr);                                             \
        } catch (const m0n::Error& m0n_e) {                           \
            m0n_thrown = true;                                        \
            CHECK_MESSAGE(m0n_e.code() == (expected), m0n_e.what());  \
        }                                                             \
        CHECK_MESSAGE(m0n_thrown, "no m0n::Error from " #expr);       \
    } while (0)
