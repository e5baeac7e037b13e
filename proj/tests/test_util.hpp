#pragma once

#include <cmath>
#include <random>

#include <doctest.h>

namespace testutil {

inline bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
};

}  // namespace testutil
