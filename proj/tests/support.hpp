#pragma once

#include <functional>
#include <random>

#include "shellfe/types.hpp"

namespace testsupport {

using shellfe::Mat3;
using shellfe::Vec3;
using shellfe::Vec9;

inline std::mt19937& rng(unsigned seed = 0) {
    static std::mt19937 gen(12345u + seed);
    return gen;
}

inline double uniform(std::mt19937& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline Vec9 random_gradient(std::mt19937& gen, double amplitude) {
    Vec9 l;
    for (int i = 0; i < 9; ++i) l(i) = uniform(gen, -amplitude, amplitude);
    return l;
}

inline double rel_err(double got, double want, double floor = 1e-14) {
    return std::abs(got - want) / std::max(std::abs(want), floor);
}

/// Central finite difference of a scalar functional.
inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Random rotation matrix from three Euler-style angles.
inline Mat3 random_rotation(std::mt19937& gen) {
    const double a = uniform(gen, 0.0, 2.0 * M_PI);
    const double b = uniform(gen, 0.0, M_PI);
    const double c = uniform(gen, 0.0, 2.0 * M_PI);
    Mat3 ra, rb, rc;
    ra << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
    rb << 1, 0, 0, 0, std::cos(b), -std::sin(b), 0, std::sin(b), std::cos(b);
    rc << std::cos(c), -std::sin(c), 0, std::sin(c), std::cos(c), 0, 0, 0, 1;
    return ra * rb * rc;
}

} // namespace testsupport
