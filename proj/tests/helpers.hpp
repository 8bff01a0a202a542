#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "gl2n/polynomial.hpp"

namespace gl2n::testing {

inline Polynomial zp(int n, int r, int c) { return Polynomial::variable(n, z_var(r, c)); }
inline Polynomial wp(int n, int r, int c) { return Polynomial::variable(n, zbar_var(r, c)); }
inline Polynomial cp(int n, long v) { return Polynomial::constant(n, GaussianRational(v)); }

inline GaussianRational random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return GaussianRational(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace gl2n::testing
