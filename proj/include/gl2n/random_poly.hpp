#pragma once

// Seeded random polynomials with small integer coefficients, used by the
// randomized identity checks (bracket, centrality, Leibniz, homomorphism).

#include <cstdint>
#include <random>

#include "gl2n/polynomial.hpp"

namespace gl2n {

inline Polynomial random_polynomial(int n, int max_degree, int terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<int> idx(1, 2 * n);
    Polynomial p(n);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) {
            VariableId v{kind(rng) == 0 ? VarKind::holo : VarKind::anti,
                         static_cast<std::uint16_t>(idx(rng)),
                         static_cast<std::uint16_t>(idx(rng))};
            m = m.times(Monomial::variable(v));
        }
        int c = coeff(rng);
        int ci = coeff(rng);
        p.add_term(m, GaussianRational(mpq_class(c), mpq_class(ci)));
    }
    return p;
}

}  // namespace gl2n
