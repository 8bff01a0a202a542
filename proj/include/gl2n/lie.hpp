#pragma once

/**
 * @file lie.hpp
 * @brief gl_{2n}(C) acting on the polynomial ring by first-order derivations.
 *
 * The torus generator H_gamma acts as
 *     sum_a z_{a,gamma} d/dz_{a,gamma} - zbar_{a,gamma} d/dzbar_{a,gamma},
 * the root vector E_{alpha,beta} as
 *     sum_g z_{g,alpha} d/dz_{g,beta} - zbar_{g,beta} d/dzbar_{g,alpha},
 * and the modified Casimir element is
 *     Omega = sum_g H_g^2
 *           + sum_{a<b} E_{ab}E_{ba} + E_{ba}E_{ab},
 * evaluated by literal composition of the first-order actions.
 */

#include <stdexcept>

#include "gl2n/polynomial.hpp"

namespace gl2n {

namespace detail {
inline void check_index(int idx, int n) {
    if (idx < 1 || idx > 2 * n) throw std::out_of_range("operator index outside [1, 2n]");
}
}  // namespace detail

/// H_gamma; diagonal on monomials with weight (z-degree minus zbar-degree in column gamma).
inline Polynomial apply_h(int gamma, const Polynomial& p) {
    detail::check_index(gamma, p.half_size());
    Polynomial r(p.half_size());
    for (const auto& [m, c] : p.terms()) {
        long w = 0;
        for (const auto& [v, e] : m.entries())
            if (v.col == gamma) w += (v.kind == VarKind::holo) ? e : -e;
        if (w != 0) r.add_term(m, GaussianRational(w) * c);
    }
    return r;
}

/// E_{alpha,beta} acting as the displayed derivation.
inline Polynomial apply_root(int alpha, int beta, const Polynomial& p) {
    detail::check_index(alpha, p.half_size());
    detail::check_index(beta, p.half_size());
    if (alpha == beta) throw std::invalid_argument("root vector requires alpha != beta");
    Polynomial r(p.half_size());
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.entries()) {
            if (v.kind == VarKind::holo && v.col == beta) {
                Monomial nm = m.shifted(v, -1).shifted(z_var(v.row, alpha), +1);
                r.add_term(nm, GaussianRational(e) * c);
            } else if (v.kind == VarKind::anti && v.col == alpha) {
                Monomial nm = m.shifted(v, -1).shifted(zbar_var(v.row, beta), +1);
                r.add_term(nm, GaussianRational(-e) * c);
            }
        }
    }
    return r;
}

/// Compact basis element E_{ab} - E_{ba}.
inline Polynomial apply_antisym(int alpha, int beta, const Polynomial& p) {
    if (!(alpha < beta)) throw std::invalid_argument("antisymmetric basis element requires alpha < beta");
    return apply_root(alpha, beta, p) - apply_root(beta, alpha, p);
}

/// Compact basis element i(E_{ab} + E_{ba}).
inline Polynomial apply_sym_i(int alpha, int beta, const Polynomial& p) {
    if (!(alpha < beta)) throw std::invalid_argument("symmetric basis element requires alpha < beta");
    return GaussianRational::i() * (apply_root(alpha, beta, p) + apply_root(beta, alpha, p));
}

inline Polynomial apply_casimir(const Polynomial& p) {
    const int n2 = p.matrix_size();
    Polynomial acc(p.half_size());
    for (int g = 1; g <= n2; ++g) acc += apply_h(g, apply_h(g, p));
    for (int a = 1; a <= n2; ++a)
        for (int b = a + 1; b <= n2; ++b) {
            acc += apply_root(a, b, apply_root(b, a, p));
            acc += apply_root(b, a, apply_root(a, b, p));
        }
    return acc;
}

/// (E_{ab}E_{ba} - E_{ba}E_{ab} - (H_a - H_b)) p; contractually the zero polynomial.
inline Polynomial bracket_defect(int alpha, int beta, const Polynomial& p) {
    if (alpha == beta) throw std::invalid_argument("bracket defect requires alpha != beta");
    Polynomial lhs = apply_root(alpha, beta, apply_root(beta, alpha, p))
                   - apply_root(beta, alpha, apply_root(alpha, beta, p));
    return lhs - (apply_h(alpha, p) - apply_h(beta, p));
}

struct OperatorId {
    enum class Kind { h, root, antisym, sym_i } kind;
    int alpha = 0;  // H uses alpha as gamma
    int beta = 0;

    void validate(int n) const {
        detail::check_index(alpha, n);
        if (kind != Kind::h) {
            detail::check_index(beta, n);
            if (kind == Kind::root && alpha == beta)
                throw std::invalid_argument("root operator requires alpha != beta");
            if ((kind == Kind::antisym || kind == Kind::sym_i) && !(alpha < beta))
                throw std::invalid_argument("compact basis operator requires alpha < beta");
        }
    }
};

inline Polynomial apply_operator(const OperatorId& op, const Polynomial& p) {
    op.validate(p.half_size());
    switch (op.kind) {
        case OperatorId::Kind::h: return apply_h(op.alpha, p);
        case OperatorId::Kind::root: return apply_root(op.alpha, op.beta, p);
        case OperatorId::Kind::antisym: return apply_antisym(op.alpha, op.beta, p);
        case OperatorId::Kind::sym_i: return apply_sym_i(op.alpha, op.beta, p);
    }
    throw std::logic_error("unreachable");
}

}  // namespace gl2n
