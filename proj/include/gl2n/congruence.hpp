#pragma once

/**
 * @file congruence.hpp
 * @brief Congruence certificates modulo the ideal of polynomials vanishing
 *        on U_{2n}.
 *
 * Membership in the ideal generated by the entries of Z Zbar^T = I and
 * Zbar^T Z = I is certified by exact multivariate division; anything the
 * division misses falls back to evaluation at seeded Haar unitaries.  The
 * two paths are never conflated in the verdict.
 */

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gl2n/haar.hpp"
#include "gl2n/polynomial.hpp"

namespace gl2n {

enum class CheckStatus { certified_exact, numeric_pass, fail };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::certified_exact: return "certified_exact";
        case CheckStatus::numeric_pass: return "numeric_pass";
        case CheckStatus::fail: return "fail";
    }
    return "?";
}

struct CongruenceVerdict {
    CheckStatus status = CheckStatus::fail;
    double max_abs_error = 0.0;  // 0 on the exact path
    int samples_used = 0;
    long remainder_terms = 0;

    bool passed() const { return status != CheckStatus::fail; }

    static CongruenceVerdict exact() { return {CheckStatus::certified_exact, 0.0, 0, 0}; }
};

/// Row orthonormality generators r_{jl} = sum_k z_{j,k} zbar_{l,k} - delta_{jl}
/// followed by the column counterparts, both in j-major order.
inline std::vector<Polynomial> relation_generators(int n) {
    if (n < 1) throw std::invalid_argument("half size must be >= 1");
    const int d = 2 * n;
    std::vector<Polynomial> gens;
    gens.reserve(2 * d * d);
    for (int j = 1; j <= d; ++j)
        for (int l = 1; l <= d; ++l) {
            Polynomial g(n);
            for (int k = 1; k <= d; ++k)
                g.add_term(Monomial::variable(z_var(j, k)).times(Monomial::variable(zbar_var(l, k))),
                           GaussianRational(1));
            if (j == l) g.add_term(Monomial(), GaussianRational(-1));
            gens.push_back(std::move(g));
        }
    for (int j = 1; j <= d; ++j)
        for (int l = 1; l <= d; ++l) {
            Polynomial g(n);
            for (int k = 1; k <= d; ++k)
                g.add_term(Monomial::variable(z_var(k, j)).times(Monomial::variable(zbar_var(k, l))),
                           GaussianRational(1));
            if (j == l) g.add_term(Monomial(), GaussianRational(-1));
            gens.push_back(std::move(g));
        }
    return gens;
}

struct ReductionResult {
    Polynomial remainder;
    long quotient_count = 0;  // number of cancellation steps
};

/// Multivariate division in the canonical graded-lex order.  The largest
/// remaining term is cancelled against the first generator whose leading
/// monomial divides it; irreducible terms move to the remainder.  Each step
/// strictly decreases the working leading monomial, so the loop terminates.
/// Remainder zero certifies membership in the generated ideal.
inline ReductionResult reduce_by_relations(const Polynomial& p, const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("generator list must be nonempty");
    struct Gen {
        const Monomial* lm;
        GaussianRational lc;
        const Polynomial* poly;
    };
    std::vector<Gen> table;
    table.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.half_size() != p.half_size()) throw std::invalid_argument("ambient size mismatch");
        if (g.is_zero()) continue;
        const auto& lead = *g.terms().begin();
        table.push_back({&lead.first, lead.second, &g});
    }

    Polynomial work = p;
    ReductionResult out{Polynomial::zero(p.half_size()), 0};
    while (!work.is_zero()) {
        const auto& [lt, lc] = *work.terms().begin();
        const Gen* hit = nullptr;
        for (const auto& g : table)
            if (lt.divisible_by(*g.lm)) {
                hit = &g;
                break;
            }
        if (hit == nullptr) {
            out.remainder.add_term(lt, lc);
            work.add_term(lt, -lc);
            continue;
        }
        Monomial quot = lt.divided_by(*hit->lm);
        GaussianRational factor = lc / hit->lc;
        for (const auto& [gm, gc] : hit->poly->terms())
            work.add_term(quot.times(gm), -(factor * gc));
        ++out.quotient_count;
    }
    return out;
}

struct CongruencePolicy {
    double tol = 1e-9;
    int samples = 50;
    std::uint64_t seed = 42;
};

/// Decide p == q on U_{2n}: exact division first, Haar sampling fallback.
/// Numeric errors are measured against tol * max(1, coefficient 1-norm).
inline CongruenceVerdict congruent_mod_i(const Polynomial& p, const Polynomial& q,
                                         const CongruencePolicy& policy = {}) {
    if (p.half_size() != q.half_size()) throw std::invalid_argument("ambient size mismatch");
    if (policy.tol <= 0.0 || policy.samples < 1) throw std::invalid_argument("bad congruence policy");
    Polynomial diff = p - q;
    if (diff.is_zero()) return CongruenceVerdict::exact();

    ReductionResult red = reduce_by_relations(diff, relation_generators(p.half_size()));
    if (red.remainder.is_zero()) return CongruenceVerdict::exact();

    const double scale = std::max(1.0, diff.coeff_norm1());
    double worst = 0.0;
    for (int s = 0; s < policy.samples; ++s) {
        Eigen::MatrixXcd u = haar_unitary(p.half_size(), policy.seed + static_cast<std::uint64_t>(s));
        worst = std::max(worst, std::abs(diff.evaluate(u)));
    }
    CongruenceVerdict v;
    v.max_abs_error = worst;
    v.samples_used = policy.samples;
    v.remainder_terms = static_cast<long>(red.remainder.term_count());
    v.status = (worst <= policy.tol * scale) ? CheckStatus::numeric_pass : CheckStatus::fail;
    return v;
}

}  // namespace gl2n
