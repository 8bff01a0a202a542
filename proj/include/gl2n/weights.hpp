#pragma once

/**
 * @file weights.hpp
 * @brief Highest-weight bookkeeping: purity, induced exponents, the pairing
 *        classification with its brute-force oracle, minimal K-type weights,
 *        Casimir eigenvalues, and the nonvanishing predicate.
 */

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gl2n {

/// Two weakly decreasing integer sequences of equal even length 2n.
struct HighestWeight {
    std::vector<int> nu;
    std::vector<int> nu_bar;

    void validate() const {
        if (nu.size() != nu_bar.size() || nu.empty() || nu.size() % 2 != 0)
            throw std::invalid_argument("weight sequences must share an even positive length");
        auto decreasing = [](const std::vector<int>& v) {
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i - 1] < v[i]) return false;
            return true;
        };
        if (!decreasing(nu) || !decreasing(nu_bar))
            throw std::invalid_argument("weight sequences must be weakly decreasing");
    }
};

/// m with nu_bar_j + nu_{2n-j+1} = m for all j, if one exists.
inline std::optional<int> purity_constant(const HighestWeight& w) {
    w.validate();
    const std::size_t d = w.nu.size();
    const int m = w.nu_bar[0] + w.nu[d - 1];
    for (std::size_t j = 0; j < d; ++j)
        if (w.nu_bar[j] + w.nu[d - 1 - j] != m) return std::nullopt;
    return m;
}

/// l_j = 2 nu_j + (2n + 1 - 2j) - m; strictly decreasing with even pair sums.
inline std::vector<int> induced_exponents(const HighestWeight& w, int m) {
    w.validate();
    const int d = static_cast<int>(w.nu.size());
    std::vector<int> l(d);
    for (int j = 1; j <= d; ++j) l[j - 1] = 2 * w.nu[j - 1] + (d + 1 - 2 * j) - m;
    for (int j = 1; j < d; ++j)
        if (l[j - 1] <= l[j]) throw std::logic_error("induced exponents not strictly decreasing");
    for (int j = 0; j < d / 2; ++j)
        if ((l[j] + l[d - 1 - j]) % 2 != 0) throw std::logic_error("pair sum parity violated");
    return l;
}

namespace detail {
inline void check_strictly_decreasing(const std::vector<int>& l) {
    if (l.empty() || l.size() % 2 != 0)
        throw std::invalid_argument("exponent sequence must have even positive length");
    for (std::size_t i = 1; i < l.size(); ++i)
        if (l[i - 1] <= l[i]) throw std::invalid_argument("exponent sequence must be strictly decreasing");
}
}  // namespace detail

/// L with l_j + l_{2n+1-j} = 2L for all j, if one exists.  Strict decrease
/// forces the nested pairing, so only that pairing is inspected.
inline std::optional<int> shalika_classify(const std::vector<int>& l) {
    detail::check_strictly_decreasing(l);
    const std::size_t d = l.size();
    const int s = l[0] + l[d - 1];
    for (std::size_t j = 0; j < d / 2; ++j)
        if (l[j] + l[d - 1 - j] != s) return std::nullopt;
    if (s % 2 != 0) return std::nullopt;
    return s / 2;
}

namespace detail {
inline bool pairing_search(std::vector<int>& pool, int target) {
    if (pool.empty()) return true;
    const int first = pool.front();
    for (std::size_t j = 1; j < pool.size(); ++j) {
        if (first + pool[j] != target) continue;
        std::vector<int> rest;
        rest.reserve(pool.size() - 2);
        for (std::size_t t = 1; t < pool.size(); ++t)
            if (t != j) rest.push_back(pool[t]);
        if (pairing_search(rest, target)) return true;
    }
    return false;
}
}  // namespace detail

/// Independent oracle: exhaust all perfect pairings of the entries.
inline std::optional<int> shalika_brute(const std::vector<int>& l) {
    detail::check_strictly_decreasing(l);
    if (l.size() > 12) throw std::invalid_argument("brute-force pairing limited to length 12");
    long total = 0;
    for (int v : l) total += v;
    // all pair sums equal forces the common sum to be total / n
    const long n_pairs = static_cast<long>(l.size()) / 2;
    if (total % n_pairs != 0) return std::nullopt;
    const long target = total / n_pairs;
    if (target % 2 != 0) return std::nullopt;
    std::vector<int> pool = l;
    if (!detail::pairing_search(pool, static_cast<int>(target))) return std::nullopt;
    return static_cast<int>(target / 2);
}

/// Lambda = (N_1+L, ..., N_n+L, -N_n+L, ..., -N_1+L).
inline std::vector<int> minimal_ktype_weight(const std::vector<int>& N, int L) {
    if (N.empty()) throw std::invalid_argument("empty weight list");
    for (std::size_t i = 0; i < N.size(); ++i) {
        if (N[i] <= 0) throw std::invalid_argument("weights must be positive");
        if (i + 1 < N.size() && N[i] <= N[i + 1])
            throw std::invalid_argument("weights must be strictly decreasing");
    }
    std::vector<int> lambda;
    lambda.reserve(2 * N.size());
    for (int v : N) lambda.push_back(v + L);
    for (auto it = N.rbegin(); it != N.rend(); ++it) lambda.push_back(-*it + L);
    return lambda;
}

/// (1/4) sum_j (2 nu_j + 2n - 2j + 1)^2 - (2n - 2j + 1)^2, an exact integer
/// for integral weights; equals sum_j nu_j (nu_j + 2n - 2j + 1).
inline mpq_class casimir_eigenvalue(const std::vector<int>& nu) {
    if (nu.empty()) throw std::invalid_argument("empty weight");
    for (std::size_t i = 1; i < nu.size(); ++i)
        if (nu[i - 1] < nu[i]) throw std::invalid_argument("weight must be weakly decreasing");
    const int d = static_cast<int>(nu.size());
    mpq_class acc = 0;
    for (int j = 1; j <= d; ++j) {
        mpq_class a = 2 * nu[j - 1] + d - 2 * j + 1;
        mpq_class b = d - 2 * j + 1;
        acc += a * a - b * b;
    }
    return acc / 4;
}

/// True on the nonvanishing side of the main dichotomy: |l + L| <= N_n.
inline bool nonvanishing_predicate(int l, int L, int N_n) {
    if (N_n < 1) throw std::invalid_argument("N_n must be positive");
    return std::abs(l + L) <= N_n;
}

/// Central character data (modulus exponent, circle index) = (m n, 2 n L).
inline std::pair<long, long> central_character_data(int m, int L, int n) {
    return {static_cast<long>(m) * n, 2L * n * L};
}

/// Outcome of the weight pipeline for one input.
struct InducedParams {
    int n = 0;
    std::optional<int> m;
    std::vector<int> l;
    std::optional<int> L;
    std::vector<int> N;       // present iff L is
    std::vector<int> lambda;  // minimal K-type weight, present iff L is

    bool has_shalika() const { return L.has_value(); }
};

/// Classification from the exponent sequence alone.
inline InducedParams classify_exponents(const std::vector<int>& l) {
    detail::check_strictly_decreasing(l);
    InducedParams out;
    out.n = static_cast<int>(l.size()) / 2;
    out.l = l;
    out.L = shalika_classify(l);
    if (out.L) {
        for (int j = 0; j < out.n; ++j) out.N.push_back(l[j] - *out.L);
        out.lambda = minimal_ktype_weight(out.N, *out.L);
    }
    return out;
}

/// Full pipeline from a highest weight: purity, exponents, pairing.
inline InducedParams classify_weight(const HighestWeight& w) {
    auto m = purity_constant(w);
    if (!m) {
        InducedParams out;
        out.n = static_cast<int>(w.nu.size()) / 2;
        return out;  // no purity constant, no induced exponents
    }
    InducedParams out = classify_exponents(induced_exponents(w, *m));
    out.m = *m;
    return out;
}

}  // namespace gl2n
