#pragma once

/**
 * @file vectors.hpp
 * @brief The explicit polynomials of the construction: the hermitian row
 *        pairings Phi_{jl}, the alternating sums F_k, the determinant factors
 *        Delta_{1,+-} / Delta_{2,+-}, the four-case equivariant vector, and
 *        its 2x2 building block, together with their verification routines.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "gl2n/congruence.hpp"
#include "gl2n/haar.hpp"
#include "gl2n/polynomial.hpp"

namespace gl2n {

/// Phi_{jl} = sum_{k=1}^{n} z_{j,k} zbar_{l,k}  (first n columns only).
inline Polynomial phi_pair(int j, int l, int n) {
    if (j == l) throw std::invalid_argument("phi_pair requires j != l");
    if (j < 1 || l < 1 || j > 2 * n || l > 2 * n) throw std::out_of_range("row index outside [1, 2n]");
    Polynomial p(n);
    for (int k = 1; k <= n; ++k)
        p.add_term(Monomial::variable(z_var(j, k)).times(Monomial::variable(zbar_var(l, k))),
                   GaussianRational(1));
    return p;
}

/// The companion pairing over the last n columns, sum_k z_{j,n+k} zbar_{l,n+k}.
inline Polynomial v_pair(int j, int l, int n) {
    if (j == l) throw std::invalid_argument("v_pair requires j != l");
    if (j < 1 || l < 1 || j > 2 * n || l > 2 * n) throw std::out_of_range("row index outside [1, 2n]");
    Polynomial p(n);
    for (int k = n + 1; k <= 2 * n; ++k)
        p.add_term(Monomial::variable(z_var(j, k)).times(Monomial::variable(zbar_var(l, k))),
                   GaussianRational(1));
    return p;
}

namespace detail {

inline int permutation_sign(std::vector<int> perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        while (perm[i] != static_cast<int>(i)) {
            std::swap(perm[i], perm[perm[i]]);
            sign = -sign;
        }
    return sign;
}

template <class Fn>
void for_each_permutation(int k, Fn&& fn) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(perm, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

/// F_k: the signed sum over permutations s of the odd rows {1,3,...,2k-1} of
/// the products Phi_{2i-1, s(2i-1)+1}; sgn(s) is the parity of s on k letters.
inline Polynomial fundamental_polynomial(int k, int n) {
    if (k < 1 || k > n) throw std::out_of_range("fundamental index outside [1, n]");
    Polynomial acc(n);
    detail::for_each_permutation(k, [&](const std::vector<int>& perm, int sign) {
        Polynomial t = Polynomial::constant(n, GaussianRational(sign));
        for (int i = 0; i < k; ++i) t = t * phi_pair(2 * i + 1, 2 * perm[i] + 2, n);
        acc += t;
    });
    return acc;
}

enum class DetFamily { one, two };
enum class DetSign { plus, minus };

/// Delta_{1,+} = det(odd z rows, first n columns), Delta_{1,-} the even zbar
/// rows, Delta_{2,+-} = det Z / det Zbar; all expanded as signed sums.
inline Polynomial determinant_factor(DetFamily family, DetSign sign, int n) {
    const bool conj = (sign == DetSign::minus);
    const VarKind kind = conj ? VarKind::anti : VarKind::holo;
    std::vector<int> rows, cols;
    if (family == DetFamily::one) {
        for (int i = 1; i <= n; ++i) rows.push_back(conj ? 2 * i : 2 * i - 1);
        for (int c = 1; c <= n; ++c) cols.push_back(c);
    } else {
        for (int r = 1; r <= 2 * n; ++r) rows.push_back(r);
        cols = rows;
    }
    Polynomial acc(n);
    detail::for_each_permutation(static_cast<int>(rows.size()),
                                 [&](const std::vector<int>& perm, int sgn) {
        Monomial m;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            VariableId v{kind, static_cast<std::uint16_t>(rows[i]),
                         static_cast<std::uint16_t>(cols[perm[i]])};
            m = m.times(Monomial::variable(v));
        }
        acc.add_term(m, GaussianRational(sgn));
    });
    return acc;
}

/// Weight data (N, L) plus twist index l of the vector to construct.
struct TestVectorSpec {
    int n;
    std::vector<int> N;  // strictly decreasing positive, length n
    int L;
    int l;

    void validate() const {
        if (n < 1 || static_cast<int>(N.size()) != n)
            throw std::invalid_argument("weight list must have length n");
        for (int i = 0; i < n; ++i) {
            if (N[i] <= 0) throw std::invalid_argument("weights must be positive");
            if (i + 1 < n && N[i] <= N[i + 1])
                throw std::invalid_argument("weights must be strictly decreasing");
        }
    }

    bool buildable() const { return std::abs(l + L) <= N.back(); }

    /// Interleaved left torus weight (N_1+L, -N_1+L, ..., N_n+L, -N_n+L).
    std::vector<int> torus_weight() const {
        std::vector<int> w;
        for (int i = 0; i < n; ++i) {
            w.push_back(N[i] + L);
            w.push_back(-N[i] + L);
        }
        return w;
    }
};

/// The four-case equivariant polynomial.  Overlapping sign cases route to the
/// lower-numbered branch; the overlap consistency is a test-level invariant.
inline Polynomial cohomological_vector(const TestVectorSpec& spec) {
    spec.validate();
    const int lL = spec.l + spec.L;
    const int l2L = spec.l + 2 * spec.L;
    if (!spec.buildable())
        throw std::invalid_argument("twist outside the construction range: |l+L| > N_n");

    Polynomial acc = Polynomial::constant(spec.n, GaussianRational(1));
    for (int i = 1; i + 1 <= spec.n; ++i) {
        unsigned e = static_cast<unsigned>(spec.N[i - 1] - spec.N[i]);
        if (e > 0) acc = acc * fundamental_polynomial(i, spec.n).pow(e);
    }

    const Polynomial fn = fundamental_polynomial(spec.n, spec.n);
    if (lL >= 0) {
        acc = acc * fn.pow(static_cast<unsigned>(spec.N.back() - lL));
        acc = acc * determinant_factor(DetFamily::one, DetSign::minus, spec.n)
                        .pow(static_cast<unsigned>(2 * lL));
    } else {
        acc = acc * fn.pow(static_cast<unsigned>(spec.N.back() + lL));
        acc = acc * determinant_factor(DetFamily::one, DetSign::plus, spec.n)
                        .pow(static_cast<unsigned>(-2 * lL));
    }
    if (l2L >= 0) {
        acc = acc * determinant_factor(DetFamily::two, DetSign::plus, spec.n)
                        .pow(static_cast<unsigned>(l2L));
    } else {
        acc = acc * determinant_factor(DetFamily::two, DetSign::minus, spec.n)
                        .pow(static_cast<unsigned>(-l2L));
    }
    return acc;
}

/// The 2x2 block vector in the variables x1 = z_{1,1}, x2 = z_{2,1},
/// y1 = z_{1,2}, y2 = z_{2,2}, written out independently of the general builder.
inline Polynomial gl2_vector(int N, int L, int l) {
    if (N < 0) throw std::invalid_argument("N must be nonnegative");
    if (std::abs(l + L) > N) throw std::invalid_argument("twist outside the construction range: |l+L| > N");
    const int lL = l + L;
    const int l2L = l + 2 * L;

    const Polynomial x1 = Polynomial::variable(1, z_var(1, 1));
    const Polynomial x2b = Polynomial::variable(1, zbar_var(2, 1));
    const Polynomial det = Polynomial::variable(1, z_var(1, 1)) * Polynomial::variable(1, z_var(2, 2))
                         - Polynomial::variable(1, z_var(2, 1)) * Polynomial::variable(1, z_var(1, 2));
    const Polynomial det_bar = Polynomial::variable(1, zbar_var(1, 1)) * Polynomial::variable(1, zbar_var(2, 2))
                             - Polynomial::variable(1, zbar_var(2, 1)) * Polynomial::variable(1, zbar_var(1, 2));

    Polynomial acc = (x1 * x2b).pow(static_cast<unsigned>(N - std::abs(lL)));
    acc = acc * (lL >= 0 ? x2b : x1).pow(static_cast<unsigned>(2 * std::abs(lL)));
    acc = acc * (l2L >= 0 ? det : det_bar).pow(static_cast<unsigned>(std::abs(l2L)));
    return acc;
}

namespace detail {

inline std::complex<double> unit_power(std::complex<double> base, int e) {
    // base is on (or numerically near) the unit circle; negative powers conjugate
    std::complex<double> b = (e < 0) ? std::conj(base) : base;
    std::complex<double> acc{1.0, 0.0};
    for (int k = 0; k < std::abs(e); ++k) acc *= b;
    return acc;
}

}  // namespace detail

/// Checks the left torus character and the right U_n x U_n equivariance of a
/// constructed vector at seeded random samples.
inline CongruenceVerdict verify_equivariance(const Polynomial& p, const TestVectorSpec& spec,
                                             int samples, std::uint64_t seed, double tol = 1e-9) {
    spec.validate();
    if (p.half_size() != spec.n) throw std::invalid_argument("ambient size mismatch");
    const int d = 2 * spec.n;
    const std::vector<int> weight = spec.torus_weight();

    double worst = 0.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int s = 0; s < samples; ++s) {
        Eigen::MatrixXcd zmat = haar_unitary(spec.n, seed + 1000 + static_cast<std::uint64_t>(s));
        std::complex<double> base = p.evaluate(zmat);

        Eigen::MatrixXcd torus = Eigen::MatrixXcd::Zero(d, d);
        std::complex<double> character{1.0, 0.0};
        for (int j = 0; j < d; ++j) {
            double th = angle(rng);
            torus(j, j) = std::polar(1.0, th);
            character *= std::polar(1.0, weight[j] * th);
        }
        worst = std::max(worst, std::abs(p.evaluate(torus * zmat) - character * base));

        Eigen::MatrixXcd k1 = haar_unitary_dim(spec.n, seed + 2000 + static_cast<std::uint64_t>(s));
        Eigen::MatrixXcd k2 = haar_unitary_dim(spec.n, seed + 3000 + static_cast<std::uint64_t>(s));
        Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(d, d);
        block.topLeftCorner(spec.n, spec.n) = k1;
        block.bottomRightCorner(spec.n, spec.n) = k2;
        std::complex<double> rhs = detail::unit_power(k1.determinant(), -spec.l)
                                 * detail::unit_power(k2.determinant(), spec.l + 2 * spec.L) * base;
        worst = std::max(worst, std::abs(p.evaluate(zmat * block) - rhs));
    }

    CongruenceVerdict v;
    v.max_abs_error = worst;
    v.samples_used = samples;
    v.status = (worst <= tol) ? CheckStatus::numeric_pass : CheckStatus::fail;
    return v;
}

/// Exact invariance of F_k under the simultaneous swaps of the row pairs
/// (2a-1, 2a) <-> (2b-1, 2b), a < b <= k.
inline CongruenceVerdict verify_pair_permutation_invariance(int k, int n) {
    if (k < 1 || k > n) throw std::out_of_range("fundamental index outside [1, n]");
    const Polynomial fk = fundamental_polynomial(k, n);
    long mismatch = 0;
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
            std::map<int, int> rowmap{{2 * a - 1, 2 * b - 1}, {2 * b - 1, 2 * a - 1},
                                      {2 * a, 2 * b}, {2 * b, 2 * a}};
            std::map<VariableId, Polynomial> images;
            for (const auto& [from, to] : rowmap)
                for (int c = 1; c <= 2 * n; ++c) {
                    images.emplace(z_var(from, c), Polynomial::variable(n, z_var(to, c)));
                    images.emplace(zbar_var(from, c), Polynomial::variable(n, zbar_var(to, c)));
                }
            Polynomial moved = fk.substitute(images);
            if (!(moved == fk)) mismatch += static_cast<long>((moved - fk).term_count());
        }
    CongruenceVerdict v;
    v.status = (mismatch == 0) ? CheckStatus::certified_exact : CheckStatus::fail;
    v.remainder_terms = mismatch;
    return v;
}

namespace detail {

/// Is (row, col) one of the nonzero slots of the block-diagonal-times-w matrix?
inline bool in_xw_pattern(int row, int col, int n) {
    const int i = (row + 1) / 2;  // block index 1..n
    return col == i || col == n + i;
}

}  // namespace detail

/// Exact block factorization: specializing the vector to the xw matrix equals
/// the product of per-block 2x2 vectors with relabeled variables.
inline CongruenceVerdict verify_restriction_factorization(const TestVectorSpec& spec) {
    spec.validate();
    const int n = spec.n;
    const Polynomial vec = cohomological_vector(spec);

    std::map<VariableId, Polynomial> images;
    for (int r = 1; r <= 2 * n; ++r)
        for (int c = 1; c <= 2 * n; ++c)
            if (!detail::in_xw_pattern(r, c, n)) {
                images.emplace(z_var(r, c), Polynomial::zero(n));
                images.emplace(zbar_var(r, c), Polynomial::zero(n));
            }
    const Polynomial lhs = vec.substitute(images);

    // The interleaving element has determinant (-1)^{n(n-1)/2}, which the
    // det Z / det Zbar factors pick up with exponent l + 2L.
    const bool odd_parity = (n * (n - 1) / 2) % 2 != 0;
    const long sign = (odd_parity && std::abs(spec.l + 2 * spec.L) % 2 != 0) ? -1 : 1;
    Polynomial rhs = Polynomial::constant(n, GaussianRational(sign));
    for (int i = 1; i <= n; ++i) {
        Polynomial block = gl2_vector(spec.N[i - 1], spec.L, spec.l);
        rhs = rhs * block.map_variables(n, [&](VariableId v) {
            VariableId out = v;
            out.row = static_cast<std::uint16_t>(2 * (i - 1) + v.row);
            out.col = static_cast<std::uint16_t>(v.col == 1 ? i : n + i);
            return out;
        });
    }

    CongruenceVerdict v;
    if (lhs == rhs) {
        v = CongruenceVerdict::exact();
    } else {
        v.status = CheckStatus::fail;
        v.remainder_terms = static_cast<long>((lhs - rhs).term_count());
    }
    return v;
}

}  // namespace gl2n
