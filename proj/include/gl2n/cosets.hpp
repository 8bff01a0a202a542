#pragma once

/**
 * @file cosets.hpp
 * @brief Double-coset bookkeeping for the Borel acting on G/H': the symmetric
 *        sequences, the interleaving Weyl element w and the sign involution
 *        eps, representatives x_N = a_N w_N, numeric Lie-algebra stabilizers,
 *        and modular-character checks.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "gl2n/congruence.hpp"

namespace gl2n {

/// One-line permutation: perm[j-1] is the 1-based image of j.  The matrix
/// convention is P e_j = e_{perm(j)}.
using Permutation = std::vector<int>;

inline Eigen::MatrixXd permutation_matrix(const Permutation& p) {
    const int d = static_cast<int>(p.size());
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(d, d);
    for (int j = 0; j < d; ++j) mat(p[j] - 1, j) = 1.0;
    return mat;
}

/// The interleaving element: j -> 2j-1 for j <= n, j -> 2(j-n) for j > n.
/// It conjugates blockdiag(I_n, -I_n) to diag(1,-1,...,1,-1) and carries the
/// block-diagonal subgroup onto its checkerboard conjugate.
inline Permutation weyl_w(int n) {
    Permutation w(2 * n);
    for (int j = 1; j <= n; ++j) w[j - 1] = 2 * j - 1;
    for (int j = n + 1; j <= 2 * n; ++j) w[j - 1] = 2 * (j - n);
    return w;
}

inline Eigen::MatrixXd epsilon_matrix(int n) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < 2 * n; ++j) e(j, j) = (j % 2 == 0) ? 1.0 : -1.0;
    return e;
}

/// Symmetric coset datum: a partition of {1,...,2n} into unordered pairs
/// {i,j} (n_{i,j} = n_{j,i} = 1) and signed fixed points (n_{t,t}^{+-} = 1),
/// with equally many + and - fixed points.
struct CosetSequence {
    int n = 0;
    std::vector<int> partner;    // 1-based involution; partner[i-1] == i marks a fixed point
    std::vector<int> diag_sign;  // +1/-1 on fixed points, 0 on paired slots

    void validate() const {
        const int d = 2 * n;
        if (n < 1 || static_cast<int>(partner.size()) != d ||
            static_cast<int>(diag_sign.size()) != d)
            throw std::invalid_argument("coset sequence has wrong shape");
        int plus = 0, minus = 0;
        for (int i = 1; i <= d; ++i) {
            int j = partner[i - 1];
            if (j < 1 || j > d || partner[j - 1] != i)
                throw std::invalid_argument("partner table is not an involution");
            if (j == i) {
                if (diag_sign[i - 1] == 1) ++plus;
                else if (diag_sign[i - 1] == -1) ++minus;
                else throw std::invalid_argument("fixed point needs a +1/-1 sign");
            } else if (diag_sign[i - 1] != 0) {
                throw std::invalid_argument("paired slot must carry sign 0");
            }
        }
        if (plus != minus) throw std::invalid_argument("signed fixed points must balance");
    }

    bool offdiag_only() const {
        for (std::size_t i = 0; i < partner.size(); ++i)
            if (partner[i] == static_cast<int>(i) + 1) return false;
        return true;
    }

    /// Sign of the slot at position i: +1 when the slot label is (i,j) with
    /// i < j or a + fixed point, else -1.
    int slot_sign(int i) const {
        int j = partner[i - 1];
        if (j == i) return diag_sign[i - 1];
        return i < j ? 1 : -1;
    }
};

inline nlohmann::ordered_json sequence_to_json(const CosetSequence& seq) {
    seq.validate();
    nlohmann::ordered_json out;
    out["n"] = seq.n;
    auto pairs = nlohmann::ordered_json::array();
    auto plus = nlohmann::ordered_json::array();
    auto minus = nlohmann::ordered_json::array();
    for (int i = 1; i <= 2 * seq.n; ++i) {
        int j = seq.partner[i - 1];
        if (j > i) pairs.push_back({i, j});
        else if (j == i) (seq.diag_sign[i - 1] > 0 ? plus : minus).push_back(i);
    }
    out["pairs"] = std::move(pairs);
    out["diag_plus"] = std::move(plus);
    out["diag_minus"] = std::move(minus);
    return out;
}

inline CosetSequence sequence_from_json(const nlohmann::ordered_json& j) {
    CosetSequence seq;
    seq.n = j.at("n").get<int>();
    seq.partner.assign(2 * seq.n, 0);
    seq.diag_sign.assign(2 * seq.n, 0);
    for (const auto& pr : j.at("pairs")) {
        int a = pr.at(0).get<int>(), b = pr.at(1).get<int>();
        seq.partner[a - 1] = b;
        seq.partner[b - 1] = a;
    }
    for (const auto& t : j.at("diag_plus")) {
        seq.partner[t.get<int>() - 1] = t.get<int>();
        seq.diag_sign[t.get<int>() - 1] = 1;
    }
    for (const auto& t : j.at("diag_minus")) {
        seq.partner[t.get<int>() - 1] = t.get<int>();
        seq.diag_sign[t.get<int>() - 1] = -1;
    }
    seq.validate();
    return seq;
}

/// All valid sequences for half-size n, in deterministic order (smallest open
/// slot pairs to partners in increasing order, then the signed fixed options).
inline std::vector<CosetSequence> enumerate_sequences(int n, bool offdiag_only) {
    if (n < 1 || n > 3) throw std::invalid_argument("sequence enumeration limited to n <= 3");
    const int d = 2 * n;
    std::vector<CosetSequence> out;
    CosetSequence cur;
    cur.n = n;
    cur.partner.assign(d, 0);
    cur.diag_sign.assign(d, 0);

    auto rec = [&](auto&& self, int plus, int minus) -> void {
        int i = 0;
        while (i < d && cur.partner[i] != 0) ++i;
        if (i == d) {
            if (plus == minus) out.push_back(cur);
            return;
        }
        for (int j = i + 1; j < d; ++j) {
            if (cur.partner[j] != 0) continue;
            cur.partner[i] = j + 1;
            cur.partner[j] = i + 1;
            self(self, plus, minus);
            cur.partner[i] = cur.partner[j] = 0;
        }
        if (!offdiag_only) {
            cur.partner[i] = i + 1;
            cur.diag_sign[i] = 1;
            self(self, plus + 1, minus);
            cur.diag_sign[i] = -1;
            self(self, plus, minus + 1);
            cur.partner[i] = 0;
            cur.diag_sign[i] = 0;
        }
    };
    rec(rec, 0, 0);
    return out;
}

struct CosetRepresentative {
    Permutation w;      // w_N
    Eigen::MatrixXd a;  // a_N, orthogonal
    Eigen::MatrixXd x;  // x_N = a_N w_N
};

/// w_N is the lexicographically smallest permutation satisfying the two sign
/// conditions on w_N eps w_N^{-1}; a_N places the plane rotation
/// (1/sqrt2) [[1,-1],[1,1]] on every pair and fixes the signed slots.
inline CosetRepresentative coset_representative(const CosetSequence& seq) {
    seq.validate();
    const int d = 2 * seq.n;
    std::vector<int> plus, minus;
    for (int i = 1; i <= d; ++i) (seq.slot_sign(i) > 0 ? plus : minus).push_back(i);

    CosetRepresentative rep;
    rep.w.assign(d, 0);
    for (std::size_t k = 0; k < plus.size(); ++k) rep.w[2 * k] = plus[k];
    for (std::size_t k = 0; k < minus.size(); ++k) rep.w[2 * k + 1] = minus[k];

    rep.a = Eigen::MatrixXd::Identity(d, d);
    const double r = 1.0 / std::sqrt(2.0);
    for (int i = 1; i <= d; ++i) {
        int j = seq.partner[i - 1];
        if (j > i) {
            rep.a(i - 1, i - 1) = r;
            rep.a(i - 1, j - 1) = -r;
            rep.a(j - 1, i - 1) = r;
            rep.a(j - 1, j - 1) = r;
        }
    }
    rep.x = rep.a * permutation_matrix(rep.w);
    return rep;
}

namespace detail {

inline double real_frobenius(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a.adjoint() * b).trace().real();
}

/// Strictly-lower-triangular (complex) part, the residual of projecting onto
/// the Borel subalgebra.
inline Eigen::MatrixXcd lower_residual(const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
    for (int r = 1; r < m.rows(); ++r)
        for (int c = 0; c < r; ++c) out(r, c) = m(r, c);
    return out;
}

inline Eigen::VectorXd realify(const Eigen::MatrixXcd& m) {
    const int d = static_cast<int>(m.rows());
    Eigen::VectorXd v(2 * d * d);
    int k = 0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            v(k++) = m(r, c).real();
            v(k++) = m(r, c).imag();
        }
    return v;
}

}  // namespace detail

/// Real-orthonormal basis of the realified complex upper-triangular algebra.
inline std::vector<Eigen::MatrixXcd> borel_basis(int n) {
    const int d = 2 * n;
    std::vector<Eigen::MatrixXcd> basis;
    basis.reserve(d * (d + 1));
    for (int r = 0; r < d; ++r)
        for (int c = r; c < d; ++c) {
            Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
            e(r, c) = 1.0;
            basis.push_back(e);
            e(r, c) = std::complex<double>(0.0, 1.0);
            basis.push_back(e);
        }
    return basis;
}

/// Real basis of Lie(B) cap Ad(x_N) h', obtained by intersecting the
/// conjugated block-diagonal algebra with the upper-triangular condition via
/// an SVD nullspace.  Throws if a singular value falls in the ambiguous band.
inline std::vector<Eigen::MatrixXcd> stabilizer_basis(const CosetSequence& seq) {
    seq.validate();
    const int n = seq.n;
    const int d = 2 * n;
    const CosetRepresentative rep = coset_representative(seq);
    const Permutation w = weyl_w(n);
    const Eigen::MatrixXcd xm = rep.x.cast<std::complex<double>>();

    // real-orthonormal spanning set of Ad(x_N) h', h' = Ad(w) (gl_n + gl_n)
    std::vector<Eigen::MatrixXcd> span;
    span.reserve(4 * n * n * 2);
    for (int r = 1; r <= d; ++r)
        for (int c = 1; c <= d; ++c) {
            const bool in_block = (r <= n && c <= n) || (r > n && c > n);
            if (!in_block) continue;
            Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
            e(w[r - 1] - 1, w[c - 1] - 1) = 1.0;
            span.push_back(xm * e * xm.transpose());
            e(w[r - 1] - 1, w[c - 1] - 1) = std::complex<double>(0.0, 1.0);
            span.push_back(xm * e * xm.transpose());
        }

    const int cols = static_cast<int>(span.size());
    Eigen::MatrixXd residuals(2 * d * d, cols);
    for (int k = 0; k < cols; ++k)
        residuals.col(k) = detail::realify(detail::lower_residual(span[k]));

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(residuals, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int null_dim = 0;
    for (int k = 0; k < sv.size(); ++k) {
        if (sv(k) > 1e-8 && sv(k) < 1e-4)
            throw std::runtime_error("ambiguous rank in stabilizer intersection");
        if (sv(k) <= 1e-8) ++null_dim;
    }
    null_dim += cols - static_cast<int>(sv.size());  // columns beyond min(rows, cols)

    std::vector<Eigen::MatrixXcd> basis;
    basis.reserve(null_dim);
    const Eigen::MatrixXd v = svd.matrixV();
    for (int j = cols - null_dim; j < cols; ++j) {
        Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(d, d);
        for (int k = 0; k < cols; ++k) b += v(k, j) * span[k];
        basis.push_back(b);
    }
    return basis;
}

/// Left modular character |det Ad(m)| on the real span of `basis`.  The
/// element must normalize the span within a 1e-8 residual.
inline double modular_character(const std::vector<Eigen::MatrixXcd>& basis,
                                const Eigen::MatrixXcd& m) {
    if (basis.empty()) return 1.0;
    const int dim = static_cast<int>(basis.size());
    Eigen::MatrixXd ad(dim, dim);
    const Eigen::MatrixXcd minv = m.inverse();
    for (int k = 0; k < dim; ++k) {
        Eigen::MatrixXcd image = m * basis[k] * minv;
        Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
        for (int j = 0; j < dim; ++j) {
            double coord = detail::real_frobenius(basis[j], image);
            ad(j, k) = coord;
            recon += coord * basis[j];
        }
        double residual = (image - recon).norm();
        if (residual > 1e-8 * std::max(1.0, image.norm()))
            throw std::runtime_error("element does not normalize the subalgebra");
    }
    return std::abs(ad.determinant());
}

/// Random element of the diagonal subgroup M_N: each pair {i,j} shares one
/// value e^{x + i theta}, x uniform in [-1,1], theta uniform in [0, 2pi).
inline Eigen::MatrixXcd sample_m_element(const CosetSequence& seq, std::uint64_t seed) {
    const int d = 2 * seq.n;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i <= d; ++i) {
        int j = seq.partner[i - 1];
        if (j < i) continue;  // value assigned with the partner
        std::complex<double> v = std::exp(std::complex<double>(unit(rng), angle(rng)));
        m(i - 1, i - 1) = v;
        if (j > i) m(j - 1, j - 1) = v;
    }
    return m;
}

/// |delta_B(m)^{-1/2} delta_N(m) - 1| <= tol over sampled m in M_N.
inline CongruenceVerdict delta_triviality_check(const CosetSequence& seq, int samples,
                                                std::uint64_t seed, double tol = 1e-9) {
    seq.validate();
    if (!seq.offdiag_only())
        throw std::invalid_argument("triviality check applies to offdiagonal-only sequences");
    const auto stab = stabilizer_basis(seq);
    const auto borel = borel_basis(seq.n);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        Eigen::MatrixXcd m = sample_m_element(seq, seed + static_cast<std::uint64_t>(s));
        double db = modular_character(borel, m);
        double dn = modular_character(stab, m);
        worst = std::max(worst, std::abs(dn / std::sqrt(db) - 1.0));
    }
    CongruenceVerdict v;
    v.max_abs_error = worst;
    v.samples_used = samples;
    v.status = (worst <= tol) ? CheckStatus::numeric_pass : CheckStatus::fail;
    return v;
}

}  // namespace gl2n
