#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse exact polynomial ring over Gaussian rationals in the matrix
 *        entry variables z_{r,c} and their formal conjugates zbar_{r,c}.
 *
 * The ambient size is 2n x 2n for a half-size parameter n.  All arithmetic
 * is exact; rounding only happens in evaluate(), which maps a polynomial to
 * a complex double at a concrete matrix.
 */

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gl2n/rational.hpp"

namespace gl2n {

enum class VarKind : std::uint8_t { holo = 0, anti = 1 };

// Canonical variable priority: all z before all zbar, then row-major.
struct VariableId {
    VarKind kind;
    std::uint16_t row;  // 1-based
    std::uint16_t col;  // 1-based

    friend auto operator<=>(const VariableId&, const VariableId&) = default;
};

inline VariableId z_var(int row, int col) {
    return {VarKind::holo, static_cast<std::uint16_t>(row), static_cast<std::uint16_t>(col)};
}
inline VariableId zbar_var(int row, int col) {
    return {VarKind::anti, static_cast<std::uint16_t>(row), static_cast<std::uint16_t>(col)};
}
inline VariableId conj_var(VariableId v) {
    v.kind = (v.kind == VarKind::holo) ? VarKind::anti : VarKind::holo;
    return v;
}

/// Exponent map of one monomial; entries sorted by variable, exponents > 0.
class Monomial {
public:
    using Entry = std::pair<VariableId, int>;

    Monomial() = default;

    static Monomial variable(VariableId v, int exp = 1) {
        Monomial m;
        if (exp < 0) throw std::invalid_argument("negative exponent");
        if (exp > 0) m.entries_.emplace_back(v, exp);
        return m;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : entries_) d += e;
        return d;
    }

    int exponent(VariableId v) const {
        for (const auto& [w, e] : entries_)
            if (w == v) return e;
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.entries_.reserve(entries_.size() + o.entries_.size());
        auto a = entries_.begin(), b = o.entries_.begin();
        while (a != entries_.end() && b != o.entries_.end()) {
            if (a->first < b->first) r.entries_.push_back(*a++);
            else if (b->first < a->first) r.entries_.push_back(*b++);
            else {
                r.entries_.emplace_back(a->first, a->second + b->second);
                ++a; ++b;
            }
        }
        r.entries_.insert(r.entries_.end(), a, entries_.end());
        r.entries_.insert(r.entries_.end(), b, o.entries_.end());
        return r;
    }

    bool divisible_by(const Monomial& g) const {
        auto a = entries_.begin();
        for (const auto& [v, e] : g.entries_) {
            while (a != entries_.end() && a->first < v) ++a;
            if (a == entries_.end() || !(a->first == v) || a->second < e) return false;
        }
        return true;
    }

    /// Quotient this / g; precondition: divisible_by(g).
    Monomial divided_by(const Monomial& g) const {
        Monomial r;
        r.entries_.reserve(entries_.size());
        auto b = g.entries_.begin();
        for (const auto& [v, e] : entries_) {
            if (b != g.entries_.end() && b->first == v) {
                if (e - b->second > 0) r.entries_.emplace_back(v, e - b->second);
                ++b;
            } else {
                r.entries_.emplace_back(v, e);
            }
        }
        return r;
    }

    /// Change exponent of one variable by delta (may remove or insert it).
    Monomial shifted(VariableId v, int delta) const {
        Monomial r;
        r.entries_.reserve(entries_.size() + 1);
        bool placed = false;
        for (const auto& [w, e] : entries_) {
            if (w == v) {
                int ne = e + delta;
                if (ne < 0) throw std::invalid_argument("exponent below zero");
                if (ne > 0) r.entries_.emplace_back(w, ne);
                placed = true;
            } else {
                if (!placed && v < w && delta != 0) {
                    r.entries_.emplace_back(v, delta);
                    placed = true;
                }
                r.entries_.emplace_back(w, e);
            }
        }
        if (!placed && delta != 0) {
            if (delta < 0) throw std::invalid_argument("exponent below zero");
            r.entries_.emplace_back(v, delta);
        }
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;
};

/// Graded lexicographic order, greater-first, so a term map iterates from the
/// leading monomial down.  Lex tie-break walks variables in canonical priority.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        auto ia = a.entries().begin(), ib = b.entries().begin();
        while (ia != a.entries().end() && ib != b.entries().end()) {
            if (ia->first < ib->first) return true;   // a has the earlier variable
            if (ib->first < ia->first) return false;
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia; ++ib;
        }
        return ia != a.entries().end();
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;

    explicit Polynomial(int half_size) : n_(half_size) {
        if (half_size < 1) throw std::invalid_argument("half size must be >= 1");
    }

    static Polynomial zero(int n) { return Polynomial(n); }

    static Polynomial constant(int n, GaussianRational c) {
        Polynomial p(n);
        p.add_term(Monomial(), std::move(c));
        return p;
    }

    static Polynomial variable(int n, VariableId v) {
        Polynomial p(n);
        p.check_var(v);
        p.add_term(Monomial::variable(v), GaussianRational(1));
        return p;
    }

    int half_size() const { return n_; }
    int matrix_size() const { return 2 * n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int degree() const {  // degree of 0 reported as -1
        return terms_.empty() ? -1 : terms_.begin()->first.degree();
    }

    /// Accumulate one term, keeping the map free of zero coefficients.
    void add_term(const Monomial& m, GaussianRational c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const GaussianRational& s, const Polynomial& p) {
        Polynomial r(p.n_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
        return r;
    }

    Polynomial pow(unsigned exp) const {
        Polynomial acc = constant(n_, GaussianRational(1));
        Polynomial base = *this;
        while (exp) {
            if (exp & 1u) acc = acc * base;
            exp >>= 1u;
            if (exp) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Formal partial derivative; z and zbar variables are independent.
    Polynomial derivative(VariableId v) const {
        check_var(v);
        Polynomial r(n_);
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (e > 0) r.add_term(m.shifted(v, -1), GaussianRational(e) * c);
        }
        return r;
    }

    /// Ring homomorphism induced by a variable assignment.  Variables without
    /// an image map to themselves.  All images must share this ambient size.
    Polynomial substitute(const std::map<VariableId, Polynomial>& images) const {
        for (const auto& [v, q] : images)
            if (q.n_ != n_) throw std::invalid_argument("substitution image ambient size mismatch");
        Polynomial r(n_);
        for (const auto& [m, c] : terms_) {
            Polynomial t = constant(n_, c);
            for (const auto& [v, e] : m.entries()) {
                auto it = images.find(v);
                if (it == images.end()) {
                    t = t * variable(n_, v).pow(static_cast<unsigned>(e));
                } else {
                    if (it->second.is_zero()) { t = zero(n_); break; }
                    t = t * it->second.pow(static_cast<unsigned>(e));
                }
            }
            r += t;
        }
        return r;
    }

    /// Rebuild the polynomial in a (possibly different-size) ring by relabeling
    /// every variable through `fn`.  Used for block-wise variable renaming.
    template <class Fn>
    Polynomial map_variables(int target_half_size, Fn&& fn) const {
        Polynomial r(target_half_size);
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            for (const auto& [v, e] : m.entries()) nm = nm.times(Monomial::variable(fn(v), e));
            r.add_term(nm, c);
        }
        return r;
    }

    /// Evaluate at a concrete complex matrix: z_{r,c} -> Z(r,c) and
    /// zbar_{r,c} -> conj(Z(r,c)).  M needs rows()/cols() and (i,j) access.
    template <class M>
    std::complex<double> evaluate(const M& Z) const {
        if (static_cast<int>(Z.rows()) != 2 * n_ || static_cast<int>(Z.cols()) != 2 * n_)
            throw std::invalid_argument("matrix dimension mismatch");
        std::complex<double> acc{0.0, 0.0};
        for (const auto& [m, c] : terms_) {
            std::complex<double> t{1.0, 0.0};
            for (const auto& [v, e] : m.entries()) {
                std::complex<double> base = Z(v.row - 1, v.col - 1);
                if (v.kind == VarKind::anti) base = std::conj(base);
                for (int k = 0; k < e; ++k) t *= base;
            }
            acc += c.to_complex() * t;
        }
        return acc;
    }

    /// 1-norm of coefficients as a double (sum of complex moduli).
    double coeff_norm1() const {
        double s = 0.0;
        for (const auto& [m, c] : terms_) s += std::abs(c.to_complex());
        return s;
    }

    void check_var(VariableId v) const {
        if (v.row < 1 || v.col < 1 || v.row > 2 * n_ || v.col > 2 * n_)
            throw std::out_of_range("variable index outside the 2n x 2n grid");
    }

private:
    void check_same(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("ambient size mismatch");
    }

    int n_;
    TermMap terms_;
};

}  // namespace gl2n
