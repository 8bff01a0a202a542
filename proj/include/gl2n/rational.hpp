#pragma once

// Exact Gaussian-rational scalar a + b*i with GMP-backed rational parts.
// GMP keeps every mpq_class in lowest terms with a positive denominator,
// which is exactly the canonical form required of coefficients.

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace gl2n {

class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im = mpq_class(0))
        : re_(std::move(re)), im_(std::move(im)) {}

    /// The imaginary unit.
    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    /// Parse from decimal numerator/denominator strings, e.g. ("-3", "2").
    static mpq_class rational_from_strings(const std::string& num, const std::string& den) {
        if (den.empty() || num.empty())
            throw std::invalid_argument("empty rational component");
        mpq_class q(num + "/" + den);
        if (q.get_den() == 0)
            throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
        if (norm == 0) throw std::domain_error("division by zero");
        mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
        mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    mpq_class re_, im_;
};

}  // namespace gl2n
