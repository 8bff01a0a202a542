#pragma once

// Finite-difference oracle for the Lie algebra action: the derivative of
// t -> f(Z exp(tX), conj(Z exp(tX))) at t = 0, approximated by a central
// difference with the matrix exponential.

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "gl2n/polynomial.hpp"

namespace gl2n {

/// Matrix exponential by scaling and squaring of the truncated series.
inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
    const int d = static_cast<int>(a.rows());
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int s = 0;
    while (norm > 0.25) {
        norm *= 0.5;
        ++s;
    }
    Eigen::MatrixXcd b = a / std::pow(2.0, s);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(d, d);
    for (int k = 1; k <= 24; ++k) {
        term = (term * b) / static_cast<double>(k);
        acc += term;
    }
    for (int k = 0; k < s; ++k) acc = acc * acc;
    return acc;
}

constexpr double kFlowStep = 1e-4;

/// Central difference (f(Z exp(hX)) - f(Z exp(-hX))) / (2h).
inline std::complex<double> numeric_flow_derivative(const Polynomial& p,
                                                    const Eigen::MatrixXcd& direction,
                                                    const Eigen::MatrixXcd& at,
                                                    double h = kFlowStep) {
    if (h <= 0.0) throw std::invalid_argument("step must be positive");
    const int d = p.matrix_size();
    if (direction.rows() != d || direction.cols() != d || at.rows() != d || at.cols() != d)
        throw std::invalid_argument("matrix dimension mismatch");
    Eigen::MatrixXcd fwd = at * expm(h * direction);
    Eigen::MatrixXcd bwd = at * expm(-h * direction);
    return (p.evaluate(fwd) - p.evaluate(bwd)) / (2.0 * h);
}

}  // namespace gl2n
