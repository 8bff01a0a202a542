#pragma once

// Seeded Haar-distributed unitary matrices: QR-factor a standard complex
// Gaussian matrix and absorb the phases of R's diagonal into Q.

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace gl2n {

/// Haar unitary of explicit dimension d; deterministic for a fixed seed.
inline Eigen::MatrixXcd haar_unitary_dim(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            double re = gauss(rng);
            double im = gauss(rng);
            g(r, c) = {re, im};
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < d; ++k) {
        std::complex<double> rkk = r(k, k);
        double a = std::abs(rkk);
        q.col(k) *= (a > 0.0) ? rkk / a : 1.0;
    }
    return q;
}

/// Haar unitary of size 2n x 2n.
inline Eigen::MatrixXcd haar_unitary(int n, std::uint64_t seed) {
    return haar_unitary_dim(2 * n, seed);
}

/// Random antihermitian direction with N(0,1) parameter entries.
inline Eigen::MatrixXcd random_antihermitian(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
    for (int r = 0; r < d; ++r) {
        x(r, r) = {0.0, gauss(rng)};
        for (int c = r + 1; c < d; ++c) {
            double a = gauss(rng);
            double b = gauss(rng);
            x(r, c) = {a, b};
            x(c, r) = {-a, b};
        }
    }
    return x;
}

}  // namespace gl2n
