#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "gl2n/cosets.hpp"

using namespace gl2n;

namespace {

CosetSequence pairing(int n, std::vector<std::pair<int, int>> pairs) {
    CosetSequence seq;
    seq.n = n;
    seq.partner.assign(2 * n, 0);
    seq.diag_sign.assign(2 * n, 0);
    for (auto [a, b] : pairs) {
        seq.partner[a - 1] = b;
        seq.partner[b - 1] = a;
    }
    seq.validate();
    return seq;
}

Eigen::MatrixXd mat4(std::initializer_list<double> vals) {
    Eigen::MatrixXd m(4, 4);
    int k = 0;
    for (double v : vals) m(k / 4, k % 4) = v, ++k;
    return m;
}

}  // namespace

TEST_CASE("weyl element") {
    CHECK(weyl_w(1) == Permutation{1, 2});
    CHECK(weyl_w(2) == Permutation{1, 3, 2, 4});

    for (int n = 1; n <= 3; ++n) {
        // w blockdiag(I, -I) w^{-1} = eps
        Eigen::MatrixXd w = permutation_matrix(weyl_w(n));
        Eigen::MatrixXd half = Eigen::MatrixXd::Identity(2 * n, 2 * n);
        for (int j = n; j < 2 * n; ++j) half(j, j) = -1.0;
        CHECK((w * half * w.transpose() - epsilon_matrix(n)).cwiseAbs().maxCoeff() < 1e-15);
    }

    // Ad(w) of the block algebra has the checkerboard sparsity at n = 2
    Eigen::MatrixXd w = permutation_matrix(weyl_w(2));
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(4, 4);
    h.topLeftCorner(2, 2).setConstant(1.0);
    h.bottomRightCorner(2, 2).setConstant(1.0);
    Eigen::MatrixXd moved = w * h * w.transpose();
    Eigen::MatrixXd expect = mat4({1, 0, 1, 0,
                                   0, 1, 0, 1,
                                   1, 0, 1, 0,
                                   0, 1, 0, 1});
    CHECK((moved - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("sequence enumeration") {
    CHECK(enumerate_sequences(1, true).size() == 1);
    CHECK(enumerate_sequences(2, true).size() == 3);
    CHECK(enumerate_sequences(3, true).size() == 15);
    CHECK(enumerate_sequences(1, false).size() == 3);  // one pairing + two signed splits
    CHECK_THROWS_AS(enumerate_sequences(4, true), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_sequences(0, true), std::invalid_argument);

    // signed fixed points must balance and must carry a sign
    CosetSequence bad;
    bad.n = 1;
    bad.partner = {1, 2};
    bad.diag_sign = {1, 1};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.diag_sign = {1, 0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    auto seqs = enumerate_sequences(2, true);
    CHECK(seqs[0].partner == std::vector<int>{2, 1, 4, 3});
    CHECK(seqs[1].partner == std::vector<int>{3, 4, 1, 2});
    CHECK(seqs[2].partner == std::vector<int>{4, 3, 2, 1});

    // json round trip
    for (const auto& s : seqs) {
        auto back = sequence_from_json(sequence_to_json(s));
        CHECK(back.partner == s.partner);
        CHECK(back.diag_sign == s.diag_sign);
    }
}

TEST_CASE("representatives match the worked 4x4 cases") {
    const double r = 1.0 / std::sqrt(2.0);
    auto seqs = enumerate_sequences(2, true);

    auto rep1 = coset_representative(seqs[0]);
    CHECK((permutation_matrix(rep1.w) - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((rep1.a - mat4({r, -r, 0, 0,
                          r, r, 0, 0,
                          0, 0, r, -r,
                          0, 0, r, r})).cwiseAbs().maxCoeff() < 1e-15);

    Eigen::MatrixXd swap23 = mat4({1, 0, 0, 0,
                                   0, 0, 1, 0,
                                   0, 1, 0, 0,
                                   0, 0, 0, 1});
    auto rep2 = coset_representative(seqs[1]);
    CHECK((permutation_matrix(rep2.w) - swap23).cwiseAbs().maxCoeff() == 0.0);
    CHECK((rep2.a - mat4({r, 0, -r, 0,
                          0, r, 0, -r,
                          r, 0, r, 0,
                          0, r, 0, r})).cwiseAbs().maxCoeff() < 1e-15);

    auto rep3 = coset_representative(seqs[2]);
    CHECK((permutation_matrix(rep3.w) - swap23).cwiseAbs().maxCoeff() == 0.0);
    CHECK((rep3.a - mat4({r, 0, 0, -r,
                          0, r, -r, 0,
                          0, r, r, 0,
                          r, 0, 0, r})).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("representative invariants for every sequence") {
    for (int n = 1; n <= 3; ++n)
        for (bool offdiag : {true, false})
            for (const auto& seq : enumerate_sequences(n, offdiag)) {
                auto rep = coset_representative(seq);
                const int d = 2 * n;

                // orthogonality of x_N
                CHECK((rep.x * rep.x.transpose() - Eigen::MatrixXd::Identity(d, d))
                          .cwiseAbs().maxCoeff() < 1e-12);

                // the two sign conditions on w_N eps w_N^{-1}
                Eigen::MatrixXd wm = permutation_matrix(rep.w);
                Eigen::MatrixXd conj = wm * epsilon_matrix(n) * wm.transpose();
                for (int i = 1; i <= d; ++i) {
                    CHECK(std::abs(conj(i - 1, i - 1) - seq.slot_sign(i)) < 1e-15);
                    for (int j = 1; j <= d; ++j)
                        if (i != j) CHECK(std::abs(conj(i - 1, j - 1)) < 1e-15);
                }
            }
}

TEST_CASE("conjugation lands the diagonal entries as predicted") {
    for (const auto& seq : enumerate_sequences(2, true)) {
        auto rep = coset_representative(seq);
        Eigen::MatrixXcd m = sample_m_element(seq, 99);
        Eigen::MatrixXcd xc = rep.x.cast<std::complex<double>>();
        Eigen::MatrixXcd moved = xc.inverse() * m * xc;
        // diagonal, with position c holding the entry from slot w_N(c)
        for (int c = 1; c <= 4; ++c) {
            for (int rr = 1; rr <= 4; ++rr)
                if (rr != c) CHECK(std::abs(moved(rr - 1, c - 1)) < 1e-10);
            CHECK(std::abs(moved(c - 1, c - 1) - m(rep.w[c - 1] - 1, rep.w[c - 1] - 1)) < 1e-10);
            // odd positions carry + slots (the first block), even positions - slots
            CHECK(seq.slot_sign(rep.w[c - 1]) == (c % 2 == 1 ? 1 : -1));
        }
    }
}

TEST_CASE("stabilizer bases match the worked cases") {
    auto seqs = enumerate_sequences(2, true);

    auto b1 = stabilizer_basis(seqs[0]);
    CHECK(b1.size() == 8);  // a, b, f, d complex parameters
    auto b2 = stabilizer_basis(seqs[1]);
    CHECK(b2.size() == 6);  // a, b, d complex parameters
    auto b3 = stabilizer_basis(seqs[2]);
    CHECK(b3.size() == 4);  // a, d complex parameters

    // every basis matrix is upper triangular
    for (const auto& basis : {b1, b2, b3})
        for (const auto& m : basis)
            for (int rr = 1; rr < 4; ++rr)
                for (int c = 0; c < rr; ++c) CHECK(std::abs(m(rr, c)) < 1e-10);

    // case 1 shape: a a on the diagonal head, d d on the tail, b/f cross ties
    for (const auto& m : b1) {
        CHECK(std::abs(m(0, 0) - m(1, 1)) < 1e-10);
        CHECK(std::abs(m(2, 2) - m(3, 3)) < 1e-10);
        CHECK(std::abs(m(0, 2) - m(1, 3)) < 1e-10);
        CHECK(std::abs(m(0, 3) - m(1, 2)) < 1e-10);
        CHECK(std::abs(m(0, 1)) < 1e-10);
    }

    // case 2 shape: entries tied across the two diagonal blocks
    for (const auto& m : b2) {
        CHECK(std::abs(m(0, 0) - m(2, 2)) < 1e-10);
        CHECK(std::abs(m(0, 1) - m(2, 3)) < 1e-10);
        CHECK(std::abs(m(1, 1) - m(3, 3)) < 1e-10);
        CHECK(std::abs(m(0, 2)) < 1e-10);
        CHECK(std::abs(m(0, 3)) < 1e-10);
        CHECK(std::abs(m(1, 2)) < 1e-10);
        CHECK(std::abs(m(1, 3)) < 1e-10);
    }

    // case 3 shape: diagonal with (1,1)=(4,4) and (2,2)=(3,3)
    for (const auto& m : b3) {
        CHECK(std::abs(m(0, 0) - m(3, 3)) < 1e-10);
        CHECK(std::abs(m(1, 1) - m(2, 2)) < 1e-10);
        for (int rr = 0; rr < 4; ++rr)
            for (int c = 0; c < 4; ++c)
                if (rr != c) CHECK(std::abs(m(rr, c)) < 1e-10);
    }
}

TEST_CASE("modular character") {
    // identity maps to 1
    auto seqs = enumerate_sequences(2, true);
    auto basis = stabilizer_basis(seqs[1]);
    CHECK(std::abs(modular_character(basis, Eigen::MatrixXcd::Identity(4, 4)) - 1.0) < 1e-12);

    // case 2 with m = diag(a, d, a, d): delta = |a/d|^2
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
    std::complex<double> a(1.3, 0.4), dd(0.7, -0.2);
    m(0, 0) = a; m(1, 1) = dd; m(2, 2) = a; m(3, 3) = dd;
    double want = std::norm(a / dd);
    CHECK(std::abs(modular_character(basis, m) - want) < 1e-10 * want);

    // delta_B on the torus against the closed form
    for (int n = 1; n <= 2; ++n) {
        auto borel = borel_basis(n);
        const int d = 2 * n;
        Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(d, d);
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> unit(0.5, 2.0);
        for (int j = 0; j < d; ++j) t(j, j) = std::complex<double>(unit(rng), unit(rng));
        double got = modular_character(borel, t);
        double closed = 1.0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) closed *= std::norm(t(i, i) / t(j, j));
        CHECK(std::abs(got - closed) < 1e-8 * closed);
    }

    // multiplicative on commuting elements of M_N
    for (const auto& seq : enumerate_sequences(2, true)) {
        auto b = stabilizer_basis(seq);
        Eigen::MatrixXcd m1 = sample_m_element(seq, 123), m2 = sample_m_element(seq, 456);
        double lhs = modular_character(b, m1 * m2);
        double rhs = modular_character(b, m1) * modular_character(b, m2);
        CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, rhs));
    }

    // a non-normalizing element is rejected
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(4, 4);
    bad(3, 0) = 2.0;  // lower-triangular direction
    CHECK_THROWS_AS(modular_character(basis, bad), std::runtime_error);
}

TEST_CASE("delta triviality") {
    for (const auto& seq : enumerate_sequences(2, true)) {
        auto v = delta_triviality_check(seq, 20, 42);
        CHECK(v.status == CheckStatus::numeric_pass);
    }
    for (const auto& seq : enumerate_sequences(3, true)) {
        auto v = delta_triviality_check(seq, 10, 42);
        CHECK(v.status == CheckStatus::numeric_pass);
    }

    // negative control: delta_B alone is not trivial on the torus
    auto seq = enumerate_sequences(2, true)[1];
    auto borel = borel_basis(2);
    Eigen::MatrixXcd m = sample_m_element(seq, 7);
    CHECK(std::abs(std::pow(modular_character(borel, m), -0.5) - 1.0) > 1e-9);
}
