#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gl2n/weights.hpp"

using namespace gl2n;

TEST_CASE("purity constant") {
    CHECK(purity_constant({{3, 1}, {2, 0}}) == 3);
    CHECK_FALSE(purity_constant({{3, 1}, {2, 1}}).has_value());
    CHECK(purity_constant({{0, 0}, {0, 0}}) == 0);
    CHECK_THROWS_AS(purity_constant({{1, 2}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("induced exponents") {
    CHECK(induced_exponents({{3, 1}, {2, 0}}, 3) == std::vector<int>{4, -2});
    CHECK(induced_exponents({{0, 0}, {0, 0}}, 0) == std::vector<int>{1, -1});

    // strictly decreasing for random dominant weights
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> step(0, 3);
    std::uniform_int_distribution<int> start(-5, 5);
    for (int t = 0; t < 100; ++t) {
        int d = 2 * (1 + t % 3);
        std::vector<int> nu(d);
        nu[0] = start(rng);
        for (int j = 1; j < d; ++j) nu[j] = nu[j - 1] - step(rng);
        HighestWeight w{nu, nu};
        auto l = induced_exponents(w, 0);
        for (int j = 1; j < d; ++j) CHECK(l[j - 1] > l[j]);
    }
}

TEST_CASE("pairing classification") {
    CHECK(shalika_classify({4, -2}) == 1);
    CHECK(shalika_classify({5, 3, -1, -3}) == 1);
    CHECK_FALSE(shalika_classify({5, 1, -1, -3}).has_value());
    CHECK_THROWS_AS(shalika_classify({1, 2}), std::invalid_argument);

    CHECK(shalika_brute({5, 3, -1, -3}) == 1);
    CHECK(shalika_brute({1, -1}) == 0);
    CHECK_FALSE(shalika_brute({5, 1, -1, -3}).has_value());
    CHECK_THROWS_AS(shalika_brute(std::vector<int>(14, 0)), std::invalid_argument);

    // agreement on random strictly decreasing sequences
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> gap(1, 3);
    std::uniform_int_distribution<int> start(-8, 8);
    for (int t = 0; t < 500; ++t) {
        int d = 2 * (1 + t % 3);
        std::vector<int> l(d);
        l[0] = start(rng) + 3 * d;
        for (int j = 1; j < d; ++j) l[j] = l[j - 1] - gap(rng);
        auto a = shalika_classify(l);
        auto b = shalika_brute(l);
        CHECK(a == b);
    }
}

TEST_CASE("exhaustive classify-brute agreement on the [-6,6] grid") {
    // all strictly decreasing sequences with entries in [-6, 6], lengths 2..6
    for (int len : {2, 4, 6}) {
        std::vector<int> idx(len);
        // first strictly decreasing subset
        for (int i = 0; i < len; ++i) idx[i] = 6 - i;
        long disagreements = 0;
        while (true) {
            auto a = shalika_classify(idx);
            auto b = shalika_brute(idx);
            if (a != b) ++disagreements;
            // next strictly decreasing sequence over [-6, 6]
            int i = len - 1;
            while (i >= 0 && idx[i] == -6 + (len - 1 - i)) --i;
            if (i < 0) break;
            --idx[i];
            for (int j = i + 1; j < len; ++j) idx[j] = idx[i] - (j - i);
        }
        CHECK(disagreements == 0);
    }
}

TEST_CASE("minimal K-type weight") {
    CHECK(minimal_ktype_weight({3}, 1) == std::vector<int>{4, -2});
    CHECK(minimal_ktype_weight({2, 1}, 0) == std::vector<int>{2, 1, -1, -2});
    auto lam = minimal_ktype_weight({5, 3, 1}, -2);
    for (std::size_t i = 1; i < lam.size(); ++i) CHECK(lam[i - 1] >= lam[i]);

    CHECK_THROWS_AS(minimal_ktype_weight({3, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(minimal_ktype_weight({1, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(minimal_ktype_weight({}, 0), std::invalid_argument);
}

TEST_CASE("casimir eigenvalue formula") {
    CHECK(casimir_eigenvalue({1, -1}) == 4);
    CHECK(casimir_eigenvalue({0, 0, 0, 0}) == 0);

    // the fundamental weights: value 4nj - 2j(j-1) for n <= 5
    for (int n = 1; n <= 5; ++n)
        for (int j = 1; j <= n; ++j) {
            std::vector<int> lam(2 * n, 0);
            for (int i = 0; i < j; ++i) {
                lam[i] = 1;
                lam[2 * n - 1 - i] = -1;
            }
            CHECK(casimir_eigenvalue(lam) == 4 * n * j - 2 * j * (j - 1));
        }
}

TEST_CASE("nonvanishing predicate") {
    CHECK(nonvanishing_predicate(2, 1, 3));
    CHECK_FALSE(nonvanishing_predicate(3, 1, 3));
    CHECK(nonvanishing_predicate(-4, 4, 1));
}

TEST_CASE("central character data") {
    CHECK(central_character_data(3, 1, 2) == std::pair<long, long>{6, 4});
    CHECK(central_character_data(0, 0, 5) == std::pair<long, long>{0, 0});
    // per-block character to the n-th power matches the full one
    for (int m = -3; m <= 3; ++m)
        for (int L = -2; L <= 2; ++L)
            for (int n = 1; n <= 4; ++n) {
                auto full = central_character_data(m, L, n);
                auto block = central_character_data(m, L, 1);
                CHECK(full.first == block.first * n);
                CHECK(full.second == block.second * n);
            }
}

TEST_CASE("pipeline round trip") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> gap(1, 3);
    std::uniform_int_distribution<int> level(-3, 3);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + t % 3;
        std::vector<int> N(n);
        N[n - 1] = 1 + gap(rng);
        for (int i = n - 2; i >= 0; --i) N[i] = N[i + 1] + gap(rng);
        const int L = level(rng);
        auto lambda = minimal_ktype_weight(N, L);

        // rebuild the exponents l = (N_1 + L, ..., -N_1 + L) and classify
        std::vector<int> l;
        for (int v : N) l.push_back(v + L);
        for (int i = n - 1; i >= 0; --i) l.push_back(-N[i] + L);
        auto got = shalika_classify(l);
        REQUIRE(got.has_value());
        CHECK(*got == L);

        auto params = classify_exponents(l);
        CHECK(params.has_shalika());
        CHECK(params.N == N);
        CHECK(params.lambda == lambda);
    }

    // reconstruct a highest weight from random (N, L, m) and run the pipeline
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + t % 3;
        const int d = 2 * n;
        std::uniform_int_distribution<int> gap2(1, 2);
        std::vector<int> N(n);
        N[n - 1] = 2 + 2 * gap2(rng);  // all N_j share one parity so nu is integral
        for (int i = n - 2; i >= 0; --i) N[i] = N[i + 1] + 2 * gap2(rng);
        const int L = level(rng);
        std::vector<int> l;
        for (int v : N) l.push_back(v + L);
        for (int i = n - 1; i >= 0; --i) l.push_back(-N[i] + L);
        const int m = ((l[0] + 1) % 2 + 2) % 2 + 2 * level(rng);
        std::vector<int> nu(d), nu_bar(d);
        for (int j = 1; j <= d; ++j) {
            REQUIRE((l[j - 1] - (d + 1 - 2 * j) + m) % 2 == 0);
            nu[j - 1] = (l[j - 1] - (d + 1 - 2 * j) + m) / 2;
        }
        for (int j = 1; j <= d; ++j) nu_bar[j - 1] = m - nu[d - j];
        HighestWeight w{nu, nu_bar};
        CHECK(purity_constant(w) == m);
        CHECK(induced_exponents(w, m) == l);
        auto params = classify_weight(w);
        REQUIRE(params.has_shalika());
        CHECK(*params.L == L);
        CHECK(params.N == N);
    }

    // weight pipeline end to end: nu = (3,1), nubar = (2,0) has m = 3, l = (4,-2)
    auto params = classify_weight({{3, 1}, {2, 0}});
    REQUIRE(params.m.has_value());
    CHECK(*params.m == 3);
    CHECK(params.l == std::vector<int>{4, -2});
    REQUIRE(params.L.has_value());
    CHECK(*params.L == 1);
    CHECK(params.N == std::vector<int>{3});
}
