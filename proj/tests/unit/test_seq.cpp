#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "lethargy/common.hpp"
#include "lethargy/seq.hpp"

using namespace lethargy;

namespace {

NullSequence random_null(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    double x = rng.uniform(0.5, 2.0);
    for (auto& e : v) {
        e = x;
        // occasional plateaus and cliffs
        double u = rng.uniform();
        if (u < 0.2) continue;
        x *= u < 0.3 ? 0.05 : rng.uniform(0.5, 1.0);
    }
    return NullSequence(v);
}

IndexMap random_h(Rng& rng, std::size_t n) {
    IndexMap h;
    h.h.resize(n);
    std::size_t extra = rng.index(4);
    for (std::size_t i = 0; i < n; ++i) h.h[i] = rng.uniform() < 0.3 ? 2 * i + extra : i + rng.index(extra + 1);
    return h;
}

}  // namespace

TEST_SUITE("seq") {

TEST_CASE("majorant-postconditions-randomized") {
    Rng rng(2024);
    std::size_t checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t N = 1024;
        NullSequence eps = random_null(rng, N);
        IndexMap h = random_h(rng, N);
        NullSequence xi = lethargy_majorant(eps, h);
        REQUIRE(xi.size() == N);
        CHECK(is_nonincreasing(xi.values));
        for (std::size_t n = 0; n < N; ++n) {
            REQUIRE(xi[n] >= eps[n]);
            if (h(n) < N) REQUIRE(xi[n] <= 2.0 * xi[h(n)] * (1 + 1e-15));
        }
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("majorant-identity-map-halves-at-most") {
    // h(n) = n: blocks have length n+1 and the value may halve per block.
    NullSequence eps = geometric_sequence(64, 0.1);
    IndexMap h;
    for (std::size_t n = 0; n < 64; ++n) h.h.push_back(n);
    NullSequence xi = lethargy_majorant(eps, h);
    for (std::size_t n = 0; n + 1 < 64; ++n) CHECK(xi[n + 1] >= xi[n] / 2.0);
    CHECK(xi.values.back() > 0.0);
    CHECK(xi.tail.kind == TailModel::Kind::geometric);
}

TEST_CASE("majorant-errors") {
    CHECK_THROWS_AS(lethargy_majorant(NullSequence({1.0, 2.0}), IndexMap{{0, 1}}), ValidationError);
    CHECK_THROWS_AS(lethargy_majorant(NullSequence({1.0, 0.5}), IndexMap{{0, 0}}), ValidationError);
    CHECK_THROWS_AS(lethargy_majorant(NullSequence({1.0, 0.5}), IndexMap{{5, 6}}), InsufficientWindow);
    CHECK_THROWS_AS(lethargy_majorant(NullSequence(), IndexMap{}), InsufficientWindow);
}

TEST_CASE("convex-majorant-properties") {
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t N = 2 + rng.index(200);
        NullSequence eps = random_null(rng, N);
        NullSequence xi = convex_majorant(eps);
        REQUIRE(xi.size() == N);
        CHECK(is_nonincreasing(xi.values));
        for (std::size_t n = 0; n < N; ++n) REQUIRE(xi[n] >= eps[n]);
        for (std::size_t n = 1; n + 1 < N; ++n)
            REQUIRE(xi[n] <= (xi[n - 1] + xi[n + 1]) / 2.0 + 1e-12 * xi[n - 1]);
        // Idempotence, window-exact up to rounding.
        NullSequence again = convex_majorant(xi);
        for (std::size_t n = 0; n < N; ++n) REQUIRE(again[n] == doctest::Approx(xi[n]).epsilon(1e-12));
        // Oracle for the first value: any convex chain through (M, 0) above eps
        // has f(0) >= max_j eps_j M / (M - j), and the chord attains it.
        const double M = 4.0 * static_cast<double>(N);
        double f0 = 0.0;
        for (std::size_t j = 0; j < N; ++j) f0 = std::max(f0, eps[j] * M / (M - static_cast<double>(j)));
        CHECK(xi[0] == doctest::Approx(f0).epsilon(1e-12));
    }
}

TEST_CASE("convex-majorant-of-convex-input-is-close-to-input") {
    // 1/(n+1) is convex; the anchored chain lies above and agrees where the chord constraint is slack.
    NullSequence eps = harmonic_sequence(32);
    NullSequence xi = convex_majorant(eps);
    CHECK(xi[0] == doctest::Approx(1.0));
    for (std::size_t n = 0; n < 32; ++n) CHECK(xi[n] >= eps[n]);
}

TEST_CASE("rearrangement") {
    std::vector<double> v{0.3, 1.0, 0.3, 0.0, 2.0, 0.3};
    NullSequence r = nonincreasing_rearrangement(v);
    CHECK(r.values == std::vector<double>{2.0, 1.0, 0.3, 0.3, 0.3, 0.0});
    auto a = v, b = r.values;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(nonincreasing_rearrangement(r.values).values == r.values);
    CHECK_THROWS_AS(nonincreasing_rearrangement({1.0, -0.1}), ValidationError);
}

TEST_CASE("monotonicity-tolerance") {
    CHECK(is_nonincreasing({1.0, 1.0 + 1e-14, 0.5}));
    CHECK_FALSE(is_nonincreasing({1.0, 1.0 + 1e-9, 0.5}));
}

TEST_CASE("sequence-json") {
    NullSequence g = sequence_from_json({{"rule", "geometric"}, {"length", 5}, {"ratio", 0.5}});
    CHECK(g.values == std::vector<double>{1.0, 0.5, 0.25, 0.125, 0.0625});
    CHECK(g.extended(6) == doctest::Approx(0.015625));
    NullSequence back = sequence_from_json(to_json(g));
    CHECK(back.values == g.values);
    CHECK(back.tail.ratio == g.tail.ratio);
    CHECK_THROWS_AS(sequence_from_json(nlohmann::json::array({1.0, 2.0})), ValidationError);
    CHECK_THROWS_AS(sequence_from_json({{"rule", "nope"}}), ValidationError);
    CHECK(to_csv(harmonic_sequence(2)).rfind("n,value\n0,1\n", 0) == 0);
}

}
