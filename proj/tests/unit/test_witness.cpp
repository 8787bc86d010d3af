#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "lethargy/dyadic.hpp"
#include "lethargy/witness.hpp"

using namespace lethargy;
using nlohmann::json;

namespace {

const WitnessBound* find_bound(const Witness& w, const std::string& tag, std::size_t n) {
    for (const auto& b : w.bounds)
        if (b.tag == tag && b.n == n) return &b;
    return nullptr;
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("c0-equality-tail-oracle") {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        std::size_t N = 1 + rng.index(16);
        std::vector<double> v(N);
        double x = rng.uniform(0.5, 1.5);
        for (auto& e : v) {
            e = x;
            x *= rng.uniform(0.2, 1.0);
        }
        Witness w = witness_c0(NullSequence(v));
        CHECK(w.verified());
        // Tail sup of a non-increasing sequence from index n is eps_n.
        for (std::size_t n = 1; n < N; ++n) {
            const auto* b = find_bound(w, "c0-interleaved-equality", 2 * n - 1);
            REQUIRE(b != nullptr);
            CHECK(std::abs(b->computed - v[n]) <= 1e-12);
            double tail = 0.0;
            for (Eigen::Index i = static_cast<Eigen::Index>(n); i < w.element.re.size(); ++i)
                tail = std::max(tail, std::abs(w.element.re[i]));
            CHECK(tail == v[n]);
        }
    }
}

TEST_CASE("quantizer-witness-pinch") {
    ValueBudget m;  // m(n) = n
    Witness w = witness_quantizer(m, 9);
    CHECK(w.verified());
    for (std::size_t n = 1; n < 9; ++n) {
        const auto* lo = find_bound(w, "quantizer-reciprocal-lower", n);
        REQUIRE(lo != nullptr);
        CHECK(lo->computed >= 1.0 / n - 2e-3);
        CHECK(lo->computed <= 1.0 / n + 1e-12);
    }
}

TEST_CASE("tensor-closed-form") {
    for (std::size_t n = 2; n <= 8; ++n)
        for (const char* norm : {"hs", "op"}) {
            Witness w = witness_tensor(n, norm);
            CHECK(w.verified());
            for (std::size_t k = 0; k < n; ++k) {
                const auto* b = find_bound(w, "tensor-tail-singular-values", k);
                REQUIRE(b != nullptr);
                double expect = std::string(norm) == "hs" ? std::sqrt(double(n - k)) / n : 1.0 / n;
                CHECK(std::abs(b->computed - expect) <= 1e-12);
            }
        }
}

TEST_CASE("orthonormal-nterm-subset-oracle") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t D = n; D <= 12; D += 3) {
            Witness w = witness_orthonormal_nterm(n, D);
            CHECK(w.verified());
            // Keeping any n-1 coordinates leaves at least one 1/n entry; the
            // residual is sqrt(1/n^2) when the kept set is inside the support.
            double best = kInf;
            for (std::uint32_t mask = 0; mask < (1u << D); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - 1) continue;
                double r = 0.0;
                for (std::size_t i = 0; i < D; ++i)
                    if (!(mask >> i & 1u)) r += w.element.re[static_cast<Eigen::Index>(i)] * w.element.re[static_cast<Eigen::Index>(i)];
                best = std::min(best, std::sqrt(r));
            }
            const auto* b = find_bound(w, "orthonormal-nterm-exact", n - 1);
            REQUIRE(b != nullptr);
            CHECK(b->computed == doctest::Approx(best).epsilon(1e-12));
            CHECK(best == doctest::Approx(1.0 / n).epsilon(1e-12));
        }
}

TEST_CASE("haar-bumps-small-budget") {
    Witness w = witness_haar_bumps(2, BasisFamily::monomial, 1.0, 12, 5);
    CHECK(w.verified());
    const auto* b = find_bound(w, "haar-bump-integral", 2);
    REQUIRE(b != nullptr);
    CHECK(b->attempts >= 12);
    CHECK(b->computed > 0.2);
}

TEST_CASE("translates-bound") {
    Witness w = witness_translates(2, 6, 1.0, 200, 3);
    CHECK(w.verified());
    CHECK(w.norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bv-and-ridge-small") {
    Witness bv = witness_bv(1, 6, 2, 1025);
    const auto* unit = find_bound(bv, "bv-unit-norm", 0);
    REQUIRE(unit != nullptr);
    CHECK(unit->verified);
    CHECK(bv.verified());
    Witness ridge = witness_ridge(2, 10, 2, 1024);
    CHECK(ridge.verified());
}

TEST_CASE("ridge-fourier-coefficient-closed-form") {
    // Integral over the normalized torus of e^{i alpha t} e^{-ikt}.
    const double tau = 6.283185307179586;
    for (double alpha : {0.3, 1.7, -2.25}) {
        for (long k : {-2L, 0L, 1L, 3L}) {
            std::complex<double> s = 0.0;
            const int N = 200000;
            for (int j = 0; j < N; ++j) {
                double t = tau * (j + 0.5) / N;
                s += std::exp(std::complex<double>(0, (alpha - k) * t));
            }
            s /= double(N);
            CHECK(std::abs(exponential_fourier_coefficient(alpha, k) - s) < 1e-8);
        }
    }
    CHECK(std::abs(exponential_fourier_coefficient(3.0, 3) - 1.0) < 1e-15);
}

TEST_CASE("haar-dyadic-helpers") {
    StepFunction a = haar_wavelet(2, 1), b = haar_wavelet(3, 5), c = haar_scaling(0, 0);
    CHECK(norm_l2(a) == doctest::Approx(1.0));
    CHECK(inner(a, b) == doctest::Approx(0.0));
    CHECK(inner(a, c) == doctest::Approx(0.0));
    CHECK(projection_norm(c, 0) == doctest::Approx(1.0));
    CHECK(projection_norm(a, 0) == doctest::Approx(0.0));
}

TEST_CASE("wavelet-separation-is-recorded") {
    WaveletSeparation L = wavelet_separation(1, 4, 100);
    CHECK(L.measured <= L.target * (1.0 + 1e-12));
    CHECK(L.target == doctest::Approx(1.0 / (8.0 * std::sqrt(2.0))));
}

TEST_CASE("slow-decay-independent-recheck") {
    auto s = build_scheme(json("monomial"));
    NullSequence eps = harmonic_sequence(16);
    Witness w = construct_slow_decay(s, eps, 8, 11);
    CHECK(w.verified());
    for (std::size_t i = 0; i <= 8; ++i) {
        BestApprox b = best_approx(s, w.element, i);
        CHECK(b.lower > 0.0);
        CHECK(b.value <= eps[i] + 1e-12);
    }
}

TEST_CASE("jump-element") {
    auto s = build_scheme(json("monomial-l2"));
    Rng rng(3);
    std::vector<Element> pool = structured_members(s, 4, rng, 2);
    JumpResult r = find_jump_element(s, 2, 1.0, pool);
    // K(n) = n on a chain, so every element outside the level has ratio 1.
    CHECK(r.found);
    CHECK(r.ratio == doctest::Approx(1.0));
    JumpResult none = find_jump_element(s, 2, 0.5, pool);
    CHECK_FALSE(none.found);
}

TEST_CASE("bundle-roundtrip-and-tamper") {
    Witness w = witness_tensor(4, "op");
    json bundle = w.to_json(true);
    CHECK(verify_witness_bundle(bundle).at("ok").get<bool>());
    json bad = bundle;
    bad["bounds"][0]["bound"] = bad["bounds"][0]["bound"].get<double>() * 1.5;
    CHECK_FALSE(verify_witness_bundle(bad).at("ok").get<bool>());
    json moved = bundle;
    moved["element"] = element_to_json(w.element.scaled(2.0));
    CHECK_FALSE(verify_witness_bundle(moved).at("ok").get<bool>());
}

TEST_CASE("relations") {
    CHECK(check_relation(">=", 0.999, 1.0, 1e-3));
    CHECK_FALSE(check_relation(">", 1.0, 1.0, 0.0));
    CHECK(check_relation("==", 1.0 + 1e-13, 1.0, 1e-12));
    CHECK(check_relation("<=", 1.0, 1.0, 0.0));
    CHECK_THROWS(check_relation("~", 1.0, 1.0, 0.0));
}

}
