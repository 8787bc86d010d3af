#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "lethargy/solve.hpp"

using namespace lethargy;

namespace {

// Smallest r such that greedy covering of sorted v by intervals of length 2r
// needs at most m cells; the optimum is half of some pairwise gap.
double quantizer_oracle_candidates(std::vector<double> v, std::size_t m) {
    std::sort(v.begin(), v.end());
    std::vector<double> cand{0.0};
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) cand.push_back((v[j] - v[i]) / 2.0);
    std::sort(cand.begin(), cand.end());
    for (double r : cand) {
        std::size_t cells = 0, s = 0;
        while (s < v.size()) {
            std::size_t e = s;
            while (e < v.size() && (v[e] - v[s]) / 2.0 <= r) ++e;
            ++cells;
            s = e;
        }
        if (cells <= m) return r;
    }
    return cand.back();
}

// All set partitions (contiguity not assumed) into at most m blocks.
double quantizer_oracle_partitions(const std::vector<double>& v, std::size_t m) {
    const std::size_t N = v.size();
    std::vector<std::size_t> block(N, 0);
    double best = kInf;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == N) {
            double worst = 0.0;
            for (std::size_t b = 0; b < used; ++b) {
                double lo = kInf, hi = -kInf;
                for (std::size_t t = 0; t < N; ++t)
                    if (block[t] == b) {
                        lo = std::min(lo, v[t]);
                        hi = std::max(hi, v[t]);
                    }
                worst = std::max(worst, (hi - lo) / 2.0);
            }
            best = std::min(best, worst);
            return;
        }
        for (std::size_t b = 0; b < std::min(used + 1, m); ++b) {
            block[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return best;
}

// Distance of x to B_{k+1} of the interleaved c0 scheme by bisection on the
// residual r: feasible iff r >= tail_{k+1} and (|x_k| - r)(k+1) <= M_k + r.
double c0_even_oracle(const Eigen::VectorXd& x, std::size_t k) {
    double tail = 0.0, Mk = 0.0;
    for (Eigen::Index i = static_cast<Eigen::Index>(k) + 1; i < x.size(); ++i) tail = std::max(tail, std::abs(x[i]));
    for (std::size_t i = 0; i < k; ++i) Mk = std::max(Mk, std::abs(x[static_cast<Eigen::Index>(i)]));
    double xk = std::abs(x[static_cast<Eigen::Index>(k)]), kp1 = static_cast<double>(k + 1);
    auto feasible = [&](double r) { return r >= tail && (xk - r) * kp1 <= Mk + r; };
    double lo = 0.0, hi = x.cwiseAbs().maxCoeff() + 1.0;
    if (feasible(0.0)) return 0.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
    }
    return hi;
}

ApproximationScheme named(const char* name) { return build_scheme(nlohmann::json(name)); }

}  // namespace

TEST_SUITE("solve") {

TEST_CASE("quantizer-dp-matches-partition-oracles") {
    Rng rng(11);
    auto X = QuasiNormedSpace::sup_coord(64);
    for (int t = 0; t < 40; ++t) {
        Eigen::VectorXd x(64);
        for (auto& v : x) v = rng.uniform() < 0.3 ? std::round(rng.normal() * 4) : rng.normal();
        std::vector<double> v(x.data(), x.data() + 64);
        for (std::size_t m : {1u, 2u, 3u, 5u, 8u, 17u, 64u})
            REQUIRE(quantizer_error(X, Element::real(x), m).value == quantizer_oracle_candidates(v, m));
    }
    auto S = QuasiNormedSpace::sup_coord(8);
    for (int t = 0; t < 30; ++t) {
        Eigen::VectorXd x(8);
        for (auto& v : x) v = rng.normal();
        std::vector<double> v(x.data(), x.data() + 8);
        for (std::size_t m : {1u, 2u, 3u, 4u})
            REQUIRE(quantizer_error(S, Element::real(x), m).value == quantizer_oracle_partitions(v, m));
    }
}

TEST_CASE("quantizer-assignment-realizes-value-and-midpoint-bound") {
    Rng rng(12);
    auto X = QuasiNormedSpace::sup_grid(Grid::interval(0, 1, 257));
    for (int t = 0; t < 20; ++t) {
        Element x = sample(*X.grid, [&](double s) { return std::sin(7 * s + t) + 0.3 * s; });
        double nx = X.norm(x);
        for (std::size_t m : {1u, 2u, 5u, 9u}) {
            Quantization q = quantizer_error(X, x, m);
            CHECK(q.levels.size() <= m);
            Eigen::VectorXd fitted(x.re.size());
            for (Eigen::Index i = 0; i < fitted.size(); ++i) fitted[i] = q.levels[q.assignment[static_cast<std::size_t>(i)]];
            CHECK(X.norm(Element::real(x.re - fitted)) == doctest::Approx(q.value).epsilon(1e-12));
            CHECK(q.value <= nx / static_cast<double>(m) + 1e-12);
            CHECK(midpoint_quantizer(X, x, m).value <= nx / static_cast<double>(m) + 1e-12);
        }
    }
    CHECK_THROWS_AS(quantizer_error(X, sample(*X.grid, [](double) { return 1.0; }), 0), ValidationError);
}

TEST_CASE("c0-closed-form-against-oracles") {
    Rng rng(13);
    for (int t = 0; t < 300; ++t) {
        const std::size_t D = 2 + rng.index(15);
        Eigen::VectorXd x(static_cast<Eigen::Index>(D));
        for (auto& v : x) v = rng.normal();
        for (std::size_t level = 0; level < 2 * D; ++level) {
            BestApprox b = c0_best_approx(x, level);
            double expect;
            if (level == 0) expect = x.cwiseAbs().maxCoeff();
            else if (level % 2 == 1) {
                std::size_t k = (level + 1) / 2;
                expect = k >= D ? 0.0 : x.tail(static_cast<Eigen::Index>(D - k)).cwiseAbs().maxCoeff();
            } else expect = c0_even_oracle(x, level / 2);
            REQUIRE(b.value == doctest::Approx(expect).epsilon(1e-12).scale(1.0));
            // The minimizer attains the value.
            REQUIRE((x - b.minimizer.re).cwiseAbs().maxCoeff() == doctest::Approx(b.value).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("c0-minimizer-is-a-member") {
    auto s = named("interleaved-c0");
    Rng rng(14);
    for (int t = 0; t < 100; ++t) {
        Eigen::VectorXd x(20);
        for (auto& v : x) v = rng.normal();
        for (std::size_t level = 0; level <= s.max_level(); ++level)
            REQUIRE(contains(s, c0_best_approx(x, level).minimizer, level));
    }
}

TEST_CASE("rank-eckart-young-randomized") {
    Rng rng(15);
    for (int t = 0; t < 1000; ++t) {
        auto r = static_cast<Eigen::Index>(2 + rng.index(6)), c = static_cast<Eigen::Index>(2 + rng.index(6));
        Eigen::MatrixXd m(r, c);
        for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.normal();
        Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
        Eigen::VectorXd sv = svd.singularValues();
        std::size_t n = rng.index(static_cast<std::size_t>(std::min(r, c)) + 1);
        double hs = 0.0;
        for (Eigen::Index i = static_cast<Eigen::Index>(n); i < sv.size(); ++i) hs += sv[i] * sv[i];
        double op = static_cast<Eigen::Index>(n) < sv.size() ? sv[static_cast<Eigen::Index>(n)] : 0.0;
        REQUIRE(rank_best_approx(m, n, NormKind::hs).value == doctest::Approx(std::sqrt(hs)).epsilon(1e-10).scale(1.0));
        REQUIRE(rank_best_approx(m, n, NormKind::op).value == doctest::Approx(op).epsilon(1e-10).scale(1.0));
        BestApprox b = rank_best_approx(m, n, NormKind::hs);
        REQUIRE((m - b.minimizer.mat).norm() == doctest::Approx(std::sqrt(hs)).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("orthonormal-nterm-matches-subset-oracle") {
    auto s = named("orthonormal-nterm");
    Rng rng(16);
    for (int t = 0; t < 20; ++t) {
        Eigen::VectorXd x(static_cast<Eigen::Index>(s.space.sample_count()));
        for (auto& v : x) v = rng.normal();
        for (std::size_t n : {0u, 1u, 3u, 7u}) {
            // n largest coordinates kept: residual is the rest.
            std::vector<double> a(x.data(), x.data() + x.size());
            for (auto& v : a) v = v * v;
            std::sort(a.begin(), a.end());
            double rest = 0.0;
            for (std::size_t i = 0; i + n < a.size(); ++i) rest += a[i];
            CHECK(best_approx(s, Element::real(x), n).value == doctest::Approx(std::sqrt(rest)).epsilon(1e-10));
        }
    }
}

TEST_CASE("greedy-never-beats-exhaustive") {
    auto s = named("gaussian-nterm");
    Rng rng(17);
    SolveOptions ex, greedy;
    greedy.exhaustive_cutoff = 0.0;
    for (int t = 0; t < 10; ++t) {
        Eigen::VectorXd x(static_cast<Eigen::Index>(s.space.sample_count()));
        for (auto& v : x) v = rng.normal();
        for (std::size_t n : {1u, 2u, 3u}) {
            BestApprox a = best_approx(s, Element::real(x), n, ex), b = best_approx(s, Element::real(x), n, greedy);
            CHECK(a.status == FitStatus::exact);
            CHECK(b.status == FitStatus::upper_bound);
            CHECK(b.value >= a.value - 1e-12);
        }
    }
}

TEST_CASE("chain-l2-projection-agrees-with-irls") {
    auto s = named("monomial-l2");
    Element x = sample(*s.space.grid, [](double t) { return std::abs(t - 0.3) + std::sin(5 * t); });
    Eigen::VectorXd w = s.space.weights();
    for (std::size_t n = 1; n <= 8; ++n) {
        Eigen::MatrixXd Phi = s.basis_cache.leftCols(static_cast<Eigen::Index>(n));
        double proj = best_approx(s, x, n).value;
        double irls = fit_irls(Phi, x.re, w, 2.0).value;
        CHECK(std::abs(proj - irls) <= 1e-8);
    }
}

TEST_CASE("profiles-monotone-and-homogeneous") {
    Rng rng(18);
    for (const char* name : {"monomial", "monomial-l2", "trig-l2", "quantizer", "interleaved-c0", "rank", "rank-op",
                             "orthonormal-chain", "spline-constant-sup", "haar-nterm", "char-intervals"}) {
        auto s = named(name);
        Element x = s.sample_member(std::min<std::size_t>(s.max_level(), 6), rng);
        if (s.space.carrier == Carrier::grid)
            x = x + sample(*s.space.grid, [](double t) { return std::cos(3 * t) * std::exp(-t); });
        std::size_t n_max = std::min<std::size_t>(s.max_level(), 6);
        ErrorProfile p = error_profile(s, x, n_max);
        REQUIRE(p.entries.size() == n_max + 1);
        for (std::size_t n = 0; n + 1 < p.entries.size(); ++n)
            CHECK(p.entries[n].value >= p.entries[n + 1].value - 1e-9);
        double lam = -2.5;
        ErrorProfile q = error_profile(s, x.scaled(lam), n_max);
        for (std::size_t n = 0; n <= n_max; ++n)
            CHECK(std::abs(q.entries[n].value - std::abs(lam) * p.entries[n].value) <=
                  1e-9 * (std::abs(lam) * p.entries[n].value + 1e-6 * p.x_norm));
    }
}

TEST_CASE("spline-dp-matches-breakpoint-enumeration") {
    auto X = QuasiNormedSpace::sup_grid(Grid::interval(0, 1, 12));
    Rng rng(19);
    for (int t = 0; t < 20; ++t) {
        Eigen::VectorXd x(12);
        for (auto& v : x) v = rng.normal();
        // Piecewise constants: enumerate every set of at most 2 interior breaks.
        auto half = [&](int a, int b) { return (x.segment(a, b - a).maxCoeff() - x.segment(a, b - a).minCoeff()) / 2.0; };
        double best = half(0, 12);
        for (int i = 1; i < 12; ++i) {
            best = std::min(best, std::max(half(0, i), half(i, 12)));
            for (int j = i + 1; j < 12; ++j) best = std::min(best, std::max({half(0, i), half(i, j), half(j, 12)}));
        }
        CHECK(spline_best_approx(X, x, 3, 1).value == doctest::Approx(best).epsilon(1e-10));
    }
}

TEST_CASE("p-below-one-only-for-combinatorial-kinds") {
    nlohmann::json d = {{"kind", "subspace-chain"}, {"basis", "monomial"}, {"levels", 4},
                        {"space", {{"carrier", "grid"}, {"nodes", 65}, {"p", 0.5}}}};
    auto s = build_scheme(d);
    Element x = sample(*s.space.grid, [](double t) { return t; });
    CHECK_THROWS_AS(best_approx(s, x, 1), NoSolver);
}

TEST_CASE("level-beyond-window-is-an-error") {
    auto s = named("rank");
    Rng rng(20);
    CHECK_THROWS(best_approx(s, s.sample_member(1, rng), s.max_level() + 1));
}

}
