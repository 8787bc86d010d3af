#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "lethargy/analyze.hpp"

using namespace lethargy;
using nlohmann::json;

namespace {

std::vector<double> geometric_window(std::size_t N, double rho) {
    std::vector<double> v(N);
    for (std::size_t n = 0; n < N; ++n) v[n] = std::pow(rho, static_cast<double>(n));
    return v;
}

}  // namespace

TEST_SUITE("analyze") {

TEST_CASE("aqr-closed-forms-with-geometric-tail") {
    for (double rho : {0.3, 0.7, 0.9}) {
        auto E = geometric_window(20, rho);
        auto tail = TailModel::geometric(rho);
        // q = 1, r = 1: unit weights, sum rho^n.
        CHECK(aqr_norm(E, 0.0, 1.0, 1.0, tail).seminorm == doctest::Approx(1.0 / (1.0 - rho)).epsilon(1e-10));
        // q = 2, r = 1/2: unit weights, sqrt of sum rho^{2n}.
        CHECK(aqr_norm(E, 0.0, 0.5, 2.0, tail).seminorm ==
              doctest::Approx(std::sqrt(1.0 / (1.0 - rho * rho))).epsilon(1e-10));
        // q = 2, r = 1: sum (n+1) rho^{2n} = 1/(1-rho^2)^2.
        CHECK(aqr_norm(E, 0.0, 1.0, 2.0, tail).seminorm == doctest::Approx(1.0 / (1.0 - rho * rho)).epsilon(1e-10));
        // q = inf, r = 0.5: sup (n+1)^{1/2} rho^n.
        double s = 0.0;
        for (int n = 0; n < 2000; ++n) s = std::max(s, std::sqrt(n + 1.0) * std::pow(rho, n));
        CHECK(aqr_norm(E, 0.0, 0.5, kInf, tail).seminorm == doctest::Approx(s).epsilon(1e-12));
    }
}

TEST_CASE("aqr-monotone-in-r-and-lattice") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> a(24), b(24);
        double x = 1.0;
        for (std::size_t n = 0; n < 24; ++n) {
            x *= rng.uniform(0.3, 1.0);
            a[n] = x;
            b[n] = x * rng.uniform(1.0, 2.0);
        }
        for (double q : {1.0, 2.0, kInf}) {
            double r1 = rng.uniform(0.1, 2.0), r2 = r1 + rng.uniform(0.0, 1.0);
            CHECK(aqr_norm(a, 1.0, r1, q).norm <= aqr_norm(a, 1.0, r2, q).norm * (1 + 1e-12));
            CHECK(aqr_norm(a, 1.0, r1, q).norm <= aqr_norm(b, 1.0, r1, q).norm * (1 + 1e-12));
        }
    }
}

TEST_CASE("aqr-divergence-flag") {
    std::vector<double> slow(256), fast = geometric_window(256, 0.5);
    for (std::size_t n = 0; n < 256; ++n) slow[n] = 1.0 / static_cast<double>(n + 1);
    // (n+1)^{r-1/q} / (n+1) with r = 2, q = 1 grows: not summable.
    CHECK(aqr_norm(slow, 1.0, 2.0, 1.0).divergent);
    CHECK_FALSE(aqr_norm(fast, 1.0, 2.0, 1.0).divergent);
    CHECK(aqr_norm(slow, 1.0, 2.0, kInf).divergent);
    CHECK_THROWS_AS(aqr_norm(fast, 1.0, -1.0, 1.0), ValidationError);
}

TEST_CASE("weighted-sup-norm") {
    std::vector<double> prof{1.0, 0.5, 0.2, 0.1};
    NullSequence eps({1.0, 0.25, 0.25, 0.05});
    CHECK(weighted_sup_norm(prof, eps, 0) == doctest::Approx(2.0));
    CHECK(weighted_sup_norm(prof, eps, 2) == doctest::Approx(2.0));
    CHECK(weighted_sup_norm(prof, eps, 3) == doctest::Approx(2.0));
    CHECK_THROWS_AS(weighted_sup_norm(prof, NullSequence({1.0, 0.0, 0.0, 0.0}), 0), ValidationError);
}

TEST_CASE("certificates-reproduce-on-rerun") {
    for (const char* name : {"interleaved-c0", "orthonormal-nterm", "rank", "monomial", "quantizer", "haar-nterm"}) {
        CAPTURE(name);
        auto s = build_scheme(json(name));
        const double tol = s.space.carrier == Carrier::grid ? 1e-3 : 1e-9;
        for (std::size_t n : {1u, 2u, 4u}) {
            auto pool = density_candidates(s, n, 5, 4);
            DensityCertificate c = density_lower_bound(s, n, pool);
            CHECK(s.space.norm(c.element) == doctest::Approx(1.0).epsilon(1e-12));
            double again = best_approx(s, c.element, n).lower;
            CHECK(again >= c.bound - tol);
            CHECK(c.bound <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("density-profile-lower-is-monotone") {
    auto s = build_scheme(json("monomial"));
    json r = density_profile_check(s, 6, "default", 3, 3);
    auto lower = r.at("lower").get<std::vector<double>>();
    for (std::size_t n = 0; n + 1 < lower.size(); ++n) CHECK(lower[n] >= lower[n + 1]);
    for (const auto& label : r.at("upper_label")) CHECK(label.get<std::string>() == "empirical probe max");
}

TEST_CASE("quantizer-density-pinch") {
    auto s = build_scheme(json("quantizer"));
    for (std::size_t n : {1u, 2u, 4u, 8u}) {
        auto pool = density_candidates(s, n, 9, 2);
        DensityCertificate c = density_lower_bound(s, n, pool);
        DensityUpper u = density_upper_estimate(s, n, pool);
        CHECK(u.certified);
        CHECK(u.value == doctest::Approx(1.0 / n));
        CHECK(std::abs(c.bound - 1.0 / n) <= 2e-3);
    }
}

TEST_CASE("brudnyi-gap-c0-closed-form") {
    auto s = build_scheme(json("interleaved-c0"));
    json per;
    brudnyi_gap(s, 19, 4, 1, &per);
    // a in B_{k+1} of unit norm has |a_k| <= 1/(k+1), and E(a, Pi_k) = |a_k|.
    for (const auto& row : per) {
        std::size_t n = row.at("n").get<std::size_t>();
        if (n % 2 == 1) {
            std::size_t k = (n + 1) / 2;
            CHECK(row.at("value").get<double>() == doctest::Approx(1.0 / (k + 1)).epsilon(1e-10));
        }
    }
}

TEST_CASE("shapiro-c0-certificates") {
    auto s = build_scheme(json("interleaved-c0"));
    ShapiroVerdict v = shapiro_check(s, 10, 4, 2);
    CHECK(v.verdict == "consistent-with-Shapiro");
    for (const auto& c : v.certificates) CHECK(c.bound >= kShapiroThreshold);
    CHECK(v.envelope.empty());
}

TEST_CASE("property-P-orthonormal") {
    auto s = build_scheme(json("orthonormal-nterm"));
    json r = property_P_check(s, 2.0, 1.0, {1, 2, 4, 8}, 1);
    CHECK(r.at("pass").get<bool>());
}

TEST_CASE("dolzhenko-small") {
    json r = dolzhenko_audit(100, 4, 1025, 3);
    CHECK(r.at("violations").get<std::size_t>() == 0);
    CHECK(r.at("worst_ratio").get<double>() <= 1.0);
}

TEST_CASE("jackson-bernstein-are-descriptive") {
    auto s = build_scheme(json("monomial"));
    json j = jackson_audit(s, "lipschitz", 4, 5, 1);
    CHECK(j.at("kind") == "descriptive fit");
    CHECK(j.at("c").size() == 6);
    json b = bernstein_audit(s, "lipschitz", 4, 5, 1);
    CHECK(b.at("levels").size() >= 5);
    // Markov: sup |p'| <= 2 (n-1)^2 sup|p| on [0, 1] for degree n - 1.
    for (const auto& row : b.at("levels")) {
        double n = row.at("n").get<double>();
        if (n >= 1) CHECK(row.at("b").get<double>() <= 2.0 * (n - 1) * (n - 1) + 1e-6);
    }
    CHECK_THROWS_AS(seminorm(build_scheme(json("rank")), "bv", Element::matrix(Eigen::MatrixXd::Identity(8, 8))),
                    ValidationError);
}

}
