// One PASS/FAIL line per acceptance criterion. A criterion passes only when
// its numeric checks hold and it finished inside its runtime budget.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lethargy/analyze.hpp"
#include "lethargy/witness.hpp"

using namespace lethargy;
using nlohmann::json;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = "failed: " + what;
        ok = ok && cond;
    }
};

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

const WitnessBound* bound_of(const Witness& w, const std::string& tag, std::size_t n) {
    for (const auto& b : w.bounds)
        if (b.tag == tag && b.n == n) return &b;
    return nullptr;
}

// Sorted-candidate search for the smallest half-width r whose greedy cover of
// the values uses at most m cells.
double quantizer_oracle(std::vector<double> v, std::size_t m) {
    std::sort(v.begin(), v.end());
    std::vector<double> cand{0.0};
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) cand.push_back((v[j] - v[i]) / 2.0);
    std::sort(cand.begin(), cand.end());
    auto cells = [&](double r) {
        std::size_t c = 0, s = 0;
        while (s < v.size()) {
            std::size_t e = s;
            while (e < v.size() && (v[e] - v[s]) / 2.0 <= r) ++e;
            ++c;
            s = e;
        }
        return c;
    };
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (cells(cand[mid]) <= m) hi = mid;
        else lo = mid + 1;
    }
    return cand[lo];
}

Outcome c0_equality() {
    Outcome o;
    Rng rng(101);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        std::size_t N = 1 + rng.index(16);
        std::vector<double> v(N);
        double x = rng.uniform(0.5, 2.0);
        for (auto& e : v) {
            e = x;
            if (rng.uniform() > 0.2) x *= rng.uniform(0.1, 1.0);
        }
        Witness w = witness_c0(NullSequence(v));
        o.require(w.verified(), "witness bounds");
        auto s = build_scheme(w.scheme);
        for (std::size_t n = 1; n < N; ++n) {
            double e = best_approx(s, w.element, 2 * n - 1).value;
            worst = std::max(worst, std::abs(e - v[n]));
        }
        // Past the window the sequence is zero and so is the error.
        if (2 * N - 1 <= s.max_level()) o.require(best_approx(s, w.element, 2 * N - 1).value == 0.0, "zero beyond window");
    }
    o.require(worst <= 1e-12, "max deviation");
    if (o.ok) o.detail = fmt("20 sequences, max |E - eps_n| = %.2e", worst);
    return o;
}

Outcome quantizer_pinch() {
    Outcome o;
    ValueBudget budget;
    budget.rule = ValueBudget::Rule::list;
    budget.values = {1, 2, 4, 8, 16, 64};
    Witness w = witness_quantizer(budget, budget.values.size(), 2049);
    o.require(w.verified(), "witness bounds");
    auto X = QuasiNormedSpace::sup_grid(Grid::interval(0, 1, 2049));
    Element x = sample(*X.grid, [](double t) { return 2 * t - 1; });
    for (std::size_t m : budget.values) {
        double e = quantizer_error(X, x, m).value, inv = 1.0 / static_cast<double>(m);
        o.require(e >= inv - 2e-3 && e <= inv, "E in [1/m - 2e-3, 1/m] for m=" + std::to_string(m));
        o.require(midpoint_quantizer(X, x, m).value <= inv + 1e-15, "midpoint <= 1/m for m=" + std::to_string(m));
    }
    Rng rng(102);
    auto C = QuasiNormedSpace::sup_coord(64);
    std::size_t instances = 0;
    for (int t = 0; t < 50; ++t) {
        Eigen::VectorXd v(64);
        for (auto& e : v) e = rng.uniform() < 0.25 ? std::round(rng.normal() * 3) : rng.normal();
        std::vector<double> s(v.data(), v.data() + 64);
        for (std::size_t m : {1u, 2u, 3u, 4u, 7u, 8u, 16u, 33u}) {
            o.require(quantizer_error(C, Element::real(v), m).value == quantizer_oracle(s, m), "DP == oracle");
            ++instances;
        }
    }
    if (o.ok) o.detail = fmt("m in {1,2,4,8,16,64} pinched; DP == oracle on %.0f 64-point instances", double(instances));
    return o;
}

Outcome tensor_eckart_young() {
    Outcome o;
    for (std::size_t n = 2; n <= 8; ++n) {
        Eigen::MatrixXd Z = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) / double(n);
        for (NormKind k : {NormKind::hs, NormKind::op}) {
            double e = rank_best_approx(Z, n - 1, k).value;
            o.require(std::abs(e - 1.0 / n) <= 1e-12, "E = 1/n");
            o.require(e >= 1.0 / double(n * n), "E >= 1/n^2");
        }
        for (const char* norm : {"hs", "op"}) o.require(witness_tensor(n, norm).verified(), "witness bounds");
    }
    if (o.ok) o.detail = "n = 2..8, HS and operator norm";
    return o;
}

Outcome orthonormal_nterm() {
    Outcome o;
    SolveOptions opt;
    opt.exhaustive_cutoff = 1e7;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t D = n; D <= 12; ++D) {
            auto X = QuasiNormedSpace::lp_coord(D, 2.0);
            Eigen::MatrixXd I = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
            Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(D));
            y.head(static_cast<Eigen::Index>(n)).setConstant(1.0 / double(n));
            BestApprox b = nterm_best_approx(X, I, false, y, n - 1, opt);
            o.require(b.status == FitStatus::exact, "exhaustive status");
            o.require(std::abs(b.value - 1.0 / n) <= 1e-12, "E = 1/n");
            o.require(b.value > 1.0 / (2.0 * n), "E > 1/(2n)");
            o.require(witness_orthonormal_nterm(n, D).verified(), "witness bounds");
            ++cases;
        }
    if (o.ok) o.detail = fmt("%.0f (n, D) pairs, exhaustive subsets", double(cases));
    return o;
}

Outcome haar_bumps() {
    Outcome o;
    double worst_int = kInf, worst_err = kInf;
    std::size_t min_attempts = ~std::size_t{0};
    for (std::size_t n : {1u, 2u, 3u})
        for (double p : {1.0, 2.0}) {
            Witness w = witness_haar_bumps(n, BasisFamily::monomial, p, 100, 1000 + n);
            const auto* bi = bound_of(w, "haar-bump-integral", n);
            const auto* be = bound_of(w, "haar-bump-error", n);
            o.require(bi && be, "bounds present");
            if (!bi || !be) continue;
            o.require(w.verified(), "witness bounds");
            o.require(bi->attempts >= 100, "at least 100 attempts");
            o.require(bi->computed > 0.2, "every attempt integral > 1/5");
            o.require(be->computed > 0.2, "every attempt error > 1/5");
            worst_int = std::min(worst_int, bi->computed);
            worst_err = std::min(worst_err, be->computed);
            min_attempts = std::min(min_attempts, bi->attempts);
        }
    if (o.ok) o.detail = fmt("min integral %.4f, min error %.4f", worst_int, worst_err) + ", attempts >= " + std::to_string(min_attempts);
    return o;
}

Outcome majorant() {
    Outcome o;
    Rng rng(106);
    const std::size_t N = 1024;
    std::size_t checked = 0;
    for (int t = 0; t < 1000; ++t) {
        std::vector<double> v(N);
        double x = rng.uniform(0.1, 10.0);
        for (auto& e : v) {
            e = x;
            double u = rng.uniform();
            if (u < 0.1) x *= 1e-3;
            else if (u > 0.3) x *= rng.uniform(0.7, 1.0);
        }
        IndexMap h;
        h.h.resize(N);
        double slope = rng.uniform(1.0, 3.0);
        std::size_t shift = rng.index(8);
        for (std::size_t n = 0; n < N; ++n)
            h.h[n] = static_cast<std::size_t>(slope * static_cast<double>(n)) + shift + (rng.uniform() < 0.1 ? rng.index(5) : 0);
        NullSequence eps(v);
        NullSequence xi = lethargy_majorant(eps, h);
        o.require(is_nonincreasing(xi.values), "non-increasing");
        for (std::size_t n = 0; n < N; ++n) {
            if (xi[n] < eps[n]) o.require(false, "domination");
            if (h(n) < N && xi[n] > 2.0 * xi[h(n)]) o.require(false, "block doubling");
        }
        o.require(xi.values.back() == 0.0 || xi.tail.kind == TailModel::Kind::geometric, "tail decays");
        ++checked;
    }
    if (o.ok) o.detail = fmt("%.0f instances on a window of %.0f", double(checked), double(N));
    return o;
}

Outcome slow_decay() {
    Outcome o;
    auto s = build_scheme(json("monomial"));
    NullSequence eps = harmonic_sequence(16);
    Witness w = construct_slow_decay(s, eps, 8, 107);
    o.require(w.verified(), "witness bounds");
    double min_lower = kInf, max_ratio = 0.0;
    for (std::size_t i = 0; i <= 8; ++i) {
        BestApprox b = best_approx(s, w.element, i);
        o.require(b.status == FitStatus::exact, "exact solver");
        o.require(b.lower > 0.0, "E > 0 at i=" + std::to_string(i));
        o.require(b.value <= eps[i], "E <= eps_i at i=" + std::to_string(i));
        min_lower = std::min(min_lower, b.lower);
        max_ratio = std::max(max_ratio, b.value / eps[i]);
    }
    if (o.ok) o.detail = fmt("min E = %.3e, max E/eps = %.3f", min_lower, max_ratio);
    return o;
}

Outcome shapiro_dichotomy() {
    Outcome o;
    {
        auto q = build_scheme(json("quantizer"));
        ShapiroVerdict v = shapiro_check(q, 8, 16, 108);
        o.require(v.verdict == "Shapiro-fails", "quantizer verdict");
        o.require(v.envelope.size() == 9, "envelope length");
        for (std::size_t n = 1; n < v.envelope.size(); ++n)
            o.require(std::abs(v.envelope[n] - 1.0 / double(n)) <= 1e-15, "envelope 1/m(n)");
    }
    std::string mins;
    for (const char* name : {"monomial", "trig", "interleaved-c0", "orthonormal-nterm"}) {
        auto s = build_scheme(json(name));
        ShapiroVerdict v = shapiro_check(s, 8, 8, 108);
        o.require(v.verdict == "consistent-with-Shapiro", std::string(name) + " verdict " + v.verdict);
        for (const auto& c : v.certificates) o.require(c.bound >= kShapiroThreshold, std::string(name) + " certificate");
        mins += std::string(" ") + name + fmt("=%.3f", v.c);
    }
    if (o.ok) o.detail = "quantizer Shapiro-fails; min certificates" + mins;
    return o;
}

Outcome dolzhenko() {
    Outcome o;
    json r = dolzhenko_audit(1000, 5, 2049, 109, 1e-3);
    o.require(r.at("samples").get<std::size_t>() == 1000, "sample count");
    o.require(r.at("violations").get<std::size_t>() == 0, "violations");
    if (o.ok) o.detail = fmt("1000 rational functions, worst TV/(2n sup) = %.4f", r.at("worst_ratio").get<double>());
    return o;
}

Outcome brudnyi() {
    Outcome o;
    auto s = build_scheme(json("interleaved-c0"));
    json per;
    brudnyi_gap(s, 19, 4, 110, &per);
    double worst = 0.0;
    std::size_t seen = 0;
    for (const auto& row : per) {
        std::size_t n = row.at("n").get<std::size_t>();
        if (n % 2 == 0) continue;
        std::size_t k = (n + 1) / 2;
        worst = std::max(worst, std::abs(row.at("value").get<double>() - 1.0 / double(k + 1)));
        ++seen;
    }
    o.require(seen == 10, "k = 1..10 covered");
    o.require(worst <= 1e-10, "equals 1/(k+1)");
    if (o.ok) o.detail = fmt("k = 1..10, max deviation %.2e", worst);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* tag;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"c0-interleaved-equality", 1.0, c0_equality},
        {"quantizer-pinch", 5.0, quantizer_pinch},
        {"tensor-eckart-young", 1.0, tensor_eckart_young},
        {"orthonormal-nterm-bound", 10.0, orthonormal_nterm},
        {"haar-bump-lower-bound", 60.0, haar_bumps},
        {"lethargy-majorant", 5.0, majorant},
        {"slow-decay-construction", 60.0, slow_decay},
        {"shapiro-dichotomy", 120.0, shapiro_dichotomy},
        {"dolzhenko-audit", 10.0, dolzhenko},
        {"brudnyi-gap-c0", 1.0, brudnyi},
    };
    int failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.budget_s;
        bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("%s %2d %-26s %8.3fs (budget %.0fs%s)  %s\n", pass ? "PASS" : "FAIL", index, c.tag, secs, c.budget_s,
                    in_time ? "" : ", exceeded", o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
