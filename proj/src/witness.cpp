#include "lethargy/witness.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "lethargy/dyadic.hpp"

namespace lethargy {

using nlohmann::json;

namespace {

constexpr double kTwoPi = 6.283185307179586;

double p_from(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf" || s == "sup") return kInf;
        return std::stod(s);
    }
    return j.get<double>();
}

WitnessBound make_bound(std::size_t n, const std::string& rel, double bound, double tol, const std::string& tag,
                        const std::string& method = "solver") {
    WitnessBound b;
    b.n = n;
    b.relation = rel;
    b.bound = bound;
    b.tol = tol;
    b.tag = tag;
    b.method = method;
    return b;
}

void settle(WitnessBound& b, double computed, std::size_t attempts = 1) {
    b.computed = computed;
    b.attempts = attempts;
    b.verified = check_relation(b.relation, computed, b.bound, b.tol);
}

// All size-k subsets of {0..K-1}, visited in lexicographic order.
template <class F>
void for_each_subset(std::size_t K, std::size_t k, F f) {
    if (k > K) return;
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        f(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == K - k + i - 1) --i;
        if (i == 0) return;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace

bool check_relation(const std::string& rel, double computed, double bound, double tol) {
    if (!std::isfinite(computed)) return false;
    if (rel == ">=") return computed >= bound - tol;
    if (rel == ">") return computed > bound - tol;
    if (rel == "<=") return computed <= bound + tol;
    if (rel == "<") return computed < bound + tol;
    if (rel == "==") return std::abs(computed - bound) <= tol;
    throw ValidationError("unknown relation '" + rel + "'");
}

json WitnessBound::to_json() const {
    return {{"n", n},           {"relation", relation}, {"bound", bound},       {"tol", tol},
            {"computed", computed}, {"tag", tag},       {"method", method},     {"attempts", attempts},
            {"verified", verified}};
}

WitnessBound WitnessBound::from_json(const json& j) {
    WitnessBound b;
    b.n = j.at("n").get<std::size_t>();
    b.relation = j.at("relation").get<std::string>();
    b.bound = j.at("bound").get<double>();
    b.tol = j.value("tol", 0.0);
    b.computed = j.value("computed", 0.0);
    b.tag = j.value("tag", "");
    b.method = j.value("method", "solver");
    b.attempts = j.value("attempts", std::size_t{1});
    b.verified = j.value("verified", false);
    return b;
}

bool Witness::verified() const {
    return std::all_of(bounds.begin(), bounds.end(), [](const WitnessBound& b) { return b.verified; });
}

json Witness::to_json(bool with_element) const {
    json j = {{"kind", kind}, {"norm", norm}, {"scheme", scheme}, {"params", params},
              {"seed", seed}, {"log", log},   {"verified", verified()}};
    json bj = json::array();
    for (const auto& b : bounds) bj.push_back(b.to_json());
    j["bounds"] = bj;
    if (with_element && element.size() > 0) j["element"] = element_to_json(element);
    return j;
}

// ---------------------------------------------------------------- c0

Witness witness_c0(const NullSequence& eps, std::size_t dim_cap) {
    eps.validate();
    if (eps.size() == 0) throw ValidationError("witness_c0: empty sequence");
    if (eps.size() > dim_cap) throw ValidationError("witness_c0: sequence longer than the dimension cap");
    const std::size_t D = eps.size();
    Witness w;
    w.kind = "c0";
    w.params = {{"type", "c0"}, {"eps", to_json(eps)}, {"dim_cap", dim_cap}};
    w.scheme = {{"kind", "interleaved-c0"}, {"dim", D}};
    ApproximationScheme s = build_scheme(w.scheme);
    Eigen::VectorXd x(static_cast<Eigen::Index>(D));
    for (std::size_t i = 0; i < D; ++i) x[static_cast<Eigen::Index>(i)] = eps[i];
    w.element = Element::real(x);
    w.norm = s.space.norm(w.element);
    for (std::size_t n = 0; n <= D; ++n) {
        std::size_t level = n == 0 ? 0 : 2 * n - 1;
        double target = n < D ? eps[n] : 0.0;
        auto b = make_bound(level, "==", target, 1e-12, "c0-interleaved-equality");
        settle(b, c0_best_approx(x, level).value);
        w.bounds.push_back(b);
    }
    return w;
}

// ---------------------------------------------------------------- quantizer

Witness witness_quantizer(const ValueBudget& m, std::size_t levels, std::size_t nodes) {
    if (levels == 0) throw ValidationError("witness_quantizer: no levels");
    Witness w;
    w.kind = "quantizer";
    w.params = {{"type", "quantizer"}, {"m", m.to_json()}, {"levels", levels}, {"nodes", nodes}};
    w.scheme = {{"kind", "quantizer"},
                {"m", m.to_json()},
                {"levels", std::min(levels - 1, m.max_level())},
                {"space", {{"carrier", "grid"}, {"domain", "interval"}, {"nodes", nodes}, {"p", "inf"}}}};
    ApproximationScheme s = build_scheme(w.scheme);
    w.element = sample(*s.space.grid, [](double t) { return 2.0 * t - 1.0; });
    w.norm = s.space.norm(w.element);
    for (std::size_t n = 0; n < levels && n <= s.max_level(); ++n) {
        std::size_t M = s.budget(n);
        if (M == 0) continue;
        double inv = 1.0 / static_cast<double>(M);
        double value = quantizer_error(s.space, w.element, M).value;
        double mid = midpoint_quantizer(s.space, w.element, M).value;
        auto lo = make_bound(n, ">=", inv, 2e-3, "quantizer-reciprocal-lower");
        settle(lo, value);
        auto up = make_bound(n, "<=", inv, 1e-12, "quantizer-reciprocal-upper");
        settle(up, value);
        auto mq = make_bound(n, "<=", inv, 1e-12, "quantizer-midpoint-upper", "closed-form");
        settle(mq, mid);
        w.bounds.insert(w.bounds.end(), {lo, up, mq});
        double e = inv;
        w.log.push_back({{"n", n}, {"m", M}, {"dp_value", value}, {"midpoint_value", mid},
                         {"reciprocal", inv}, {"statement_form_lower", e / (1.0 + e)}});
    }
    return w;
}

// ---------------------------------------------------------------- generalized Haar bumps

Element haar_bump_element(const Grid& g, std::size_t cells, double p) {
    const double L = g.length(), lo = g.a + 0.05 * L, width = 0.9 * L / static_cast<double>(cells);
    const double expo = std::isinf(p) ? 1.0 : 1.0 / p;
    return sample(g, [&](double t) {
        double u = (t - lo) / width;
        if (u < 0.0 || u >= static_cast<double>(cells)) return 0.0;
        auto j = static_cast<std::size_t>(u);
        double f = u - static_cast<double>(j);
        double hgt = std::clamp(std::min(f, 1.0 - f) / 0.05, 0.0, 1.0);
        double sgn = (j + 1) % 2 == 0 ? 1.0 : -1.0;  // (-1)^j with j counted from 1
        return sgn * std::pow(hgt, expo);
    });
}

Witness witness_haar_bumps(std::size_t n, BasisFamily family, double p, std::size_t attempts, std::uint64_t seed,
                           std::size_t nodes) {
    if (!(p >= 1.0) || std::isinf(p)) throw ValidationError("witness_haar_bumps: exponent must lie in [1, inf)");
    if (family == BasisFamily::coordinate) throw ValidationError("witness_haar_bumps: needs a function family");
    const bool torus = family == BasisFamily::trig;
    if (nodes == 0) nodes = torus ? 4096 : 2049;
    const std::size_t psi = zero_bound(family, n), N = psi + 1, cells = 4 * N;
    if (static_cast<double>(nodes) * 0.9 / static_cast<double>(cells) < 8.0)
        throw ValidationError("witness_haar_bumps: grid too coarse for " + std::to_string(cells) + " cells");

    Witness w;
    w.kind = "haar-bumps";
    w.seed = seed;
    w.params = {{"type", "haar-bumps"}, {"n", n},         {"family", to_string(family)}, {"p", p},
                {"attempts", attempts}, {"seed", seed},   {"nodes", nodes}};
    json space = torus ? json{{"carrier", "grid"}, {"domain", "torus"}, {"nodes", nodes}, {"p", p}, {"normalized", true}}
                       : json{{"carrier", "grid"}, {"domain", "interval"}, {"nodes", nodes}, {"p", p}, {"normalized", true}};
    w.scheme = {{"kind", "subspace-chain"}, {"basis", to_string(family)}, {"levels", std::max<std::size_t>(n, 1)},
                {"space", space}};
    ApproximationScheme s = build_scheme(w.scheme);
    const QuasiNormedSpace& X = s.space;
    w.element = haar_bump_element(*X.grid, cells, p);
    w.norm = X.norm(w.element);
    const Eigen::VectorXd& h = w.element.re;
    const Eigen::VectorXd wts = X.weights();

    auto integral = [&](const Eigen::VectorXd& g) { return wts.dot((h - g).cwiseAbs().array().pow(p).matrix()); };

    double best_int = kInf;
    std::size_t count = 0;
    json per_method = json::object();
    auto record = [&](const std::string& method, const Eigen::VectorXd& g) {
        double v = integral(g);
        ++count;
        best_int = std::min(best_int, v);
        double prev = per_method.contains(method) ? per_method[method].get<double>() : kInf;
        per_method[method] = std::min(prev, v);
    };

    double best_fit_value = w.norm;
    bool fit_exact = true;
    if (n == 0) {
        record("zero", Eigen::VectorXd::Zero(h.size()));
    } else {
        Rng rng(seed);
        const Eigen::MatrixXd Phi = s.basis_cache.leftCols(static_cast<Eigen::Index>(n));
        LinearFit best = fit_linear(Phi, h, wts, p);
        best_fit_value = best.value;
        fit_exact = best.status == FitStatus::exact;
        record("best-fit", h - best.residual);
        record("projection", h - fit_l2(Phi, h, wts).residual);
        record("minimax", h - fit_sup(Phi, h).residual);
        Eigen::VectorXd scale = best.coef.cwiseAbs().array() + 1e-3;
        while (count < attempts) {
            std::size_t kind = count % 3;
            if (kind == 0) {
                Eigen::VectorXd sw(h.size());
                for (Eigen::Index i = 0; i < sw.size(); ++i) sw[i] = rng.uniform(0.05, 1.0);
                IrlsOptions o;
                o.max_iter = 60;
                LinearFit f = p == 2.0 ? fit_l2(Phi, h, wts.cwiseProduct(sw)) : fit_irls(Phi, h, wts, p, o, &sw);
                record("random-start", h - f.residual);
            } else if (kind == 1) {
                double sigma = std::pow(10.0, rng.uniform(-4.0, -1.0));
                Eigen::VectorXd c = best.coef;
                for (Eigen::Index i = 0; i < c.size(); ++i) c[i] += sigma * scale[i] * rng.normal();
                record("perturbed", Phi * c);
            } else {
                Eigen::VectorXd c(Phi.cols());
                for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = rng.normal();
                Eigen::VectorXd g = Phi * c;
                // Best multiple along the random direction, by golden-section on the convex integral.
                double a = -4.0, b = 4.0;
                double gn = std::max(1e-12, std::sqrt(wts.dot(g.cwiseAbs2())));
                g /= gn;
                const double r = 0.6180339887498949;
                for (int it = 0; it < 60; ++it) {
                    double c1 = b - r * (b - a), c2 = a + r * (b - a);
                    if (integral(c1 * g) < integral(c2 * g)) b = c2;
                    else a = c1;
                }
                record("random-direction", 0.5 * (a + b) * g);
            }
        }
    }
    auto b1 = make_bound(n, ">", 0.2, 0.0, "haar-bump-integral", "attempted-falsification");
    settle(b1, best_int, count);
    w.bounds.push_back(b1);
    auto b2 = make_bound(n, ">=", std::pow(0.2, 1.0 / p), 1e-3 * std::pow(0.2, 1.0 / p), "haar-bump-error",
                         fit_exact ? "solver" : "attempted-falsification");
    settle(b2, best_fit_value, count);
    w.bounds.push_back(b2);
    double C = std::max(1.0, w.norm);
    w.log.push_back({{"psi", psi}, {"N", N}, {"cells", cells}, {"support", {0.05, 0.95}},
                     {"min_integral_by_method", per_method}, {"scale_C", C},
                     {"scaled_lower", std::pow(1.0 / (5.0 * std::pow(C, p)), 1.0 / p)}});
    return w;
}

// ---------------------------------------------------------------- BV

Witness witness_bv(std::size_t n, std::size_t attempts, std::uint64_t seed, std::size_t nodes) {
    const std::size_t psi = n, N = 6 * std::max<std::size_t>(psi, 1);
    if (static_cast<double>(nodes) < 64.0 * static_cast<double>(N))
        throw ValidationError("witness_bv: grid under-resolves frequency " + std::to_string(N));
    Witness w;
    w.kind = "bv";
    w.seed = seed;
    w.params = {{"type", "bv"}, {"n", n}, {"attempts", attempts}, {"seed", seed}, {"nodes", nodes}};
    w.scheme = {{"kind", "nterm"}, {"dictionary", {{"type", "monomial"}, {"count", 8}}}, {"norm", "bv"},
                {"space", {{"carrier", "grid"}, {"domain", "interval"}, {"a", 0.0}, {"b", kTwoPi}, {"nodes", nodes}, {"p", 1}}}};
    Grid g = Grid::interval(0.0, kTwoPi, nodes);
    const double Nd = static_cast<double>(N);
    w.element = sample(g, [&](double t) { return (1.0 - std::cos(Nd * t)) / (4.0 * Nd); });
    const Eigen::VectorXd& f = w.element.re;
    const auto S = f.size();
    Eigen::VectorXd df = f.tail(S - 1) - f.head(S - 1);
    w.norm = std::abs(f[0]) + df.cwiseAbs().sum();

    auto bn = make_bound(0, "==", 1.0, 1e-3, "bv-unit-norm", "closed-form");
    settle(bn, w.norm);
    w.bounds.push_back(bn);

    const std::size_t K = 8;
    Eigen::MatrixXd dPhi(S - 1, static_cast<Eigen::Index>(K));
    for (std::size_t k = 1; k <= K; ++k) {
        Eigen::VectorXd c(S);
        for (Eigen::Index i = 0; i < S; ++i) c[i] = std::pow(g.nodes[i] / kTwoPi, static_cast<double>(k));
        dPhi.col(static_cast<Eigen::Index>(k - 1)) = c.tail(S - 1) - c.head(S - 1);
    }
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(S - 1);
    double best = w.norm;
    std::size_t count = 0;
    if (n == 0) {
        count = 1;
    } else {
        Rng rng(seed);
        std::size_t subsets = static_cast<std::size_t>(binomial(K, std::min(n, K)));
        std::size_t per = std::max<std::size_t>(1, (attempts + subsets - 1) / subsets);
        for_each_subset(K, std::min(n, K), [&](const std::vector<std::size_t>& F) {
            Eigen::MatrixXd A(S - 1, static_cast<Eigen::Index>(F.size()));
            for (std::size_t c = 0; c < F.size(); ++c) A.col(static_cast<Eigen::Index>(c)) = dPhi.col(static_cast<Eigen::Index>(F[c]));
            for (std::size_t r = 0; r < per; ++r) {
                Eigen::VectorXd sw;
                LinearFit fit;
                if (r == 0) {
                    fit = fit_irls(A, df, ones, 1.0);
                } else {
                    sw.resize(S - 1);
                    for (Eigen::Index i = 0; i < sw.size(); ++i) sw[i] = rng.uniform(0.05, 1.0);
                    IrlsOptions o;
                    o.max_iter = 100;
                    fit = fit_irls(A, df, ones, 1.0, o, &sw);
                }
                // The dictionary vanishes at t = 0, so the point term of the BV norm is |f(0)| = 0.
                best = std::min(best, fit.residual.cwiseAbs().sum());
                ++count;
            }
        });
    }
    auto b = make_bound(n, ">=", 1.0 / 3.0, 1e-3 / 3.0, "bv-third-lower", "attempted-falsification");
    settle(b, best, count);
    w.bounds.push_back(b);
    w.log.push_back({{"psi", psi}, {"N", N}, {"dictionary", "(t/2pi)^k, k = 1..8"}, {"grid_variation", w.norm}});
    return w;
}

// ---------------------------------------------------------------- ridge (one variable)

std::complex<double> exponential_fourier_coefficient(double alpha, long k) {
    double d = alpha - static_cast<double>(k);
    if (std::abs(d) < 1e-12) return 1.0;
    const std::complex<double> I(0.0, 1.0);
    return (std::exp(I * (kTwoPi * alpha)) - 1.0) / (I * kTwoPi * d);
}

namespace {

struct ComplexFit {
    Eigen::VectorXcd coef;
    double value = kInf;
};

// L1 fit of x from columns E (normalized torus measure) by reweighted least squares.
ComplexFit complex_l1_fit(const Eigen::MatrixXcd& E, const Eigen::VectorXcd& x, std::size_t iters = 40) {
    const auto S = x.size();
    Eigen::VectorXd wt = Eigen::VectorXd::Ones(S);
    ComplexFit out;
    for (std::size_t it = 0; it < iters; ++it) {
        Eigen::MatrixXcd G = E.adjoint() * wt.asDiagonal() * E;
        Eigen::VectorXcd rhs = E.adjoint() * wt.asDiagonal() * x;
        G.diagonal().array() += 1e-12 * std::max(1.0, G.diagonal().real().maxCoeff());
        Eigen::VectorXcd c = G.ldlt().solve(rhs);
        Eigen::VectorXd r = (x - E * c).cwiseAbs();
        double v = r.mean();
        if (v < out.value) {
            out.value = v;
            out.coef = c;
        }
        for (Eigen::Index i = 0; i < S; ++i) wt[i] = 1.0 / std::max(r[i], 1e-9);
    }
    return out;
}

}  // namespace

Witness witness_ridge(std::size_t n, std::size_t starts, std::uint64_t seed, std::size_t nodes) {
    if (n == 0) throw ValidationError("witness_ridge: n >= 1");
    const std::size_t K = n * n;
    if (nodes < 16 * K) throw ValidationError("witness_ridge: grid under-resolves frequency " + std::to_string(K));
    Witness w;
    w.kind = "ridge";
    w.seed = seed;
    w.params = {{"type", "ridge"}, {"n", n}, {"starts", starts}, {"seed", seed}, {"nodes", nodes}};
    w.scheme = {{"kind", "exponential-sums"}, {"terms", n - 1}, {"frequencies", "real"},
                {"space", {{"carrier", "grid"}, {"domain", "torus"}, {"nodes", nodes}, {"p", 1}, {"normalized", true}}}};
    Grid g = Grid::torus(nodes);
    const auto S = static_cast<Eigen::Index>(nodes);
    const std::complex<double> I(0.0, 1.0);
    const double inv = 1.0 / static_cast<double>(K);
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(S);
    for (std::size_t k = 1; k <= K; ++k) {
        double sgn = k % 2 ? -1.0 : 1.0;
        for (Eigen::Index i = 0; i < S; ++i) x[i] += sgn * inv * std::exp(I * (static_cast<double>(k) * g.nodes[i]));
    }
    w.element = Element::complex(x);
    w.norm = x.cwiseAbs().mean();

    // Recorded coefficients, checked against a direct transform of the samples.
    json coefs = json::array();
    double coef_dev = 0.0;
    for (std::size_t k = 1; k <= K; ++k) {
        std::complex<double> c = 0.0;
        for (Eigen::Index i = 0; i < S; ++i) c += x[i] * std::exp(-I * (static_cast<double>(k) * g.nodes[i]));
        c /= static_cast<double>(S);
        double expect = (k % 2 ? -1.0 : 1.0) * inv;
        coef_dev = std::max(coef_dev, std::abs(c - expect));
        coefs.push_back({{"k", k}, {"value", expect}});
    }

    const std::size_t m = n - 1;
    double best = w.norm;
    std::size_t count = 1;  // g = 0
    std::size_t fourier_certified = 0;
    double best_fourier = 0.0;
    {
        // g = 0: every coefficient already has modulus 1/n^2.
        best_fourier = inv;
        ++fourier_certified;
    }
    auto columns = [&](const std::vector<double>& al) {
        Eigen::MatrixXcd E(S, static_cast<Eigen::Index>(al.size()));
        for (std::size_t j = 0; j < al.size(); ++j)
            for (Eigen::Index i = 0; i < S; ++i) E(i, static_cast<Eigen::Index>(j)) = std::exp(I * (al[j] * g.nodes[i]));
        return E;
    };
    if (m > 0) {
        Rng rng(seed);
        for (std::size_t st = 0; st < starts; ++st) {
            std::vector<double> al(m);
            for (auto& a : al) a = rng.uniform(0.5, static_cast<double>(K) + 0.5);
            ComplexFit cur = complex_l1_fit(columns(al), x);
            double step = 0.25;
            for (int round = 0; round < 8; ++round, step /= 2.0) {
                for (std::size_t j = 0; j < m; ++j)
                    for (double dir : {-1.0, 1.0}) {
                        std::vector<double> trial = al;
                        trial[j] += dir * step;
                        ComplexFit f = complex_l1_fit(columns(trial), x, 25);
                        if (f.value < cur.value) {
                            cur = f;
                            al = trial;
                        }
                    }
            }
            ++count;
            best = std::min(best, cur.value);
            double fmax = 0.0;
            for (std::size_t k = 1; k <= K; ++k) {
                std::complex<double> y = (k % 2 ? -1.0 : 1.0) * inv;
                for (std::size_t j = 0; j < m; ++j)
                    y -= cur.coef[static_cast<Eigen::Index>(j)] * exponential_fourier_coefficient(al[j], static_cast<long>(k));
                fmax = std::max(fmax, std::abs(y));
            }
            if (fmax >= inv - 1e-12) ++fourier_certified;
            best_fourier = std::min(best_fourier, fmax);
        }
    }
    auto b = make_bound(m, ">=", inv, 1e-3 * inv, "ridge-reciprocal-square", "attempted-falsification");
    settle(b, best, count);
    w.bounds.push_back(b);
    w.log.push_back({{"fourier_coefficients", coefs}, {"coefficient_check_max_dev", coef_dev},
                     {"attempts_with_fourier_certificate", fourier_certified}, {"min_max_fourier_modulus", best_fourier}});
    return w;
}

// ---------------------------------------------------------------- orthonormal n-term

Witness witness_orthonormal_nterm(std::size_t n, std::size_t dim) {
    if (n == 0) throw ValidationError("witness_orthonormal_nterm: n >= 1");
    if (dim < n) throw ValidationError("witness_orthonormal_nterm: dimension below n");
    Witness w;
    w.kind = "orthonormal-nterm";
    w.params = {{"type", "orthonormal-nterm"}, {"n", n}, {"dim", dim}};
    w.scheme = {{"kind", "nterm"}, {"dictionary", {{"type", "orthonormal"}}}, {"space", {{"carrier", "coordinate"}, {"dim", dim}, {"p", 2}}}};
    ApproximationScheme s = build_scheme(w.scheme);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    y.head(static_cast<Eigen::Index>(n)).setConstant(1.0 / static_cast<double>(n));
    w.element = Element::real(y);
    w.norm = s.space.norm(w.element);
    SolveOptions opt;
    opt.exhaustive_cutoff = 1e7;
    BestApprox r = nterm_best_approx(s.space, s.dictionary->matrix, false, y, n - 1, opt);
    double nn = static_cast<double>(n);
    auto eq = make_bound(n - 1, "==", 1.0 / nn, 1e-9, "orthonormal-nterm-exact");
    settle(eq, r.value, static_cast<std::size_t>(binomial(dim, n - 1)));
    auto lo = make_bound(n - 1, ">", 1.0 / (2.0 * nn), 0.0, "orthonormal-nterm-half");
    settle(lo, r.lower, eq.attempts);
    w.bounds.push_back(eq);
    w.bounds.push_back(lo);
    w.log.push_back({{"method", r.method}, {"status", to_string(r.status)}});
    return w;
}

// ---------------------------------------------------------------- Haar wavelet

WaveletSeparation wavelet_separation(std::size_t n, std::uint64_t seed, std::size_t samples) {
    WaveletSeparation L;
    L.target = 1.0 / (8.0 * std::sqrt(static_cast<double>(n + 1)));
    L.samples = samples;
    if (n == 0) return L;
    Rng rng(seed);
    for (int k = 0; k <= 40; ++k) {
        double worst = 0.0;
        // n distinct same-sign atoms of level k in one unit cell.
        {
            StepFunction f;
            std::size_t cells = std::size_t{1} << std::min(k, 30);
            for (std::size_t j = 0; j < std::min(n, cells); ++j) f = axpy(1.0, haar_scaling(k, static_cast<std::int64_t>(j)), f);
            worst = std::max(worst, projection_norm(f, 0) / norm_l2(f));
        }
        for (std::size_t t = 0; t < samples; ++t) {
            StepFunction f;
            bool same_sign = t % 2 == 0;
            for (std::size_t i = 0; i < n; ++i) {
                int ki = k + static_cast<int>(rng.index(4));
                auto span = static_cast<std::int64_t>(1) << std::min(ki, 40);
                auto j = static_cast<std::int64_t>(rng.index(static_cast<std::size_t>(std::min<std::int64_t>(2 * span, 1 << 20))));
                double c = rng.uniform(0.1, 1.0) * (same_sign || rng.uniform() < 0.5 ? 1.0 : -1.0);
                f = axpy(c, haar_scaling(ki, j), f);
            }
            double nf = norm_l2(f);
            if (nf > 0.0) worst = std::max(worst, projection_norm(f, 0) / nf);
        }
        if (worst <= L.target * (1.0 + 1e-12)) {
            L.level = k;
            L.measured = worst;
            return L;
        }
    }
    throw ValidationError("wavelet_separation: no level up to 40 meets the ratio");
}

Witness witness_wavelet(std::size_t n, std::uint64_t seed) {
    Witness w;
    w.kind = "wavelet";
    w.seed = seed;
    w.params = {{"type", "wavelet"}, {"n", n}, {"seed", seed}};
    w.scheme = {{"kind", "haar-scaling-dictionary"}, {"atoms", "2^{k/2} phi(2^k t - j), k, j integers"}, {"space", "L2(R)"}};
    WaveletSeparation L = wavelet_separation(n, seed);
    const int N = n == 0 ? 1 : L.level + 1;
    if (static_cast<int>(n + 1) * N + 1 > 52) throw ValidationError("witness_wavelet: dyadic depth overflow");
    const double c = 1.0 / (8.0 * std::sqrt(static_cast<double>(n + 1)));
    StepFunction x;
    const double amp = 1.0 / std::sqrt(static_cast<double>(n + 1));
    for (std::size_t s = 0; s <= n; ++s) x = axpy(amp, haar_wavelet(static_cast<int>(s) * N, 0), x);
    const double xx = inner(x, x);
    w.norm = std::sqrt(xx);
    {
        // Samples on the finest cells of [0, 1) for the payload.
        int depth = std::min(static_cast<int>(n) * N + 1, 16);
        std::size_t cells = std::size_t{1} << depth;
        Eigen::VectorXd v(static_cast<Eigen::Index>(cells));
        for (std::size_t i = 0; i < cells; ++i) v[static_cast<Eigen::Index>(i)] = x((static_cast<double>(i) + 0.5) / static_cast<double>(cells));
        w.element = Element::real(v);
    }

    struct Atom {
        int k;
        std::int64_t j;
    };
    double best = w.norm;
    std::size_t count = 1;
    json pools = json::array();
    auto search = [&](const std::vector<Atom>& pool, const std::string& label, bool allow_exhaustive) {
        const std::size_t P = pool.size();
        std::vector<StepFunction> fs;
        fs.reserve(P);
        for (const auto& a : pool) fs.push_back(haar_scaling(a.k, a.j));
        Eigen::VectorXd b(static_cast<Eigen::Index>(P));
        for (std::size_t i = 0; i < P; ++i) b[static_cast<Eigen::Index>(i)] = inner(x, fs[i]);
        auto resid = [&](const std::vector<std::size_t>& F) {
            Eigen::MatrixXd G(static_cast<Eigen::Index>(F.size()), static_cast<Eigen::Index>(F.size()));
            Eigen::VectorXd r(static_cast<Eigen::Index>(F.size()));
            for (std::size_t u = 0; u < F.size(); ++u) {
                r[static_cast<Eigen::Index>(u)] = b[static_cast<Eigen::Index>(F[u])];
                for (std::size_t v = 0; v < F.size(); ++v)
                    G(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = inner(fs[F[u]], fs[F[v]]);
            }
            return l2_residual(xx, G, r);
        };
        double local = w.norm;
        std::size_t local_count = 0;
        std::string how;
        if (allow_exhaustive && binomial(P, n) <= 2.5e5) {
            how = "exhaustive";
            for_each_subset(P, n, [&](const std::vector<std::size_t>& F) {
                local = std::min(local, resid(F));
                ++local_count;
            });
        } else {
            how = "greedy+exhaustive-top";
            // Orthogonal matching pursuit.
            std::vector<std::size_t> F;
            for (std::size_t step = 0; step < n; ++step) {
                std::size_t arg = 0;
                double bestv = kInf;
                for (std::size_t i = 0; i < P; ++i) {
                    if (std::find(F.begin(), F.end(), i) != F.end()) continue;
                    F.push_back(i);
                    double v = resid(F);
                    F.pop_back();
                    if (v < bestv) {
                        bestv = v;
                        arg = i;
                    }
                }
                F.push_back(arg);
                ++local_count;
            }
            local = std::min(local, resid(F));
            // Exhaustive over the atoms most correlated with x.
            std::vector<std::size_t> idx(P);
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](std::size_t u, std::size_t v) {
                return std::abs(b[static_cast<Eigen::Index>(u)]) > std::abs(b[static_cast<Eigen::Index>(v)]);
            });
            std::size_t top = std::min<std::size_t>(P, 48);
            for_each_subset(top, n, [&](const std::vector<std::size_t>& T) {
                std::vector<std::size_t> F2;
                for (auto t : T) F2.push_back(idx[t]);
                local = std::min(local, resid(F2));
                ++local_count;
            });
        }
        best = std::min(best, local);
        count += local_count;
        pools.push_back({{"pool", label}, {"atoms", P}, {"search", how}, {"attempts", local_count}, {"min_residual", local}});
    };

    if (n > 0) {
        // Atoms localized at the breakpoints of x.
        std::vector<double> brk = {0.0, 1.0};
        for (std::size_t s = 0; s <= n; ++s) {
            brk.push_back(std::ldexp(1.0, -static_cast<int>(s) * N - 1));
            brk.push_back(std::ldexp(1.0, -static_cast<int>(s) * N));
        }
        std::vector<Atom> pool;
        const int kmax = static_cast<int>(n) * N + 2;
        for (int k = -2; k <= kmax; ++k) {
            std::vector<std::int64_t> js;
            if (k <= 3) {
                for (std::int64_t j = -1; j <= (std::int64_t{1} << std::max(k, 0)); ++j) js.push_back(j);
            } else {
                for (double t : brk) {
                    auto j0 = static_cast<std::int64_t>(std::floor(std::ldexp(t, k)));
                    for (std::int64_t d = -1; d <= 1; ++d) js.push_back(j0 + d);
                }
            }
            std::sort(js.begin(), js.end());
            js.erase(std::unique(js.begin(), js.end()), js.end());
            for (auto j : js) pool.push_back({k, j});
        }
        search(pool, "localized", true);

        // Truncated dictionary: levels 0..9 on [0, 1) plus phi_{-1,0}.
        std::vector<Atom> trunc = {{-1, 0}};
        for (int k = 0; k <= 9; ++k)
            for (std::int64_t j = 0; j < (std::int64_t{1} << k); ++j) trunc.push_back({k, j});
        search(trunc, "truncated-2^10", n == 1);
    }

    auto bd = make_bound(n, ">=", c, 1e-12, "wavelet-eighth-lower", "attempted-falsification");
    settle(bd, best, count);
    w.bounds.push_back(bd);
    w.log.push_back({{"separation_level_measured", L.level}, {"N", N}, {"measured_ratio", L.measured},
                     {"target_ratio", L.target}, {"lemma_samples", L.samples}, {"c", c}, {"pools", pools}});
    return w;
}

// ---------------------------------------------------------------- translates

Witness witness_translates(std::size_t n, std::size_t m, double p, std::size_t trials, std::uint64_t seed) {
    if (m <= n) throw ValidationError("witness_translates: need m > n");
    if (!(p >= 1.0) || std::isinf(p)) throw ValidationError("witness_translates: exponent must lie in [1, inf)");
    const double a = 3.0, width = 1.0;  // a = |I| + 2
    Witness w;
    w.kind = "translates";
    w.seed = seed;
    w.params = {{"type", "translates"}, {"n", n}, {"m", m}, {"p", p}, {"trials", trials}, {"seed", seed}};
    w.scheme = {{"kind", "translates-dictionary"}, {"atom", "indicator of [0, 1]"}, {"p", p}, {"space", "Lp(R)"}};
    const double amp = std::pow(static_cast<double>(m), -1.0 / p);
    std::vector<double> blocks;
    for (std::size_t i = 1; i <= m; ++i) blocks.push_back(a * static_cast<double>(i));
    {
        std::vector<double> br;
        for (double b : blocks) {
            br.push_back(b);
            br.push_back(b + width);
        }
        Grid g = Grid::partition(br);
        QuasiNormedSpace X = QuasiNormedSpace::lp_grid(g, p);
        Element f = sample(g, [&](double t) {
            for (double b : blocks)
                if (t >= b && t < b + width) return amp;
            return 0.0;
        });
        w.element = f;
        w.norm = X.norm(f);
    }

    // Exact distance of x from the best combination of translates at tau, on the common partition.
    auto evaluate = [&](const std::vector<double>& tau) {
        std::vector<double> br;
        for (double b : blocks) {
            br.push_back(b);
            br.push_back(b + width);
        }
        for (double t : tau) {
            br.push_back(t);
            br.push_back(t + width);
        }
        std::sort(br.begin(), br.end());
        br.erase(std::unique(br.begin(), br.end()), br.end());
        Grid g = Grid::partition(br);
        Eigen::VectorXd fv(g.nodes.size());
        for (Eigen::Index i = 0; i < fv.size(); ++i) {
            double t = g.nodes[i];
            fv[i] = 0.0;
            for (double b : blocks)
                if (t >= b && t < b + width) fv[i] = amp;
        }
        if (tau.empty()) return weighted_norm(fv, g.weights, p);
        Eigen::MatrixXd Phi(g.nodes.size(), static_cast<Eigen::Index>(tau.size()));
        for (std::size_t j = 0; j < tau.size(); ++j)
            for (Eigen::Index i = 0; i < fv.size(); ++i)
                Phi(i, static_cast<Eigen::Index>(j)) = g.nodes[i] >= tau[j] && g.nodes[i] < tau[j] + width ? 1.0 : 0.0;
        LinearFit fit = fit_linear(Phi, fv, g.weights, p);
        return weighted_norm(fit.residual, g.weights, p);
    };

    double best = kInf;
    std::size_t count = 0, aligned = 0;
    Rng rng(seed);
    if (n == 0) {
        best = evaluate({});
        count = 1;
    } else {
        std::vector<double> first;
        for (std::size_t i = 0; i < n; ++i) first.push_back(blocks[i]);
        best = std::min(best, evaluate(first));
        ++count;
        ++aligned;
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<double> tau(n);
            std::size_t mode = t % 3;
            for (auto& v : tau) {
                if (mode == 0) v = rng.uniform(0.0, a * static_cast<double>(m + 1));
                else if (mode == 1) v = blocks[rng.index(m)] + rng.uniform(-0.5, 0.5);
                else v = blocks[rng.index(m)];
            }
            if (mode == 2) ++aligned;
            best = std::min(best, evaluate(tau));
            ++count;
        }
    }
    double bound = std::pow(static_cast<double>(m - n) / static_cast<double>(m), 1.0 / p);
    auto b = make_bound(n, ">=", bound, 1e-9, "translates-block-count", "attempted-falsification");
    settle(b, best, count);
    w.bounds.push_back(b);
    w.log.push_back({{"spacing", a}, {"support", width}, {"aligned_placements", aligned}, {"min_distance", best}});
    return w;
}

// ---------------------------------------------------------------- tensor

Witness witness_tensor(std::size_t n, const std::string& norm) {
    if (n == 0) throw ValidationError("witness_tensor: n >= 1");
    Witness w;
    w.kind = "tensor";
    w.params = {{"type", "tensor"}, {"n", n}, {"norm", norm}};
    w.scheme = {{"kind", "rank"}, {"space", {{"carrier", "matrix"}, {"dim", n}, {"norm", norm}}}};
    ApproximationScheme s = build_scheme(w.scheme);
    const double nn = static_cast<double>(n);
    w.element = Element::matrix(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) / nn);
    w.norm = s.space.norm(w.element);
    for (std::size_t k = 0; k < n; ++k) {
        double v = best_approx(s, w.element, k).value;
        double formula = s.space.kind == NormKind::hs ? std::sqrt(static_cast<double>(n - k)) / nn : 1.0 / nn;
        auto b = make_bound(k, "==", formula, 1e-12, "tensor-tail-singular-values");
        settle(b, v);
        w.bounds.push_back(b);
        if (k + 1 == n) {
            auto lo = make_bound(k, ">=", 1.0 / (nn * nn), 1e-9, "tensor-rank-lower");
            settle(lo, v);
            w.bounds.push_back(lo);
        }
    }
    return w;
}

// ---------------------------------------------------------------- members and slow decay

std::vector<Element> structured_members(const ApproximationScheme& s, std::size_t level, Rng& rng,
                                        std::size_t random_count) {
    std::vector<Element> out;
    const QuasiNormedSpace& X = s.space;
    auto push = [&](Element e) {
        double nv = X.norm(e);
        if (nv > 0.0 && std::isfinite(nv)) out.push_back(e.scaled(1.0 / nv));
    };
    const auto S = static_cast<Eigen::Index>(X.sample_count());
    if (level > 0) {
        switch (s.kind) {
            case SchemeKind::subspace_chain:
                if (level <= s.levels) push(Element::real(s.basis_cache.col(static_cast<Eigen::Index>(level - 1))));
                break;
            case SchemeKind::interleaved_c0: {
                if (level % 2 == 0) {
                    std::size_t k = level / 2;
                    if (static_cast<Eigen::Index>(k) < S) {
                        Eigen::VectorXd v = Eigen::VectorXd::Zero(S);
                        v[0] = 1.0;
                        v[static_cast<Eigen::Index>(k)] = 1.0 / static_cast<double>(k + 1);
                        push(Element::real(v));
                    }
                } else {
                    std::size_t k = (level + 1) / 2;
                    if (static_cast<Eigen::Index>(k) <= S) push(Element::real(Eigen::VectorXd::Unit(S, static_cast<Eigen::Index>(k - 1))));
                }
                break;
            }
            case SchemeKind::nterm:
            case SchemeKind::wavelet_haar:
                for (std::size_t i = 0; i < std::min<std::size_t>(level, s.dictionary->size()); ++i) push(s.dictionary->atoms[i]);
                break;
            case SchemeKind::quantizer: {
                std::size_t M = s.budget(level);
                if (M >= 1 && X.carrier != Carrier::matrix) {
                    Eigen::VectorXd ramp(S);
                    for (Eigen::Index i = 0; i < S; ++i)
                        ramp[i] = S > 1 ? 2.0 * static_cast<double>(i) / static_cast<double>(S - 1) - 1.0 : 1.0;
                    Eigen::VectorXd q(S);
                    double Md = static_cast<double>(M);
                    for (Eigen::Index i = 0; i < S; ++i) {
                        double cell = std::min(Md - 1.0, std::floor((ramp[i] + 1.0) / 2.0 * Md));
                        q[i] = -1.0 + (2.0 * cell + 1.0) / Md;
                    }
                    push(Element::real(q));
                }
                break;
            }
            case SchemeKind::rank: {
                Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(X.dim), static_cast<Eigen::Index>(X.dim));
                for (std::size_t i = 0; i < std::min(level, X.dim); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
                push(Element::matrix(m));
                break;
            }
            case SchemeKind::spline: break;
        }
    }
    for (std::size_t r = 0; r < random_count; ++r) push(s.sample_member(level, rng));
    return out;
}

Witness construct_slow_decay(const ApproximationScheme& s, const NullSequence& eps, std::size_t i_max,
                             std::uint64_t seed) {
    eps.validate();
    if (eps.size() == 0) throw ValidationError("construct_slow_decay: empty sequence");
    if (i_max > s.max_level()) throw ValidationError("construct_slow_decay: i_max beyond the scheme's levels");
    Witness w;
    w.kind = "slow-decay";
    w.seed = seed;
    w.scheme = s.descriptor;
    w.params = {{"type", "slow-decay"}, {"scheme", s.descriptor}, {"eps", to_json(eps)}, {"i_max", i_max}, {"seed", seed}};
    Rng rng(seed);
    const QuasiNormedSpace& X = s.space;

    std::vector<SlowDecayStep> ladder;
    Element x = s.zero();
    std::size_t i_prev = 0;
    double delta_prev = 0.0, dhat_prev = 0.0;
    std::string halted;
    for (std::size_t j = 1; i_prev <= i_max; ++j) {
        auto K = s.gap(i_prev);
        if (!K) {
            halted = "gap rule has no value at " + std::to_string(i_prev);
            break;
        }
        std::size_t member = *K + 1;
        auto next = s.gap(member);
        if (member > s.max_level() || !next) {
            halted = "member level " + std::to_string(member) + " beyond the scheme";
            break;
        }
        // Certified distance of the best unit member of A_member from A_{K(i_{j-1})}.
        Element y;
        double dhat = 0.0;
        for (auto& cand : structured_members(s, member, rng, 6)) {
            double d = best_approx(s, cand, *K).lower;
            if (d > dhat) {
                dhat = d;
                y = cand;
            }
        }
        if (!(dhat > 0.0)) {
            halted = "no density certificate at level " + std::to_string(*K);
            break;
        }
        std::size_t i_j = *next;
        double delta = eps.extended(i_j) / 2.0;
        if (j > 1) delta = std::min(delta, delta_prev * dhat_prev / 4.0);
        if (!(delta > 0.0)) {
            halted = "sequence vanishes at " + std::to_string(i_j);
            break;
        }
        x = x + y.scaled(delta);
        ladder.push_back({i_j, delta, dhat, member});
        delta_prev = delta;
        dhat_prev = dhat;
        i_prev = i_j;
    }
    w.element = x;
    w.norm = X.norm(x);

    for (std::size_t i = 0; i <= i_max; ++i) {
        BestApprox r = best_approx(s, x, i);
        auto pos = make_bound(i, ">", 0.0, 0.0, "slow-decay-positive");
        settle(pos, r.lower);
        auto env = make_bound(i, "<=", eps.extended(i), 1e-12 * std::max(1.0, w.norm), "slow-decay-envelope");
        settle(env, r.value);
        w.bounds.push_back(pos);
        w.bounds.push_back(env);
    }
    // Ladder inequality: E(x, A_{i_{j-1}}) > dhat_j delta_j / 3.
    std::size_t prev = 0;
    json lj = json::array();
    for (const auto& st : ladder) {
        if (prev <= s.max_level()) {
            auto b = make_bound(prev, ">", st.dhat * st.delta / 3.0, 0.0, "slow-decay-ladder");
            settle(b, best_approx(s, x, prev).lower);
            w.bounds.push_back(b);
        }
        lj.push_back({{"i", st.index}, {"delta", st.delta}, {"dhat", st.dhat}, {"member_level", st.member_level}});
        prev = st.index;
    }
    w.log.push_back({{"ladder", lj}, {"halted", halted}});
    auto done = make_bound(i_max, ">", static_cast<double>(i_max), 0.0, "slow-decay-ladder-complete", "closed-form");
    settle(done, static_cast<double>(prev));
    w.bounds.push_back(done);
    return w;
}

JumpResult find_jump_element(const ApproximationScheme& s, std::size_t n, double c, const std::vector<Element>& pool,
                             const SolveOptions& opt) {
    if (!(c > 0.0)) throw ValidationError("find_jump_element: c must be positive");
    auto K = s.gap(n);
    if (!K || *K > s.max_level()) throw InsufficientWindow("find_jump_element: K(n) beyond the scheme's levels");
    JumpResult out;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const Element& x = pool[i];
        double xn = s.space.norm(x);
        if (!(xn > 0.0)) continue;
        BestApprox en = best_approx(s, x, n, opt);
        if (!(en.lower > 1e-9 * xn)) continue;  // x may lie in the closure of A_n
        BestApprox ek = best_approx(s, x, *K, opt);
        double ratio = ek.lower > 0.0 ? en.value / ek.lower : kInf;
        if (ratio < out.ratio) {
            out.ratio = ratio;
            out.candidate = i;
            out.element = x;
        }
    }
    out.found = out.ratio <= c;
    if (!out.found) out.element.reset();
    return out;
}

// ---------------------------------------------------------------- replay

Witness witness_from_params(const json& p) {
    std::string type = p.at("type").get<std::string>();
    auto sz = [&](const char* k, std::size_t d) { return p.value(k, d); };
    auto seed = [&]() { return p.value("seed", std::uint64_t{1}); };
    if (type == "c0") return witness_c0(sequence_from_json(p.at("eps")), sz("dim_cap", 64));
    if (type == "quantizer") return witness_quantizer(ValueBudget::from_json(p.at("m")), sz("levels", 8), sz("nodes", 2049));
    if (type == "haar-bumps")
        return witness_haar_bumps(sz("n", 1), basis_family_from_string(p.value("family", "monomial")), p_from(p.value("p", json(1.0))),
                                  sz("attempts", 100), seed(), sz("nodes", 0));
    if (type == "bv") return witness_bv(sz("n", 1), sz("attempts", 100), seed(), sz("nodes", 4097));
    if (type == "ridge") return witness_ridge(sz("n", 2), sz("starts", 100), seed(), sz("nodes", 4096));
    if (type == "orthonormal-nterm") return witness_orthonormal_nterm(sz("n", 1), sz("dim", 8));
    if (type == "wavelet") return witness_wavelet(sz("n", 1), seed());
    if (type == "translates") return witness_translates(sz("n", 1), sz("m", 4), p_from(p.value("p", json(1.0))), sz("trials", 1000), seed());
    if (type == "tensor") return witness_tensor(sz("n", 2), p.value("norm", "hs"));
    if (type == "slow-decay")
        return construct_slow_decay(build_scheme(p.at("scheme")), sequence_from_json(p.at("eps")), sz("i_max", 8), seed());
    throw ValidationError("unknown witness type '" + type + "'");
}

json verify_witness_bundle(const json& bundle) {
    Witness w = witness_from_params(bundle.at("params"));
    json mismatches = json::array();
    if (bundle.contains("element")) {
        Element stored = element_from_json(bundle.at("element"));
        bool same = stored.kind == w.element.kind && stored.size() == w.element.size();
        if (same) {
            Element d = stored - w.element;
            double dev = d.kind == Element::Kind::matrix ? d.mat.cwiseAbs().maxCoeff()
                         : d.kind == Element::Kind::complex ? d.cx.cwiseAbs().maxCoeff()
                                                            : (d.re.size() ? d.re.cwiseAbs().maxCoeff() : 0.0);
            same = dev <= 1e-12 * std::max(1.0, w.norm);
        }
        if (!same) mismatches.push_back({{"what", "element"}});
    }
    const auto& stored = bundle.at("bounds");
    if (stored.size() != w.bounds.size()) mismatches.push_back({{"what", "bound count"}});
    for (std::size_t i = 0; i < std::min(stored.size(), w.bounds.size()); ++i) {
        WitnessBound sb = WitnessBound::from_json(stored[i]);
        const WitnessBound& rb = w.bounds[i];
        bool ok = sb.tag == rb.tag && sb.n == rb.n && sb.relation == rb.relation;
        ok = ok && std::abs(sb.bound - rb.bound) <= 1e-12 * std::max(1.0, std::abs(rb.bound));
        ok = ok && check_relation(sb.relation, rb.computed, sb.bound, sb.tol) && rb.verified;
        if (!ok) mismatches.push_back({{"index", i}, {"tag", sb.tag}, {"n", sb.n}, {"recorded_bound", sb.bound},
                                       {"recomputed", rb.computed}});
    }
    return {{"ok", mismatches.empty()}, {"mismatches", mismatches}, {"bounds", w.bounds.size()}};
}

}  // namespace lethargy
