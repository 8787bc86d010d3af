#include "lethargy/analyze.hpp"

#include <algorithm>
#include <cmath>

#include "lethargy/witness.hpp"

namespace lethargy {

using nlohmann::json;

namespace {

double status_tol(const QuasiNormedSpace& X) { return X.carrier == Carrier::grid ? 1e-3 : 1e-9; }

Element unit(const QuasiNormedSpace& X, const Element& e) {
    double nv = X.norm(e);
    return nv > 0.0 && std::isfinite(nv) ? e.scaled(1.0 / nv) : e;
}

Element random_element(const QuasiNormedSpace& X, Rng& rng) {
    if (X.carrier == Carrier::matrix) {
        auto d = static_cast<Eigen::Index>(X.dim);
        Eigen::MatrixXd m(d, d);
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) m(i, j) = rng.normal();
        return Element::matrix(m);
    }
    Eigen::VectorXd v(static_cast<Eigen::Index>(X.sample_count()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
    return Element::real(v);
}

// A smooth random function on a grid: a few random cosines plus a ramp.
Element random_smooth(const QuasiNormedSpace& X, Rng& rng) {
    const Grid& g = *X.grid;
    double a0 = rng.normal(), a1 = rng.normal();
    std::vector<double> amp(6), ph(6);
    for (std::size_t k = 0; k < 6; ++k) {
        amp[k] = rng.normal() / static_cast<double>((k + 1) * (k + 1));
        ph[k] = rng.uniform(0.0, 6.283185307179586);
    }
    const bool torus = g.domain == Domain::torus;
    return sample(g, [&](double t) {
        double u = (t - g.a) / g.length();
        double v = a0 + (torus ? 0.0 : a1 * u);
        for (std::size_t k = 0; k < 6; ++k) v += amp[k] * std::cos(6.283185307179586 * static_cast<double>(k + 1) * u + ph[k]);
        return v;
    });
}

std::vector<double> ramp_values(std::size_t S) {
    std::vector<double> v(S);
    for (std::size_t i = 0; i < S; ++i) v[i] = S > 1 ? 2.0 * static_cast<double>(i) / static_cast<double>(S - 1) - 1.0 : 1.0;
    return v;
}

}  // namespace

json DensityCertificate::to_json(bool with_element) const {
    json j = {{"n", n},           {"bound", bound},         {"solver_value", solver_value},
              {"direction", direction}, {"status", lethargy::to_string(status)}, {"source", source}};
    if (with_element) j["element"] = element_to_json(element);
    return j;
}

std::vector<Candidate> density_candidates(const ApproximationScheme& s, std::size_t n, std::uint64_t seed,
                                          std::size_t random_count) {
    const QuasiNormedSpace& X = s.space;
    std::vector<Candidate> out;
    auto push = [&](const std::string& src, const Element& e) {
        double nv = X.norm(e);
        if (nv > 0.0 && std::isfinite(nv)) out.push_back({src, e.scaled(1.0 / nv)});
    };
    const auto S = X.sample_count();
    Rng rng(seed ^ (0x64656e73ULL + n));
    switch (X.carrier) {
        case Carrier::grid: {
            const Grid& g = *X.grid;
            std::size_t psi = s.zero_bound_at(n).value_or(n + 1);
            if (s.kind == SchemeKind::spline) psi = (n + 1) * s.degree_bound + n;
            for (std::size_t cells : {4 * (psi + 1), 4 * (psi + 1) + 4}) {
                if (static_cast<double>(S) * 0.9 / static_cast<double>(cells) >= 4.0)
                    push("bumps-" + std::to_string(cells), haar_bump_element(g, cells, X.p));
            }
            std::vector<double> r = ramp_values(S);
            push("ramp", Element::real(Eigen::Map<Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(S))));
            push("exp", sample(g, [&](double t) { return std::exp((t - g.a) / g.length()); }));
            push("cos", sample(g, [&](double t) { return std::cos(6.283185307179586 * (t - g.a) / g.length()); }));
            break;
        }
        case Carrier::coordinate: {
            auto D = static_cast<Eigen::Index>(S);
            push("e_last", Element::real(Eigen::VectorXd::Unit(D, D - 1)));
            push("e_first", Element::real(Eigen::VectorXd::Unit(D, 0)));
            push("flat", Element::real(Eigen::VectorXd::Ones(D)));
            std::vector<double> r = ramp_values(S);
            push("ramp", Element::real(Eigen::Map<Eigen::VectorXd>(r.data(), D)));
            break;
        }
        case Carrier::matrix: {
            auto d = static_cast<Eigen::Index>(X.dim);
            push("identity", Element::matrix(Eigen::MatrixXd::Identity(d, d)));
            break;
        }
    }
    for (std::size_t k = 0; k < random_count; ++k) {
        if (X.carrier == Carrier::grid && k % 2 == 0) push("random-smooth", random_smooth(X, rng));
        else push("random", random_element(X, rng));
    }
    return out;
}

DensityCertificate density_lower_bound(const ApproximationScheme& s, std::size_t n, const std::vector<Candidate>& pool,
                                       const SolveOptions& opt) {
    if (pool.empty()) throw ValidationError("density_lower_bound: empty candidate pool");
    std::vector<BestApprox> res(pool.size());
    std::vector<Element> units(pool.size());
    std::vector<std::string> errors(pool.size());
    SolveOptions inner = opt;
    inner.threads = 1;
    parallel_for(pool.size(), opt.threads, [&](std::size_t i) {
        units[i] = unit(s.space, pool[i].element);
        try {
            res[i] = best_approx(s, units[i], n, inner);
        } catch (const NoSolver& e) {
            errors[i] = e.what();
        }
    });
    DensityCertificate c;
    c.n = n;
    bool any = false;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!errors[i].empty()) continue;
        double b = std::clamp(res[i].lower, 0.0, 1.0);
        if (!any || b > c.bound) {
            any = true;
            c.bound = b;
            c.element = units[i];
            c.solver_value = res[i].value;
            c.status = res[i].status;
            c.source = pool[i].source;
        }
    }
    if (!any) throw NoSolver("density_lower_bound: no candidate could be solved at level " + std::to_string(n));
    return c;
}

DensityUpper density_upper_estimate(const ApproximationScheme& s, std::size_t n, const std::vector<Candidate>& probes,
                                    const SolveOptions& opt) {
    DensityUpper u;
    u.n = n;
    if (s.kind == SchemeKind::quantizer && s.space.is_sup()) {
        std::size_t m = s.budget(n);
        u.value = m == 0 ? 1.0 : 1.0 / static_cast<double>(m);
        u.certified = true;
        u.label = "certified";
        return u;
    }
    u.label = "empirical probe max";
    u.value = 0.0;
    for (const auto& c : probes) {
        Element e = unit(s.space, c.element);
        u.value = std::max(u.value, best_approx(s, e, n, opt).value);
    }
    u.value = std::min(u.value, 1.0);
    return u;
}

json density_profile_check(const ApproximationScheme& s, std::size_t n_max, const std::string& pairing_in,
                           std::uint64_t seed, std::size_t probes) {
    n_max = std::min(n_max, s.max_level());
    std::string pairing = pairing_in;
    if (pairing == "default")
        pairing = (s.kind == SchemeKind::nterm || s.kind == SchemeKind::wavelet_haar) ? "sum" : "gap";
    std::vector<double> lower(n_max + 1), upper(n_max + 1);
    std::vector<std::string> upper_label(n_max + 1);
    SolveOptions opt;
    opt.seed = seed;
    for (std::size_t n = 0; n <= n_max; ++n) {
        auto pool = density_candidates(s, n, seed, probes);
        lower[n] = density_lower_bound(s, n, pool, opt).bound;
        DensityUpper u = density_upper_estimate(s, n, pool, opt);
        upper[n] = u.value;
        upper_label[n] = u.label;
    }
    // dens is non-increasing: lower(n) >= lower(k) for k > n, upper(n) <= upper(k) for k < n.
    for (std::size_t n = n_max; n-- > 0;) lower[n] = std::max(lower[n], lower[n + 1]);
    for (std::size_t n = 1; n <= n_max; ++n) upper[n] = std::min(upper[n], upper[n - 1]);
    const double tol = status_tol(s.space);
    json flagged = json::array();
    std::size_t checked = 0;
    for (std::size_t m = 0; m <= n_max; ++m)
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::optional<std::size_t> L;
            if (pairing == "sum") L = m + n;
            else if (pairing == "max") L = std::max(m, n);
            else if (pairing == "gap") L = s.gap(std::max(m, n));
            else throw ValidationError("unknown pairing '" + pairing + "'");
            if (!L || *L > n_max) continue;
            ++checked;
            if (lower[*L] > upper[m] * upper[n] + tol)
                flagged.push_back({{"m", m}, {"n", n}, {"L", *L}, {"lower", lower[*L]}, {"upper_m", upper[m]}, {"upper_n", upper[n]}});
        }
    return {{"pairing", pairing}, {"lower", lower}, {"upper", upper}, {"upper_label", upper_label},
            {"pairs_checked", checked}, {"flagged", flagged}, {"consistent", flagged.empty()}, {"tol", tol}};
}

json ShapiroVerdict::to_json() const {
    json cj = json::array();
    for (const auto& c : certificates) cj.push_back(c.to_json());
    return {{"verdict", verdict}, {"certificates", cj}, {"envelope", envelope}, {"c", c},
            {"gamma", gamma},     {"probes", probes},   {"threshold", kShapiroThreshold}, {"log", log}};
}

ShapiroVerdict shapiro_check(const ApproximationScheme& s, std::size_t n_max, std::size_t probe_budget,
                             std::uint64_t seed) {
    ShapiroVerdict v;
    n_max = std::min(n_max, s.max_level());
    SolveOptions opt;
    opt.seed = seed;
    v.c = 1.0;
    std::vector<std::vector<Candidate>> pools(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        pools[n] = density_candidates(s, n, seed, std::max<std::size_t>(2, probe_budget / 4));
        DensityCertificate c = density_lower_bound(s, n, pools[n], opt);
        v.c = std::min(v.c, c.bound);
        v.certificates.push_back(c);
    }

    const bool envelope_kind = s.kind == SchemeKind::quantizer && s.space.is_sup();
    if (envelope_kind) {
        // Envelope 1/m(n), checked on every probe.
        Rng rng(seed ^ 0x656e76ULL);
        std::vector<Element> probes;
        for (std::size_t k = 0; k < probe_budget; ++k) {
            Element e = s.space.carrier == Carrier::grid && k % 2 ? random_smooth(s.space, rng) : random_element(s.space, rng);
            probes.push_back(unit(s.space, e));
        }
        for (const auto& pool : pools)
            for (const auto& c : pool) probes.push_back(unit(s.space, c.element));
        v.probes = probes.size();
        std::size_t violations = 0;
        json worst = json::array();
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::size_t m = s.budget(n);
            double env = m == 0 ? 1.0 : 1.0 / static_cast<double>(m);
            v.envelope.push_back(env);
            double w = 0.0;
            for (const auto& x : probes) {
                double e = best_approx(s, x, n, opt).value;
                w = std::max(w, e);
                if (e > env * s.space.norm(x) + 1e-12) ++violations;
            }
            worst.push_back(w);
        }
        v.log["envelope_violations"] = violations;
        v.log["worst_probe_ratio"] = worst;
        bool decays = v.envelope.size() > 1 && v.envelope.back() < v.envelope.front();
        if (violations == 0 && decays) {
            v.verdict = "Shapiro-fails";
        } else {
            v.envelope.clear();
            v.verdict = "inconclusive";
        }
    } else {
        v.probes = 0;
        for (const auto& p : pools) v.probes += p.size();
        v.verdict = v.c >= kShapiroThreshold ? "consistent-with-Shapiro" : "inconclusive";
    }
    json glog;
    v.gamma = n_max >= 1 ? brudnyi_gap(s, n_max - 1, 4, seed, &glog) : 0.0;
    v.log["gamma_per_level"] = glog;
    return v;
}

double brudnyi_gap(const ApproximationScheme& s, std::size_t n_max, std::size_t samples, std::uint64_t seed, json* log) {
    if (s.max_level() == 0) throw InsufficientWindow("brudnyi_gap: scheme has a single level");
    n_max = std::min(n_max, s.max_level() - 1);
    Rng rng(seed ^ 0x6272756eULL);
    SolveOptions opt;
    opt.seed = seed;
    double gamma = kInf;
    json per = json::array();
    for (std::size_t n = 0; n <= n_max; ++n) {
        double best = 0.0;
        for (const auto& a : structured_members(s, n + 1, rng, samples)) {
            BestApprox r = best_approx(s, a, n, opt);
            best = std::max(best, r.status == FitStatus::exact ? r.value : r.lower);
        }
        per.push_back({{"n", n}, {"value", best}});
        gamma = std::min(gamma, best);
    }
    if (log) *log = per;
    return gamma;
}

json property_P_check(const ApproximationScheme& s, double a, double b, const std::vector<std::size_t>& levels,
                      std::uint64_t seed) {
    if (!(a > 0.0) || !(b > 0.0)) throw ValidationError("property_P_check: a, b must be positive");
    json rows = json::array();
    bool all = true;
    for (std::size_t n : levels) {
        if (n == 0 || n > s.max_level()) continue;
        auto pool = density_candidates(s, n, seed);
        if (s.kind == SchemeKind::nterm && s.dictionary->label == "orthonormal" && n + 1 <= s.space.sample_count()) {
            Witness w = witness_orthonormal_nterm(n + 1, s.space.sample_count());
            pool.push_back({"orthonormal-witness", w.element});
        }
        DensityCertificate c = density_lower_bound(s, n, pool);
        double need = 1.0 / (a * std::pow(static_cast<double>(n), b));
        bool ok = c.bound >= need;
        all = all && ok;
        rows.push_back({{"n", n}, {"certificate", c.bound}, {"required", need}, {"source", c.source}, {"pass", ok}});
    }
    return {{"a", a}, {"b", b}, {"levels", rows}, {"pass", all}};
}

double seminorm(const ApproximationScheme& s, const std::string& Y, const Element& x) {
    const QuasiNormedSpace& X = s.space;
    if (Y == "same") return X.norm(x);
    if (Y == "lipschitz" || Y == "derivative-sup" || Y == "bv") {
        if (X.carrier != Carrier::grid || x.kind != Element::Kind::real)
            throw ValidationError("seminorm '" + Y + "' needs a real grid function");
        const Grid& g = *X.grid;
        const Eigen::VectorXd& v = x.re;
        const auto S = v.size();
        double lip = 0.0, tv = 0.0;
        for (Eigen::Index i = 0; i + 1 < S; ++i) {
            double d = std::abs(v[i + 1] - v[i]);
            tv += d;
            lip = std::max(lip, d / (g.nodes[i + 1] - g.nodes[i]));
        }
        if (g.domain == Domain::torus && S > 1) {
            double d = std::abs(v[0] - v[S - 1]);
            tv += d;
            lip = std::max(lip, d / (g.b - g.nodes[S - 1] + g.nodes[0] - g.a));
        }
        if (Y == "bv") return tv + (g.domain == Domain::torus ? 0.0 : std::abs(v[0]));
        return lip;
    }
    if (Y == "weighted") {
        if (X.carrier != Carrier::coordinate) throw ValidationError("seminorm 'weighted' needs a coordinate carrier");
        Eigen::VectorXd v = x.re;
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] *= static_cast<double>(i + 1);
        return X.norm(Element::real(v));
    }
    throw ValidationError("unsupported seminorm '" + Y + "'");
}

json jackson_audit(const ApproximationScheme& s, const std::string& Y, std::size_t samples, std::size_t n_max,
                   std::uint64_t seed) {
    n_max = std::min(n_max, s.max_level());
    Rng rng(seed);
    const QuasiNormedSpace& X = s.space;
    std::vector<Element> xs;
    if (X.carrier == Carrier::grid) {
        std::vector<double> r = ramp_values(X.sample_count());
        xs.push_back(Element::real(Eigen::Map<Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()))));
    }
    while (xs.size() < samples) xs.push_back(X.carrier == Carrier::grid ? random_smooth(X, rng) : random_element(X, rng));
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = seminorm(s, Y, xs[i]);
    std::vector<double> c(n_max + 1, kInf);
    SolveOptions opt;
    opt.seed = seed;
    parallel_for(n_max + 1, 0, [&](std::size_t n) {
        SolveOptions o = opt;
        o.threads = 1;
        double best = kInf;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double e = best_approx(s, xs[i], n, o).value;
            if (e > 1e-14 * std::max(1.0, X.norm(xs[i]))) best = std::min(best, ys[i] / e);
        }
        c[n] = best;
    });
    json cj = json::array();
    for (double v : c) cj.push_back(std::isfinite(v) ? json(v) : json("inf"));
    double first = std::isfinite(c[0]) ? c[0] : 0.0;
    if (n_max >= 1 && std::isfinite(c[1])) first = std::max(first, c[1]);
    bool growing = n_max >= 2 && (!std::isfinite(c[n_max]) || c[n_max] > 2.0 * first);
    return {{"seminorm", Y}, {"samples", xs.size()}, {"seed", seed}, {"c", cj}, {"growing", growing},
            {"kind", "descriptive fit"}};
}

json bernstein_audit(const ApproximationScheme& s, const std::string& Y, std::size_t samples, std::size_t n_max,
                     std::uint64_t seed) {
    n_max = std::min(n_max, s.max_level());
    Rng rng(seed);
    json rows = json::array();
    for (std::size_t n = 0; n <= n_max; ++n) {
        double b = 0.0;
        std::size_t degenerate = 0, used = 0;
        for (std::size_t k = 0; k < samples; ++k) {
            Element a = s.sample_member(n, rng);
            double nx = s.space.norm(a);
            if (!(nx > 1e-12)) {
                ++degenerate;
                continue;
            }
            b = std::max(b, seminorm(s, Y, a) / nx);
            ++used;
        }
        rows.push_back({{"n", n}, {"b", b}, {"used", used}, {"skipped_degenerate", degenerate}});
    }
    return {{"seminorm", Y}, {"samples", samples}, {"seed", seed}, {"levels", rows}, {"kind", "descriptive fit"}};
}

json dolzhenko_audit(std::size_t samples, std::size_t max_degree, std::size_t nodes, std::uint64_t seed, double tol) {
    if (max_degree == 0) throw ValidationError("dolzhenko_audit: degree >= 1");
    Grid g = Grid::interval(0.0, 1.0, nodes);
    const auto S = static_cast<Eigen::Index>(nodes);
    Rng rng(seed);
    auto poly = [&](const std::vector<double>& c, double t) {
        double acc = 0.0;
        for (std::size_t d = c.size(); d-- > 0;) acc = acc * t + c[d];
        return acc;
    };
    std::size_t violations = 0, rejected = 0;
    double worst = 0.0;
    json bad = json::array();
    for (std::size_t k = 0; k < samples; ++k) {
        std::size_t n = 1 + rng.index(max_degree);
        std::vector<double> p(n + 1), q(n + 1);
        Eigen::VectorXd qv(S);
        for (int tries = 0;; ++tries) {
            for (auto& c : p) c = rng.normal();
            for (auto& c : q) c = rng.normal();
            for (Eigen::Index i = 0; i < S; ++i) qv[i] = poly(q, g.nodes[i]);
            double lo = qv.cwiseAbs().minCoeff(), hi = qv.cwiseAbs().maxCoeff();
            bool one_sign = qv.minCoeff() > 0.0 || qv.maxCoeff() < 0.0;
            if (one_sign && lo >= 0.1 * hi) break;
            ++rejected;
            if (tries > 200) {
                q.assign(n + 1, 0.0);
                q[0] = 1.0;
                for (Eigen::Index i = 0; i < S; ++i) qv[i] = 1.0;
                break;
            }
        }
        Eigen::VectorXd f(S);
        for (Eigen::Index i = 0; i < S; ++i) f[i] = poly(p, g.nodes[i]) / qv[i];
        double tv = (f.tail(S - 1) - f.head(S - 1)).cwiseAbs().sum();
        double sup = f.cwiseAbs().maxCoeff();
        double nn = static_cast<double>(n);
        worst = std::max(worst, tv / (2.0 * nn * sup));
        if (tv > 2.0 * nn * sup + tol) {
            ++violations;
            if (bad.size() < 10) bad.push_back({{"sample", k}, {"degree", n}, {"variation", tv}, {"sup", sup}});
        }
    }
    return {{"samples", samples}, {"max_degree", max_degree}, {"nodes", nodes},  {"seed", seed},
            {"tol", tol},         {"violations", violations}, {"worst_ratio", worst}, {"rejected_denominators", rejected},
            {"examples", bad}};
}

json AqrNorm::to_json() const {
    return {{"seminorm", seminorm}, {"norm", norm}, {"tail", tail}, {"divergent", divergent}};
}

AqrNorm aqr_norm(const std::vector<double>& E, double x_norm, double r, double q, const TailModel& tail) {
    if (!(q > 0.0)) throw ValidationError("aqr_norm: q must be positive");
    if (!(r > 0.0)) throw ValidationError("aqr_norm: r must be positive");
    AqrNorm out;
    const std::size_t N = E.size();
    const bool inf = std::isinf(q);
    const double w_exp = inf ? r : r - 1.0 / q;
    auto term = [&](std::size_t n, double e) { return std::pow(static_cast<double>(n + 1), w_exp) * e; };
    const double last = N ? E[N - 1] : 0.0;
    const bool geo = tail.kind == TailModel::Kind::geometric && last > 0.0;
    if (geo && !(tail.ratio < 1.0)) {
        out.divergent = true;
        out.seminorm = out.norm = kInf;
        return out;
    }
    if (inf) {
        double s = 0.0;
        for (std::size_t n = 0; n < N; ++n) s = std::max(s, term(n, E[n]));
        if (geo) {
            double e = last, prev = term(N - 1, last);
            for (std::size_t n = N; n < N + 100000; ++n) {
                e *= tail.ratio;
                double t = term(n, e);
                out.tail = std::max(out.tail, t);
                if (t < prev && t < s) break;
                prev = t;
            }
            s = std::max(s, out.tail);
        } else if (N >= 4) {
            // Still rising across the last dyadic block?
            std::size_t half = N / 2;
            double before = 0.0, after = 0.0;
            for (std::size_t n = 0; n < half; ++n) before = std::max(before, term(n, E[n]));
            for (std::size_t n = half; n < N; ++n) after = std::max(after, term(n, E[n]));
            out.divergent = after > 1.01 * before && before > 0.0;
        }
        out.seminorm = s;
    } else {
        double s = 0.0;
        for (std::size_t n = 0; n < N; ++n) s += std::pow(term(n, E[n]), q);
        if (geo) {
            double e = last, prev = std::pow(term(N - 1, last), q), t = 0.0;
            const double rq = std::pow(tail.ratio, q);
            std::size_t n = N;
            for (; n < N + 1000000; ++n) {
                e *= tail.ratio;
                t = std::pow(term(n, e), q);
                out.tail += t;
                if (t <= 1e-18 * (s + out.tail) && t < prev) break;
                prev = t;
            }
            // Remaining ratios never exceed max(current ratio, ratio^q).
            double theta = std::max(prev > 0.0 ? t / prev : 0.0, rq);
            if (theta < 1.0) out.tail += t * theta / (1.0 - theta);
            s += out.tail;
        } else if (N >= 4) {
            std::size_t half = N / 2;
            double before = 0.0, block = 0.0;
            for (std::size_t n = 0; n < half; ++n) before += std::pow(term(n, E[n]), q);
            for (std::size_t n = half; n < N; ++n) block += std::pow(term(n, E[n]), q);
            out.divergent = before > 0.0 && block > 0.01 * before;
        }
        out.seminorm = std::pow(s, 1.0 / q);
    }
    out.norm = x_norm + out.seminorm;
    return out;
}

AqrNorm aqr_norm(const ErrorProfile& p, double r, double q, const TailModel& tail) {
    return aqr_norm(p.values(), p.x_norm, r, q, tail);
}

double weighted_sup_norm(const std::vector<double>& profile, const NullSequence& eps, std::size_t m) {
    const std::size_t N = std::min(profile.size(), eps.size());
    double s = 0.0;
    for (std::size_t n = m; n < N; ++n) {
        if (!(eps[n] > 0.0)) throw ValidationError("weighted_sup_norm: eps vanishes at " + std::to_string(n));
        s = std::max(s, profile[n] / eps[n]);
    }
    return s;
}

}  // namespace lethargy
