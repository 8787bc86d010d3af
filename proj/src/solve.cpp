#include "lethargy/solve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

namespace lethargy {

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& f) {
    if (threads == 0) threads = thread_cap();
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < count; i = next++) f(i);
            } catch (...) {
                errors[t] = std::current_exception();
                next = count;
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

namespace {

BestApprox zero_level(const QuasiNormedSpace& X, const Element& x) {
    BestApprox r;
    r.value = r.lower = X.norm(x);
    r.minimizer = x.zero_like();
    r.method = "zero";
    return r;
}

}  // namespace

// ---------------------------------------------------------------- quantizer

double quantizer_sup_value(const std::vector<double>& v, std::size_t m) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (m == 0) throw ValidationError("quantizer: m must be at least 1");
    // f[i]: best max half-range covering v[0..i) with k groups.
    std::vector<double> f(n + 1), g(n + 1);
    f[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) f[i] = (v[i - 1] - v[0]) / 2.0;
    for (std::size_t k = 2; k <= m && f[n] > 0.0; ++k) {
        g[0] = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            // last group is v[j..i); f[j] rises with j, the half-range falls.
            std::size_t lo = 0, hi = i - 1;
            while (lo < hi) {
                std::size_t mid = (lo + hi) / 2;
                if (f[mid] >= (v[i - 1] - v[mid]) / 2.0) hi = mid;
                else lo = mid + 1;
            }
            double best = std::max(f[lo], (v[i - 1] - v[lo]) / 2.0);
            if (lo > 0) best = std::min(best, std::max(f[lo - 1], (v[i - 1] - v[lo - 1]) / 2.0));
            g[i] = std::min(best, f[i]);
        }
        std::swap(f, g);
    }
    return f[n];
}

namespace {

// Optimal constant and cost sum_i w_i |v_i - c|^p over one sorted cell.
std::pair<double, double> cell_constant(const std::vector<double>& v, const std::vector<double>& w, std::size_t j,
                                        std::size_t i, double p, bool& approximate) {
    auto cost = [&](double c) {
        double s = 0.0;
        for (std::size_t t = j; t < i; ++t) s += w[t] * std::pow(std::abs(v[t] - c), p);
        return s;
    };
    if (p < 1.0) {
        // Concave between data points: some data value is optimal.
        double bc = v[j], bv = cost(v[j]);
        for (std::size_t t = j + 1; t < i; ++t) {
            double cv = cost(v[t]);
            if (cv < bv) {
                bv = cv;
                bc = v[t];
            }
        }
        return {bc, bv};
    }
    approximate = true;
    double lo = v[j], hi = v[i - 1];
    const double phi = 0.6180339887498949;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo), f1 = cost(x1), f2 = cost(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = cost(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = cost(x2);
        }
    }
    double c = f1 <= f2 ? x1 : x2;
    return {c, cost(c)};
}

}  // namespace

Quantization quantizer_error(const QuasiNormedSpace& X, const Element& x, std::size_t m) {
    if (m == 0) throw ValidationError("quantizer: m must be at least 1");
    if (x.kind != Element::Kind::real) throw NoSolver("quantizer solver needs a real vector");
    X.check_shape(x);
    const std::size_t N = static_cast<std::size_t>(x.re.size());
    std::vector<std::size_t> order(N);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x.re[a] < x.re[b]; });
    std::vector<double> v(N), w(N);
    Eigen::VectorXd wt = X.weights();
    for (std::size_t i = 0; i < N; ++i) {
        v[i] = x.re[static_cast<Eigen::Index>(order[i])];
        w[i] = wt[static_cast<Eigen::Index>(order[i])];
    }

    Quantization q;
    q.assignment.assign(N, 0);
    // Cell boundaries in sorted order; filled by each branch.
    std::vector<std::size_t> starts;
    std::vector<double> levels;

    double exact_sup = -1.0;
    if (X.is_sup()) {
        double r = quantizer_sup_value(v, m);
        exact_sup = r;
        std::size_t s = 0;
        while (s < N) {
            std::size_t e = s;
            while (e < N && (v[e] - v[s]) / 2.0 <= r) ++e;
            starts.push_back(s);
            levels.push_back((v[s] + v[e - 1]) / 2.0);
            s = e;
        }
    } else {
        const double p = X.p;
        if (p != 2.0 && N > (p < 1.0 ? 64u : 128u))
            throw NoSolver("quantizer in L_p with p != 2 is limited to small sample counts");
        if (p == 2.0 && static_cast<double>(m) * static_cast<double>(N) * static_cast<double>(N) > 4e9)
            throw NoSolver("quantizer L_2 dynamic program too large");
        std::vector<double> S0(N + 1, 0.0), S1(N + 1, 0.0), S2(N + 1, 0.0);
        for (std::size_t i = 0; i < N; ++i) {
            S0[i + 1] = S0[i] + w[i];
            S1[i + 1] = S1[i] + w[i] * v[i];
            S2[i + 1] = S2[i] + w[i] * v[i] * v[i];
        }
        bool approximate = false;
        std::vector<double> table;
        if (p != 2.0) {
            table.assign((N + 1) * (N + 1), 0.0);
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t i = j + 1; i <= N; ++i) table[j * (N + 1) + i] = cell_constant(v, w, j, i, p, approximate).second;
        }
        auto cost = [&](std::size_t j, std::size_t i) {
            if (i <= j) return 0.0;
            if (p == 2.0) {
                double W = S0[i] - S0[j];
                if (W <= 0) return 0.0;
                double mu = (S1[i] - S1[j]) / W;
                return std::max(0.0, (S2[i] - S2[j]) - mu * (S1[i] - S1[j]));
            }
            return table[j * (N + 1) + i];
        };
        std::size_t K = std::min(m, N);
        std::vector<std::vector<double>> f(K + 1, std::vector<double>(N + 1, kInf));
        std::vector<std::vector<std::size_t>> arg(K + 1, std::vector<std::size_t>(N + 1, 0));
        f[0][0] = 0.0;
        for (std::size_t k = 1; k <= K; ++k) {
            f[k][0] = 0.0;
            for (std::size_t i = 1; i <= N; ++i) {
                double best = f[k - 1][i];
                std::size_t bj = i;
                for (std::size_t j = k - 1; j < i; ++j) {
                    double c = f[k - 1][j] + cost(j, i);
                    if (c < best) {
                        best = c;
                        bj = j;
                    }
                }
                f[k][i] = best;
                arg[k][i] = bj;
            }
        }
        std::vector<std::size_t> cuts;
        std::size_t i = N;
        for (std::size_t k = K; k >= 1 && i > 0; --k) {
            std::size_t j = arg[k][i];
            if (j == i) continue;
            cuts.push_back(j);
            i = j;
        }
        std::reverse(cuts.begin(), cuts.end());
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            std::size_t s = cuts[c], e = c + 1 < cuts.size() ? cuts[c + 1] : N;
            starts.push_back(s);
            if (p == 2.0) levels.push_back((S1[e] - S1[s]) / (S0[e] - S0[s]));
            else levels.push_back(cell_constant(v, w, s, e, p, approximate).first);
        }
        (void)approximate;
    }
    for (std::size_t c = 0; c < starts.size(); ++c) {
        std::size_t e = c + 1 < starts.size() ? starts[c + 1] : N;
        for (std::size_t t = starts[c]; t < e; ++t) q.assignment[order[t]] = c;
    }
    q.levels = levels;
    Eigen::VectorXd r(static_cast<Eigen::Index>(N));
    for (std::size_t i = 0; i < N; ++i) r[static_cast<Eigen::Index>(i)] = x.re[static_cast<Eigen::Index>(i)] - levels[q.assignment[i]];
    // In sup the DP value is the exact half-range; the realized residual can differ from it in the last ulp.
    q.value = exact_sup >= 0.0 ? exact_sup : X.norm(Element::real(r));
    return q;
}

Quantization midpoint_quantizer(const QuasiNormedSpace& X, const Element& x, std::size_t m) {
    if (m == 0) throw ValidationError("quantizer: m must be at least 1");
    X.check_shape(x);
    Quantization q;
    const Eigen::Index N = x.re.size();
    double R = N ? x.re.cwiseAbs().maxCoeff() : 0.0;
    q.assignment.assign(static_cast<std::size_t>(N), 0);
    if (R == 0.0) {
        q.levels = {0.0};
        q.value = 0.0;
        return q;
    }
    double h = 2.0 * R / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) q.levels.push_back(-R + (static_cast<double>(j) + 0.5) * h);
    Eigen::VectorXd r(N);
    for (Eigen::Index i = 0; i < N; ++i) {
        auto j = static_cast<std::size_t>(std::floor((x.re[i] + R) / h));
        j = std::min(j, m - 1);
        q.assignment[static_cast<std::size_t>(i)] = j;
        r[i] = x.re[i] - q.levels[j];
    }
    q.value = X.norm(Element::real(r));
    return q;
}

// ---------------------------------------------------------------- interleaved c0

BestApprox c0_best_approx(const Eigen::VectorXd& x, std::size_t level) {
    const auto D = static_cast<std::size_t>(x.size());
    BestApprox r;
    r.method = "c0-closed-form";
    Eigen::VectorXd y = Eigen::VectorXd::Zero(x.size());
    auto tail = [&](std::size_t from) {
        double t = 0.0;
        for (std::size_t i = from; i < D; ++i) t = std::max(t, std::abs(x[static_cast<Eigen::Index>(i)]));
        return t;
    };
    if (level == 0) {
        r.value = tail(0);
    } else if (level % 2 == 1) {
        std::size_t k = (level + 1) / 2;  // Pi_k: first k coordinates free
        for (std::size_t i = 0; i < std::min(k, D); ++i) y[static_cast<Eigen::Index>(i)] = x[static_cast<Eigen::Index>(i)];
        r.value = tail(k);
    } else {
        std::size_t k = level / 2;  // B_{k+1}: coordinates 0..k, the last one constrained
        if (k >= D) throw ValidationError("interleaved-c0 level beyond the dimension cap");
        double Mk = 0.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < k; ++i) {
            double a = std::abs(x[static_cast<Eigen::Index>(i)]);
            if (a > Mk) {
                Mk = a;
                arg = i;
            }
            y[static_cast<Eigen::Index>(i)] = x[static_cast<Eigen::Index>(i)];
        }
        double xk = x[static_cast<Eigen::Index>(k)];
        double kp1 = static_cast<double>(k + 1);
        double t = std::max(0.0, (kp1 * std::abs(xk) - Mk) / (kp1 + 1.0));
        if (t > 0.0) {
            double sgn = x[static_cast<Eigen::Index>(arg)] < 0 ? -1.0 : 1.0;
            y[static_cast<Eigen::Index>(arg)] += sgn * t;
        }
        double cap = (Mk + t) / kp1;
        y[static_cast<Eigen::Index>(k)] = std::copysign(std::min(std::abs(xk), cap), xk);
        r.value = std::max(tail(k + 1), t);
    }
    r.lower = r.value;
    r.minimizer = Element::real(y);
    return r;
}

// ---------------------------------------------------------------- rank

BestApprox rank_best_approx(const Eigen::MatrixXd& m, std::size_t n, NormKind kind) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const auto k = std::min<Eigen::Index>(static_cast<Eigen::Index>(n), sv.size());
    BestApprox r;
    r.method = "svd-truncation";
    if (kind == NormKind::op) {
        r.value = k < sv.size() ? sv[k] : 0.0;
    } else {
        double s = 0.0;
        for (Eigen::Index i = k; i < sv.size(); ++i) s += sv[i] * sv[i];
        r.value = std::sqrt(s);
    }
    r.lower = r.value;
    r.minimizer = Element::matrix(svd.matrixU().leftCols(k) * sv.head(k).asDiagonal() * svd.matrixV().leftCols(k).transpose());
    return r;
}

// ---------------------------------------------------------------- n-term

namespace {

struct SubsetFit {
    double value = kInf;
    double lower = 0.0;
    FitStatus status = FitStatus::exact;
    Eigen::VectorXd fitted;
};

SubsetFit fit_subset(const QuasiNormedSpace& X, const Eigen::MatrixXd& D, const std::vector<std::size_t>& F,
                     const Eigen::VectorXd& x, const Eigen::VectorXd& w) {
    Eigen::MatrixXd Phi(D.rows(), static_cast<Eigen::Index>(F.size()));
    for (std::size_t j = 0; j < F.size(); ++j) Phi.col(static_cast<Eigen::Index>(j)) = D.col(static_cast<Eigen::Index>(F[j]));
    LinearFit f = fit_linear(Phi, x, w, X.p);
    SubsetFit s;
    s.value = f.value;
    s.lower = f.lower;
    s.status = f.status;
    s.fitted = x - f.residual;
    return s;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t K) {
    const std::size_t n = c.size();
    for (std::size_t i = n; i-- > 0;) {
        if (c[i] < K - n + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < n; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

BestApprox nterm_best_approx(const QuasiNormedSpace& X, const Eigen::MatrixXd& D, bool coordinate_dictionary,
                             const Eigen::VectorXd& x, std::size_t n, const SolveOptions& opt) {
    if (n == 0) return zero_level(X, Element::real(x));
    if (X.kind == NormKind::lp && X.p < 1.0) throw NoSolver("n-term approximation needs p >= 1");
    const auto K = static_cast<std::size_t>(D.cols());
    Eigen::VectorXd w = X.weights();
    BestApprox r;

    if (coordinate_dictionary) {
        // Keep the n largest coordinates: exact in every l_p.
        std::vector<std::size_t> idx(static_cast<std::size_t>(x.size()));
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(x[static_cast<Eigen::Index>(a)]) > std::abs(x[static_cast<Eigen::Index>(b)]);
        });
        Eigen::VectorXd y = Eigen::VectorXd::Zero(x.size());
        for (std::size_t i = 0; i < std::min(n, idx.size()); ++i) y[static_cast<Eigen::Index>(idx[i])] = x[static_cast<Eigen::Index>(idx[i])];
        r.minimizer = Element::real(y);
        r.value = r.lower = X.norm(Element::real(x - y));
        r.method = "thresholding";
        return r;
    }

    const std::size_t size = std::min(n, K);
    if (binomial(K, size) <= opt.exhaustive_cutoff) {
        std::vector<std::vector<std::size_t>> subsets;
        std::vector<std::size_t> c(size);
        std::iota(c.begin(), c.end(), std::size_t{0});
        do subsets.push_back(c);
        while (next_combination(c, K));
        std::vector<SubsetFit> fits(subsets.size());
        parallel_for(subsets.size(), opt.threads, [&](std::size_t i) { fits[i] = fit_subset(X, D, subsets[i], x, w); });
        std::size_t best = 0;
        bool all_exact = true;
        double lower = kInf;
        for (std::size_t i = 0; i < fits.size(); ++i) {
            if (fits[i].value < fits[best].value) best = i;
            if (fits[i].status != FitStatus::exact) all_exact = false;
            lower = std::min(lower, fits[i].lower);
        }
        r.value = fits[best].value;
        r.minimizer = Element::real(fits[best].fitted);
        if (all_exact) {
            r.status = FitStatus::exact;
            r.lower = r.value;
        } else {
            r.status = lower > 0.0 ? FitStatus::interval : FitStatus::upper_bound;
            r.lower = lower;
        }
        r.method = "exhaustive";
        return r;
    }

    // Orthogonal matching pursuit with seeded restarts.
    Eigen::VectorXd atom_norm(static_cast<Eigen::Index>(K));
    for (std::size_t j = 0; j < K; ++j) {
        double s = std::sqrt(D.col(static_cast<Eigen::Index>(j)).cwiseAbs2().dot(w));
        atom_norm[static_cast<Eigen::Index>(j)] = s > 0 ? s : 1.0;
    }
    Rng rng(opt.seed ^ 0x6e7465726dULL);
    SubsetFit best;
    for (std::size_t rs = 0; rs < std::max<std::size_t>(opt.restarts, 1); ++rs) {
        Rng local = rng.fork(rs);
        std::vector<std::size_t> F;
        std::vector<char> used(K, 0);
        Eigen::VectorXd res = x;
        SubsetFit cur;
        cur.value = X.norm(Element::real(x));
        cur.fitted = Eigen::VectorXd::Zero(x.size());
        for (std::size_t step = 0; step < size; ++step) {
            Eigen::VectorXd score = (D.transpose() * w.cwiseProduct(res)).cwiseAbs().cwiseQuotient(atom_norm);
            std::vector<std::size_t> cand;
            for (std::size_t j = 0; j < K; ++j)
                if (!used[j]) cand.push_back(j);
            if (cand.empty()) break;
            std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
                return score[static_cast<Eigen::Index>(a)] > score[static_cast<Eigen::Index>(b)];
            });
            std::size_t pick = cand[0];
            if (rs > 0 && step == 0) pick = cand[local.index(std::min<std::size_t>(5, cand.size()))];
            if (score[static_cast<Eigen::Index>(pick)] <= 1e-14 * std::max(1.0, cur.value) && !X.is_sup()) break;
            used[pick] = 1;
            F.push_back(pick);
            cur = fit_subset(X, D, F, x, w);
            res = x - cur.fitted;
        }
        if (cur.value < best.value) best = cur;
    }
    r.value = best.value;
    r.lower = 0.0;
    r.minimizer = Element::real(best.fitted);
    r.status = FitStatus::upper_bound;
    r.method = "greedy";
    return r;
}

// ---------------------------------------------------------------- dispatch

BestApprox best_approx(const ApproximationScheme& s, const Element& x, std::size_t n, const SolveOptions& opt) {
    s.space.check_shape(x);
    s.check_level(n);
    const QuasiNormedSpace& X = s.space;
    if (x.kind == Element::Kind::complex) throw NoSolver("no best-approximation solver for complex elements");
    BestApprox r;
    switch (s.kind) {
        case SchemeKind::subspace_chain: {
            if (n == 0) return zero_level(X, x);
            if (s.basis == BasisFamily::coordinate) {
                Eigen::VectorXd y = Eigen::VectorXd::Zero(x.re.size());
                y.head(static_cast<Eigen::Index>(n)) = x.re.head(static_cast<Eigen::Index>(n));
                r.minimizer = Element::real(y);
                r.value = r.lower = X.norm(Element::real(x.re - y));
                r.method = "coordinate-truncation";
                return r;
            }
            if (X.kind == NormKind::lp && X.p < 1.0) throw NoSolver("no convex solver for p < 1 on linear spans");
            LinearFit f = fit_linear(s.basis_cache.leftCols(static_cast<Eigen::Index>(n)), x.re, X.weights(), X.p);
            r.value = f.value;
            r.lower = f.lower;
            r.status = f.status;
            r.minimizer = Element::real(x.re - f.residual);
            r.method = X.is_sup() ? "lp-minimax" : X.p == 2.0 ? "projection" : "irls";
            return r;
        }
        case SchemeKind::nterm:
        case SchemeKind::wavelet_haar:
            return nterm_best_approx(X, s.dictionary->matrix, s.dictionary->label == "orthonormal", x.re, n, opt);
        case SchemeKind::quantizer: {
            std::size_t m = s.budget(n);
            if (m == 0) return zero_level(X, x);
            Quantization q = quantizer_error(X, x, m);
            r.value = q.value;
            r.lower = q.value;
            if (!X.is_sup() && X.p != 2.0 && X.p >= 1.0) {
                r.status = FitStatus::upper_bound;
                r.lower = 0.0;
            }
            Eigen::VectorXd y(x.re.size());
            for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = q.levels[q.assignment[static_cast<std::size_t>(i)]];
            r.minimizer = Element::real(y);
            r.method = "partition-dp";
            return r;
        }
        case SchemeKind::interleaved_c0: return c0_best_approx(x.re, n);
        case SchemeKind::spline: {
            if (n == 0) return zero_level(X, x);
            SplineFit f = spline_best_approx(X, x.re, n + 1, s.degree_bound);
            r.value = f.value;
            r.status = f.status;
            r.lower = f.status == FitStatus::exact ? f.value : 0.0;
            r.minimizer = Element::real(f.fitted);
            r.method = "knot-dp";
            return r;
        }
        case SchemeKind::rank: return rank_best_approx(x.mat, n, X.kind);
    }
    throw NoSolver("no solver for this scheme kind");
}

// ---------------------------------------------------------------- profiles

std::vector<double> ErrorProfile::values() const {
    std::vector<double> v;
    for (const auto& e : entries) v.push_back(e.value);
    return v;
}

nlohmann::json ErrorProfile::to_json() const {
    nlohmann::json j;
    j["scheme"] = scheme;
    j["x_norm"] = x_norm;
    auto& arr = j["entries"] = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json r = {{"n", e.n}, {"value", e.value}, {"status", to_string(e.status)}};
        if (e.status == FitStatus::interval) r["interval"] = {e.lower, e.value};
        if (!e.error.empty()) r["error"] = e.error;
        arr.push_back(r);
    }
    return j;
}

std::string ErrorProfile::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "n,value,status,lower\n";
    for (const auto& e : entries)
        os << e.n << ',' << e.value << ',' << (e.error.empty() ? to_string(e.status) : "error") << ',' << e.lower << '\n';
    return os.str();
}

ErrorProfile error_profile(const ApproximationScheme& s, const Element& x, std::size_t n_max, const SolveOptions& opt) {
    s.check_level(n_max);
    ErrorProfile p;
    p.scheme = s.name;
    p.x_norm = s.space.norm(x);
    p.entries.resize(n_max + 1);
    SolveOptions inner = opt;
    inner.threads = 1;
    parallel_for(n_max + 1, opt.threads, [&](std::size_t n) {
        ProfileEntry& e = p.entries[n];
        e.n = n;
        try {
            BestApprox r = best_approx(s, x, n, inner);
            e.value = r.value;
            e.lower = r.lower;
            e.status = r.status;
        } catch (const Error& ex) {
            e.value = kInf;
            e.lower = 0.0;
            e.status = FitStatus::upper_bound;
            e.error = ex.what();
        }
    });
    // A_{n-1} is inside A_n, so any upper bound at n-1 bounds level n too.
    for (std::size_t n = 1; n <= n_max; ++n) {
        auto& e = p.entries[n];
        if (e.status != FitStatus::exact && p.entries[n - 1].value < e.value) {
            e.value = p.entries[n - 1].value;
            if (e.status == FitStatus::interval && e.lower > e.value) e.lower = e.value;
        }
    }
    return p;
}

}  // namespace lethargy
