#include <algorithm>
#include <cmath>

#include "lethargy/solve.hpp"

namespace lethargy {

namespace {

// Chebyshev columns on the cell's own node span.
Eigen::MatrixXd cell_basis(const Eigen::VectorXd& t, std::size_t j, std::size_t i, std::size_t r) {
    const auto len = static_cast<Eigen::Index>(i - j);
    Eigen::MatrixXd B(len, static_cast<Eigen::Index>(r));
    double t0 = t[static_cast<Eigen::Index>(j)], t1 = t[static_cast<Eigen::Index>(i - 1)];
    double h = t1 > t0 ? t1 - t0 : 1.0;
    for (Eigen::Index q = 0; q < len; ++q) {
        double u = 2.0 * (t[static_cast<Eigen::Index>(j) + q] - t0) / h - 1.0;
        double a = 1.0, b = u;
        for (Eigen::Index k = 0; k < B.cols(); ++k) {
            if (k == 0) B(q, k) = 1.0;
            else if (k == 1) B(q, k) = u;
            else {
                double c = 2.0 * u * b - a;
                a = b;
                b = c;
                B(q, k) = c;
            }
        }
    }
    return B;
}

struct CellFit {
    double cost = 0.0;  // sum w|res|^p, or max|res| for sup
    Eigen::VectorXd fitted;
    bool exact = true;
};

CellFit fit_cell(const QuasiNormedSpace& X, const Eigen::VectorXd& x, const Eigen::VectorXd& w, std::size_t j,
                 std::size_t i, std::size_t r) {
    CellFit c;
    const auto len = static_cast<Eigen::Index>(i - j);
    Eigen::VectorXd seg = x.segment(static_cast<Eigen::Index>(j), len);
    if (len <= static_cast<Eigen::Index>(r)) {
        c.fitted = seg;
        return c;
    }
    if (X.is_sup() && r == 1) {
        double lo = seg.minCoeff(), hi = seg.maxCoeff();
        c.fitted = Eigen::VectorXd::Constant(len, (lo + hi) / 2.0);
        c.cost = (hi - lo) / 2.0;
        return c;
    }
    Eigen::MatrixXd B = cell_basis(X.grid->nodes, j, i, r);
    Eigen::VectorXd ws = w.segment(static_cast<Eigen::Index>(j), len);
    LinearFit f = fit_linear(B, seg, ws, X.p);
    c.fitted = seg - f.residual;
    c.exact = f.status == FitStatus::exact;
    c.cost = X.is_sup() ? f.residual.cwiseAbs().maxCoeff() : (X.p == 2.0 ? f.residual.cwiseAbs2().dot(ws)
                                                                         : ws.dot(f.residual.cwiseAbs().array().pow(X.p).matrix()));
    return c;
}

}  // namespace

SplineFit spline_best_approx(const QuasiNormedSpace& X, const Eigen::VectorXd& x, std::size_t pieces, std::size_t r) {
    if (X.carrier != Carrier::grid) throw NoSolver("spline solver needs a grid carrier");
    if (pieces == 0) throw ValidationError("spline: at least one piece");
    if (r < 1 || r > 4) throw ValidationError("spline: degree bound r must lie in [1, 4]");
    const std::size_t N = static_cast<std::size_t>(x.size());
    if (N > 2049) throw NoSolver("free-knot spline solver is limited to 2049 nodes");
    const bool sup = X.is_sup();
    if (!sup && X.p < 1.0) throw NoSolver("no spline solver for p < 1");
    const bool fast = (sup && r == 1) || (!sup && X.p == 2.0);
    if (!fast && N > 129) throw NoSolver("spline solver for this norm is limited to 129 nodes");

    const Eigen::VectorXd w = X.weights();
    const Eigen::VectorXd& t = X.grid->nodes;
    const std::size_t S = N + 1;
    std::vector<double> cost(S * S, 0.0);
    bool all_exact = true;

    if (sup && r == 1) {
        for (std::size_t j = 0; j < N; ++j) {
            double lo = x[static_cast<Eigen::Index>(j)], hi = lo;
            for (std::size_t i = j + 1; i <= N; ++i) {
                lo = std::min(lo, x[static_cast<Eigen::Index>(i - 1)]);
                hi = std::max(hi, x[static_cast<Eigen::Index>(i - 1)]);
                cost[j * S + i] = (hi - lo) / 2.0;
            }
        }
    } else if (fast) {
        // Incremental normal equations in u = (t - t_j)/L, Jacobi-scaled before solving.
        const double L = X.grid->length();
        const auto R = static_cast<Eigen::Index>(r);
        for (std::size_t j = 0; j < N; ++j) {
            Eigen::MatrixXd G = Eigen::MatrixXd::Zero(R, R);
            Eigen::VectorXd b = Eigen::VectorXd::Zero(R), phi(R);
            double c = 0.0;
            for (std::size_t i = j + 1; i <= N; ++i) {
                auto q = static_cast<Eigen::Index>(i - 1);
                double u = (t[q] - t[static_cast<Eigen::Index>(j)]) / L, pw = 1.0;
                for (Eigen::Index k = 0; k < R; ++k, pw *= u) phi[k] = pw;
                G.noalias() += w[q] * phi * phi.transpose();
                b += w[q] * x[q] * phi;
                c += w[q] * x[q] * x[q];
                if (i - j <= r) continue;
                Eigen::VectorXd d = G.diagonal().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
                Eigen::MatrixXd Gs = d.asDiagonal() * G * d.asDiagonal();
                Eigen::VectorXd bs = d.cwiseProduct(b);
                Eigen::VectorXd z = Gs.ldlt().solve(bs);
                cost[j * S + i] = std::max(0.0, c - bs.dot(z));
            }
        }
    } else {
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t i = j + 1; i <= N; ++i) {
                CellFit f = fit_cell(X, x, w, j, i, r);
                cost[j * S + i] = f.cost;
                if (!f.exact) all_exact = false;
            }
    }

    auto combine = [&](double a, double b) { return sup ? std::max(a, b) : a + b; };
    const std::size_t P = std::min(pieces, N);
    std::vector<double> f(S, kInf), g(S);
    std::vector<std::vector<std::size_t>> arg(P + 1, std::vector<std::size_t>(S, 0));
    for (std::size_t i = 0; i <= N; ++i) {
        f[i] = i == 0 ? 0.0 : cost[i];
        arg[1][i] = 0;
    }
    std::size_t used = 1;
    for (std::size_t k = 2; k <= P && f[N] > 0.0; ++k) {
        g[0] = 0.0;
        for (std::size_t i = 1; i <= N; ++i) {
            double best = f[i];
            std::size_t bj = i;
            for (std::size_t j = k - 1; j < i; ++j) {
                double v = combine(f[j], cost[j * S + i]);
                if (v < best) {
                    best = v;
                    bj = j;
                }
            }
            g[i] = best;
            arg[k][i] = bj;
        }
        std::swap(f, g);
        used = k;
    }

    std::vector<std::size_t> starts;
    std::size_t i = N;
    for (std::size_t k = used; k >= 1 && i > 0; --k) {
        std::size_t j = arg[k][i];
        if (j == i) continue;
        starts.push_back(j);
        i = j;
    }
    std::reverse(starts.begin(), starts.end());

    SplineFit out;
    out.fitted.resize(x.size());
    for (std::size_t c = 0; c < starts.size(); ++c) {
        std::size_t s = starts[c], e = c + 1 < starts.size() ? starts[c + 1] : N;
        CellFit cf = fit_cell(X, x, w, s, e, r);
        out.fitted.segment(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(e - s)) = cf.fitted;
        if (!cf.exact) all_exact = false;
        out.breaks.push_back(s);
    }
    out.breaks.push_back(N);
    out.value = X.norm(Element::real(x - out.fitted));
    out.status = all_exact && (sup || X.p == 2.0) ? FitStatus::exact : FitStatus::upper_bound;
    return out;
}

}  // namespace lethargy
