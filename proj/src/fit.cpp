#include "lethargy/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "lethargy/common.hpp"
#include "lethargy/space.hpp"

namespace lethargy {

const char* to_string(FitStatus s) {
    switch (s) {
        case FitStatus::exact: return "exact";
        case FitStatus::upper_bound: return "upper-bound";
        case FitStatus::interval: return "interval";
    }
    return "?";
}

namespace {

using Tableau = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct SimplexState {
    Tableau T;
    std::vector<Eigen::Index> basis;
    Eigen::Index n = 0, m = 0;
    std::size_t iterations = 0;

    Eigen::Index rhs() const { return n + m; }

    void pivot(Eigen::Index p, Eigen::Index q) {
        T.row(p) /= T(p, q);
        for (Eigen::Index i = 0; i <= m; ++i) {
            if (i == p) continue;
            double f = T(i, q);
            if (f != 0.0) T.row(i) -= f * T.row(p);
        }
        basis[static_cast<std::size_t>(p)] = q;
        ++iterations;
    }

    // Returns false on unboundedness.
    bool run(Eigen::Index allowed_cols, double tol_d, std::size_t max_iter) {
        const double tol_p = 1e-11;
        std::size_t degenerate = 0;
        while (iterations < max_iter) {
            Eigen::Index q = -1;
            bool bland = degenerate > 50;
            double best = -tol_d;
            for (Eigen::Index j = 0; j < allowed_cols; ++j) {
                double d = T(m, j);
                if (d < best) {
                    q = j;
                    if (bland) break;
                    best = d;
                }
            }
            if (q < 0) return true;
            Eigen::Index p = -1;
            double ratio = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < m; ++i) {
                double a = T(i, q);
                if (a <= tol_p) continue;
                double r = std::max(T(i, rhs()), 0.0) / a;
                if (r < ratio - 1e-15 ||
                    (r <= ratio + 1e-15 && p >= 0 && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(p)])) {
                    ratio = r;
                    p = i;
                }
            }
            if (p < 0) return false;
            degenerate = ratio <= 1e-14 ? degenerate + 1 : 0;
            pivot(p, q);
        }
        return true;
    }
};

}  // namespace

LpResult simplex(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c, double tol) {
    const Eigen::Index m = A.rows(), n = A.cols();
    if (b.size() != m || c.size() != n) throw ValidationError("simplex: dimension mismatch");
    SimplexState S;
    S.n = n;
    S.m = m;
    S.T = Tableau::Zero(m + 1, n + m + 1);
    S.basis.resize(static_cast<std::size_t>(m));
    std::vector<double> sign(static_cast<std::size_t>(m), 1.0);
    for (Eigen::Index i = 0; i < m; ++i) {
        double s = b[i] < 0 ? -1.0 : 1.0;
        sign[static_cast<std::size_t>(i)] = s;
        S.T.row(i).head(n) = s * A.row(i);
        S.T(i, n + i) = 1.0;
        S.T(i, n + m) = s * b[i];
        S.basis[static_cast<std::size_t>(i)] = n + i;
    }
    for (Eigen::Index i = 0; i < m; ++i) {
        S.T.row(m).head(n) -= S.T.row(i).head(n);
        S.T(m, n + m) -= S.T(i, n + m);
    }
    const std::size_t max_iter = static_cast<std::size_t>(50 * (m + n) + 1000);
    LpResult res;

    S.run(n, 1e-12, max_iter);
    double infeas = -S.T(m, n + m);
    double bscale = 1.0 + b.cwiseAbs().sum();
    if (infeas > 1e-9 * bscale) {
        res.status = S.iterations >= max_iter ? LpResult::Status::iteration_limit : LpResult::Status::infeasible;
        res.iterations = S.iterations;
        return res;
    }
    // Drive remaining artificials out of the basis where possible.
    for (Eigen::Index i = 0; i < m; ++i) {
        if (S.basis[static_cast<std::size_t>(i)] < n) continue;
        Eigen::Index q = -1;
        double best = 1e-9;
        for (Eigen::Index j = 0; j < n; ++j)
            if (std::abs(S.T(i, j)) > best) {
                best = std::abs(S.T(i, j));
                q = j;
            }
        if (q >= 0) S.pivot(i, q);
    }
    // Phase 2 objective row.
    S.T.row(m).setZero();
    S.T.row(m).head(n) = c.transpose();
    for (Eigen::Index i = 0; i < m; ++i) {
        Eigen::Index bi = S.basis[static_cast<std::size_t>(i)];
        double cb = bi < n ? c[bi] : 0.0;
        if (cb != 0.0) S.T.row(m) -= cb * S.T.row(i);
    }
    double cscale = std::max(1.0, c.cwiseAbs().maxCoeff());
    bool bounded = S.run(n, tol * 1e-2 * cscale, max_iter);

    res.iterations = S.iterations;
    if (!bounded) {
        res.status = LpResult::Status::unbounded;
        return res;
    }
    res.status = S.iterations >= max_iter ? LpResult::Status::iteration_limit : LpResult::Status::optimal;
    res.x = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) {
        Eigen::Index bi = S.basis[static_cast<std::size_t>(i)];
        if (bi < n) res.x[bi] = std::max(S.T(i, n + m), 0.0);
    }
    res.objective = c.dot(res.x);
    res.y.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) res.y[i] = -S.T(m, n + i) * sign[static_cast<std::size_t>(i)];
    return res;
}

LinearFit fit_l2(const Eigen::MatrixXd& Phi, const Eigen::VectorXd& r, const Eigen::VectorXd& w) {
    LinearFit f;
    f.coef = Eigen::VectorXd::Zero(Phi.cols());
    if (Phi.cols() > 0) {
        Eigen::VectorXd sw = w.cwiseSqrt();
        Eigen::MatrixXd B = sw.asDiagonal() * Phi;
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(B);
        f.coef = qr.solve(sw.cwiseProduct(r));
    }
    f.residual = r - Phi * f.coef;
    f.value = weighted_norm(f.residual, w, 2.0);
    f.lower = f.value;
    return f;
}

LinearFit fit_sup(const Eigen::MatrixXd& Phi, const Eigen::VectorXd& r, double tol) {
    LinearFit f;
    const Eigen::Index N = r.size(), k = Phi.cols();
    f.coef = Eigen::VectorXd::Zero(k);
    if (k == 0 || N == 0) {
        f.residual = r;
        f.value = f.lower = N ? r.cwiseAbs().maxCoeff() : 0.0;
        return f;
    }
    Eigen::VectorXd scale(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        double s = Phi.col(j).cwiseAbs().maxCoeff();
        scale[j] = s > 0 ? s : 1.0;
    }
    Eigen::MatrixXd A(k + 1, 2 * N);
    Eigen::VectorXd c(2 * N), b = Eigen::VectorXd::Zero(k + 1);
    b[k] = 1.0;
    for (Eigen::Index i = 0; i < N; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            double v = Phi(i, j) / scale[j];
            A(j, i) = v;
            A(j, N + i) = -v;
        }
        A(k, i) = 1.0;
        A(k, N + i) = 1.0;
        c[i] = -r[i];
        c[N + i] = r[i];
    }
    LpResult lp = simplex(A, b, c, tol);
    f.iterations = lp.iterations;
    if (lp.status == LpResult::Status::optimal || lp.status == LpResult::Status::iteration_limit) {
        for (Eigen::Index j = 0; j < k; ++j) f.coef[j] = -lp.y[j] / scale[j];
    }
    f.residual = r - Phi * f.coef;
    f.value = f.residual.cwiseAbs().maxCoeff();
    if (lp.status == LpResult::Status::optimal) {
        f.lower = std::min(-lp.objective, f.value);
        double gap = f.value - f.lower;
        f.status = gap <= tol * std::max(1.0, f.value) ? FitStatus::exact : FitStatus::interval;
        if (f.status == FitStatus::exact) f.lower = f.value;
    } else {
        f.lower = 0.0;
        f.converged = false;
        f.status = FitStatus::upper_bound;
    }
    return f;
}

LinearFit fit_irls(const Eigen::MatrixXd& Phi, const Eigen::VectorXd& r, const Eigen::VectorXd& w, double p,
                   const IrlsOptions& opt, const Eigen::VectorXd* start_weights) {
    if (!(p >= 1.0) || std::isinf(p)) throw NoSolver("IRLS needs 1 <= p < inf");
    Eigen::VectorXd omega = start_weights ? Eigen::VectorXd(w.cwiseProduct(*start_weights)) : w;
    LinearFit best = fit_l2(Phi, r, omega);
    best.value = weighted_norm(best.residual, w, p);
    best.status = FitStatus::upper_bound;
    best.lower = 0.0;
    best.converged = false;
    const double floor_abs = opt.floor * std::max(r.size() ? r.cwiseAbs().maxCoeff() : 0.0, 1e-300);
    double prev = best.value;
    Eigen::VectorXd res = best.residual;
    std::size_t it = 0;
    for (; it < opt.max_iter; ++it) {
        omega = w.array() * res.array().abs().max(floor_abs).pow(p - 2.0);
        LinearFit step = fit_l2(Phi, r, omega);
        double v = weighted_norm(step.residual, w, p);
        res = step.residual;
        if (v < best.value) {
            best.coef = step.coef;
            best.residual = step.residual;
            best.value = v;
        }
        if (std::abs(prev - v) <= opt.rel_tol * std::max(prev, 1e-300)) {
            best.converged = true;
            ++it;
            break;
        }
        prev = v;
    }
    best.iterations = it;
    return best;
}

LinearFit fit_linear(const Eigen::MatrixXd& Phi, const Eigen::VectorXd& r, const Eigen::VectorXd& w, double p) {
    if (std::isinf(p)) return fit_sup(Phi, r);
    if (p == 2.0) return fit_l2(Phi, r, w);
    if (p >= 1.0) return fit_irls(Phi, r, w, p);
    throw NoSolver("no convex solver for p < 1 on linear spans");
}

}  // namespace lethargy
