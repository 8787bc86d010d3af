#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace lethargy {

// Dense two-phase simplex for  min c'x  s.t.  A x = b, x >= 0.
// Sized for few rows and many columns (dual Chebyshev problems).
struct LpResult {
    enum class Status { optimal, infeasible, unbounded, iteration_limit };
    Status status = Status::infeasible;
    Eigen::VectorXd x;
    Eigen::VectorXd y;  // simplex multipliers, c_j - y'A_j >= 0 at optimum
    double objective = 0.0;
    std::size_t iterations = 0;
};

LpResult simplex(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c, double tol = 1e-10);

enum class FitStatus { exact, upper_bound, interval };

const char* to_string(FitStatus s);

// Best approximation of r from span of the columns of Phi in one norm.
struct LinearFit {
    Eigen::VectorXd coef;
    Eigen::VectorXd residual;
    double value = 0.0;  // norm of the residual actually achieved
    double lower = 0.0;  // certified lower bound (== value when exact)
    FitStatus status = FitStatus::exact;
    std::size_t iterations = 0;
    bool converged = true;
};

LinearFit fit_l2(const Eigen::MatrixXd& Phi, const Eigen::VectorXd& r, const Eigen::VectorXd& w);

// Minimax fit through the dual LP; status interval if primal and dual disagree.
LinearFit fit_sup(const Eigen::MatrixXd& Phi, const Eigen::VectorXd& r, double tol = 1e-10);

struct IrlsOptions {
    double floor = 1e-12;
    std::size_t max_iter = 500;
    double rel_tol = 1e-10;
};

// Weighted Lp fit, 1 <= p < inf, by iteratively reweighted least squares.
// Always upper-bound status: the iterate is feasible, optimality is not certified.
LinearFit fit_irls(const Eigen::MatrixXd& Phi, const Eigen::VectorXd& r, const Eigen::VectorXd& w, double p,
                   const IrlsOptions& opt = {}, const Eigen::VectorXd* start_weights = nullptr);

// Dispatch on p: 2 -> projection, inf -> LP, [1, inf) -> IRLS. p < 1 is rejected.
LinearFit fit_linear(const Eigen::MatrixXd& Phi, const Eigen::VectorXd& r, const Eigen::VectorXd& w, double p);

}  // namespace lethargy
