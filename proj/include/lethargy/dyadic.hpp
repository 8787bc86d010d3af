#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace lethargy {

// Right-continuous step function on R: values[i] on [breaks[i], breaks[i+1]),
// zero outside [breaks.front(), breaks.back()). Breakpoints used here are
// dyadic rationals, exactly representable in double.
struct StepFunction {
    std::vector<double> breaks;
    std::vector<double> values;

    bool empty() const { return values.empty(); }
    double operator()(double t) const;
};

// phi_{k,j} = 2^{k/2} chi_[j 2^-k, (j+1) 2^-k)
StepFunction haar_scaling(int k, std::int64_t j);
// psi_{k,j} = 2^{k/2} (chi on the left half - chi on the right half)
StepFunction haar_wavelet(int k, std::int64_t j);

StepFunction axpy(double a, const StepFunction& x, const StepFunction& y);  // a x + y
StepFunction scaled(const StepFunction& f, double a);
double inner(const StepFunction& f, const StepFunction& g);
double norm_l2(const StepFunction& f);

// Norm of the orthogonal projection onto V_level = span{phi_{level,j}}.
double projection_norm(const StepFunction& f, int level);

// Residual norm of the best L2 fit of x from span(atoms), given the Gram
// matrix and right-hand side.
double l2_residual(double x_norm_sq, const Eigen::MatrixXd& gram, const Eigen::VectorXd& rhs);

}  // namespace lethargy
