#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "lethargy/fit.hpp"
#include "lethargy/scheme.hpp"

namespace lethargy {

struct BestApprox {
    double value = 0.0;
    double lower = 0.0;  // certified lower bound; equals value when exact
    Element minimizer;
    FitStatus status = FitStatus::exact;
    std::string method;
};

struct SolveOptions {
    std::uint64_t seed = 1;
    std::size_t restarts = 8;          // greedy n-term restarts
    double exhaustive_cutoff = 1e5;    // max subsets for exhaustive n-term search
    std::size_t threads = 0;           // 0 = thread_cap()
};

// E(x, A_n) with minimizer and status, dispatched by scheme kind and norm.
BestApprox best_approx(const ApproximationScheme& s, const Element& x, std::size_t n, const SolveOptions& opt = {});

// ---- building blocks, exposed for tests and witnesses

struct Quantization {
    double value = 0.0;
    std::vector<double> levels;          // sorted
    std::vector<std::size_t> assignment; // sample -> level index
};

// Optimal approximation by functions with at most m values (m >= 1).
Quantization quantizer_error(const QuasiNormedSpace& X, const Element& x, std::size_t m);
// m equal cells of [-|x|_inf, |x|_inf], each sample sent to its cell midpoint.
Quantization midpoint_quantizer(const QuasiNormedSpace& X, const Element& x, std::size_t m);
// Exact sup-norm value for sorted values: min over m-part contiguous partitions of the max half-range.
double quantizer_sup_value(const std::vector<double>& sorted_values, std::size_t m);

// Interleaved c0 levels: 0 -> {0}, 2k-1 -> Pi_k, 2k -> B_{k+1}. Sup norm.
BestApprox c0_best_approx(const Eigen::VectorXd& x, std::size_t level);

BestApprox rank_best_approx(const Eigen::MatrixXd& m, std::size_t n, NormKind kind);

struct SplineFit {
    double value = 0.0;
    std::vector<std::size_t> breaks;  // piece start indices plus the end index
    Eigen::VectorXd fitted;
    FitStatus status = FitStatus::exact;
};

// Piecewise polynomials of degree < r with at most `pieces` pieces, knots at grid nodes.
SplineFit spline_best_approx(const QuasiNormedSpace& X, const Eigen::VectorXd& x, std::size_t pieces, std::size_t r);

// n-term approximation from the columns of D (samples x atoms).
BestApprox nterm_best_approx(const QuasiNormedSpace& X, const Eigen::MatrixXd& D, bool coordinate_dictionary,
                             const Eigen::VectorXd& x, std::size_t n, const SolveOptions& opt = {});

// ---- error profiles

struct ProfileEntry {
    std::size_t n = 0;
    double value = 0.0;
    double lower = 0.0;
    FitStatus status = FitStatus::exact;
    std::string error;  // non-empty when the solver threw
};

struct ErrorProfile {
    std::vector<ProfileEntry> entries;
    double x_norm = 0.0;
    std::string scheme;

    std::vector<double> values() const;
    nlohmann::json to_json() const;
    std::string to_csv() const;
};

// Levels 0..n_max, evaluated concurrently up to the thread cap. Upper-bound
// entries are replaced by the running minimum, which is still an upper bound.
ErrorProfile error_profile(const ApproximationScheme& s, const Element& x, std::size_t n_max,
                           const SolveOptions& opt = {});

// Run f(i) for i in [0, count) on up to `threads` workers; order-independent.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& f);

}  // namespace lethargy
