#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lethargy/scheme.hpp"
#include "lethargy/solve.hpp"

namespace lethargy {

struct Candidate {
    std::string source;
    Element element;
};

struct DensityCertificate {
    std::size_t n = 0;
    double bound = 0.0;         // lower bound on dens_n
    Element element;            // unit norm
    double solver_value = 0.0;  // E(element, A_n)
    std::string direction = "lower";
    FitStatus status = FitStatus::exact;
    std::string source;

    nlohmann::json to_json(bool with_element = false) const;
};

// Unit elements likely to sit far from A_n: alternating bumps for
// generalized-Haar chains, ramps, basis extremals, random probes.
std::vector<Candidate> density_candidates(const ApproximationScheme& s, std::size_t n, std::uint64_t seed,
                                          std::size_t random_count = 6);

// Best certified E(x, A_n) over the (normalized) pool. Throws on an empty pool.
DensityCertificate density_lower_bound(const ApproximationScheme& s, std::size_t n, const std::vector<Candidate>& pool,
                                       const SolveOptions& opt = {});

struct DensityUpper {
    std::size_t n = 0;
    double value = 1.0;
    bool certified = false;
    std::string label;  // "certified" or "empirical probe max"
};

DensityUpper density_upper_estimate(const ApproximationScheme& s, std::size_t n, const std::vector<Candidate>& probes,
                                    const SolveOptions& opt = {});

// Flags (m, n) with lower(L(m, n)) > upper(m) upper(n) + tol. pairing: "gap"
// (L = K(max(m, n))), "sum" (m + n), "max", or "default".
nlohmann::json density_profile_check(const ApproximationScheme& s, std::size_t n_max, const std::string& pairing,
                                     std::uint64_t seed, std::size_t probes = 6);

struct ShapiroVerdict {
    std::string verdict;  // consistent-with-Shapiro | Shapiro-fails | inconclusive
    std::vector<DensityCertificate> certificates;
    std::vector<double> envelope;  // emitted only with Shapiro-fails
    double c = 0.0;                // smallest certificate over the probed levels
    double gamma = 0.0;
    std::size_t probes = 0;
    nlohmann::json log = nlohmann::json::object();

    nlohmann::json to_json() const;
};

inline constexpr double kShapiroThreshold = 0.9;

ShapiroVerdict shapiro_check(const ApproximationScheme& s, std::size_t n_max, std::size_t probe_budget,
                             std::uint64_t seed);

// min over n <= n_max of the best-found E(a, A_n), a unit in A_{n+1}. Per-level values go to log.
double brudnyi_gap(const ApproximationScheme& s, std::size_t n_max, std::size_t samples, std::uint64_t seed,
                   nlohmann::json* log = nullptr);

nlohmann::json property_P_check(const ApproximationScheme& s, double a, double b, const std::vector<std::size_t>& levels,
                                std::uint64_t seed);

// Seminorms: "lipschitz", "bv", "same" (the norm of X), "weighted" (coordinates, (k+1)|x_k|),
// "derivative-sup" (Bernstein side; same as lipschitz on grids).
double seminorm(const ApproximationScheme& s, const std::string& Y, const Element& x);

nlohmann::json jackson_audit(const ApproximationScheme& s, const std::string& Y, std::size_t samples, std::size_t n_max,
                             std::uint64_t seed);
nlohmann::json bernstein_audit(const ApproximationScheme& s, const std::string& Y, std::size_t samples,
                               std::size_t n_max, std::uint64_t seed);

// Random p/q of degree <= max_degree with q bounded away from zero on [0, 1]:
// grid variation against 2n sup|f| + tol.
nlohmann::json dolzhenko_audit(std::size_t samples, std::size_t max_degree, std::size_t nodes, std::uint64_t seed,
                               double tol = 1e-3);

struct AqrNorm {
    double seminorm = 0.0;
    double norm = 0.0;  // x_norm + seminorm
    double tail = 0.0;  // contribution beyond the window (q-th power for finite q)
    bool divergent = false;

    nlohmann::json to_json() const;
};

AqrNorm aqr_norm(const std::vector<double>& profile, double x_norm, double r, double q,
                 const TailModel& tail = TailModel::zero());
AqrNorm aqr_norm(const ErrorProfile& profile, double r, double q, const TailModel& tail = TailModel::zero());

double weighted_sup_norm(const std::vector<double>& profile, const NullSequence& eps, std::size_t m);

}  // namespace lethargy
