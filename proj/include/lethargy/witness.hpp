#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lethargy/scheme.hpp"
#include "lethargy/solve.hpp"

namespace lethargy {

// One claimed bound on E(element, A_n), with its verification record.
struct WitnessBound {
    std::size_t n = 0;
    std::string relation = ">=";  // ">=", ">", "==", "<="
    double bound = 0.0;
    double tol = 0.0;
    double computed = 0.0;  // solver value, or the smallest attempted value
    std::string tag;
    std::string method = "solver";  // solver | attempted-falsification | closed-form
    std::size_t attempts = 1;
    bool verified = false;

    nlohmann::json to_json() const;
    static WitnessBound from_json(const nlohmann::json& j);
};

bool check_relation(const std::string& relation, double computed, double bound, double tol);

struct Witness {
    std::string kind;
    Element element;
    double norm = 0.0;
    nlohmann::json scheme;  // descriptor of the scheme the bounds refer to
    nlohmann::json params;  // constructor arguments; replay rebuilds from these
    std::vector<WitnessBound> bounds;
    nlohmann::json log = nlohmann::json::array();
    std::uint64_t seed = 0;

    bool verified() const;
    nlohmann::json to_json(bool with_element = true) const;
};

// Interleaved c0: x = eps itself, E(x, A_{2n-1}) = eps_n. dim_cap bounds the coordinate dimension.
Witness witness_c0(const NullSequence& eps, std::size_t dim_cap = 64);

// x(t) = 2t - 1 against the quantizer with budget m, levels 0..levels-1.
Witness witness_quantizer(const ValueBudget& m, std::size_t levels, std::size_t nodes = 2049);

// Alternating bumps against a generalized-Haar chain (monomial or trig basis)
// in normalized L_p. Bound: integral of |h - g|^p exceeds 1/5 for every g in A_n.
Witness witness_haar_bumps(std::size_t n, BasisFamily family, double p, std::size_t attempts = 100,
                           std::uint64_t seed = 1, std::size_t nodes = 0);

// Bumps in the sup norm (E = 1 exactly); used as density certificates.
Element haar_bump_element(const Grid& g, std::size_t cells, double p);

Witness witness_bv(std::size_t n, std::size_t attempts = 100, std::uint64_t seed = 1, std::size_t nodes = 4097);

Witness witness_ridge(std::size_t n, std::size_t starts = 100, std::uint64_t seed = 1, std::size_t nodes = 4096);
// Fourier coefficients of sum a_j e^{i alpha_j t} at integer k (normalized torus measure).
std::complex<double> exponential_fourier_coefficient(double alpha, long k);

Witness witness_orthonormal_nterm(std::size_t n, std::size_t dim);

struct WaveletSeparation {
    int level = 0;          // smallest sampled level meeting the ratio
    double measured = 0.0;  // worst sampled |P_0 f| / |f| at that level
    double target = 0.0;
    std::size_t samples = 0;
};
WaveletSeparation wavelet_separation(std::size_t n, std::uint64_t seed = 1, std::size_t samples = 400);
Witness witness_wavelet(std::size_t n, std::uint64_t seed = 1);

Witness witness_translates(std::size_t n, std::size_t m, double p, std::size_t trials = 1000, std::uint64_t seed = 1);

// Z = I_n / n; norm "hs" or "op".
Witness witness_tensor(std::size_t n, const std::string& norm = "hs");

// Unit members of A_s likely to sit far from lower levels (basis columns,
// extremals), followed by random normalized members.
std::vector<Element> structured_members(const ApproximationScheme& s, std::size_t level, Rng& rng,
                                        std::size_t random_count = 8);

struct SlowDecayStep {
    std::size_t index = 0;  // i_j
    double delta = 0.0;
    double dhat = 0.0;      // certified E(y, A_{i_{j-1}}) of the chosen unit y
    std::size_t member_level = 0;
};

Witness construct_slow_decay(const ApproximationScheme& s, const NullSequence& eps, std::size_t i_max,
                             std::uint64_t seed = 1);

struct JumpResult {
    bool found = false;
    std::optional<Element> element;
    double ratio = kInf;  // best E(x, A_n) / E(x, A_{K(n)}) found
    std::size_t candidate = 0;
};

JumpResult find_jump_element(const ApproximationScheme& s, std::size_t n, double c, const std::vector<Element>& pool,
                             const SolveOptions& opt = {});

// Build a witness from its params object ({"type": ..., ...}).
Witness witness_from_params(const nlohmann::json& params);

// Rebuild from params and check every stored bound; returns {"ok", "mismatches"}.
nlohmann::json verify_witness_bundle(const nlohmann::json& bundle);

}  // namespace lethargy
