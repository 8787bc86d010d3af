#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "lethargy/basis.hpp"
#include "lethargy/common.hpp"
#include "lethargy/seq.hpp"
#include "lethargy/space.hpp"

namespace lethargy {

enum class SchemeKind { subspace_chain, nterm, quantizer, interleaved_c0, spline, rank, wavelet_haar };

const char* to_string(SchemeKind k);
SchemeKind scheme_kind_from_string(const std::string& s);

struct Dictionary {
    std::vector<Element> atoms;
    std::string label;
    Eigen::MatrixXd matrix;  // samples x atoms, real carriers only
    bool orthonormal = false;

    std::size_t size() const { return atoms.size(); }
};

// Value budget m(n) of the quantizer scheme.
struct ValueBudget {
    enum class Rule { linear, exp2, list };
    Rule rule = Rule::linear;
    std::size_t a = 1, b = 0;  // linear: a*n + b
    std::vector<std::size_t> values;

    std::size_t operator()(std::size_t n) const;
    std::size_t max_level() const;
    nlohmann::json to_json() const;
    static ValueBudget from_json(const nlohmann::json& j);
};

struct ApproximationScheme {
    SchemeKind kind = SchemeKind::subspace_chain;
    std::string name;
    nlohmann::json descriptor;
    QuasiNormedSpace space;
    std::size_t levels = 0;  // largest solvable level

    BasisFamily basis = BasisFamily::monomial;
    Eigen::MatrixXd basis_cache;  // samples x levels
    std::shared_ptr<const Dictionary> dictionary;
    ValueBudget budget;
    std::size_t degree_bound = 2;  // spline pieces have degree < degree_bound
    bool corrupted_gap = false;    // K(n) = n forced (negative tests)

    std::size_t max_level() const { return levels; }
    // K(n); empty when the documented rule has no finite value.
    std::optional<std::size_t> gap(std::size_t n) const;
    std::string gap_rule() const;
    IndexMap gap_map(std::size_t window) const;

    // Zero-bound psi for generalized-Haar families, when meaningful.
    std::optional<std::size_t> zero_bound_at(std::size_t n) const;

    void check_level(std::size_t n) const;
    Element sample_member(std::size_t n, Rng& rng) const;
    Element zero() const;
};

ApproximationScheme build_scheme(const nlohmann::json& descriptor);

// Named descriptors for the CLI and tests.
const nlohmann::json& scheme_registry();
nlohmann::json resolve_scheme(const nlohmann::json& ref);

// Membership a in A_n: distance below tol except rank (numerical rank) and
// quantizer (distinct-value count).
bool contains(const ApproximationScheme& s, const Element& a, std::size_t n, double tol = 1e-9);

// Distinct values with merging tolerance 1e-12 (relative to max(1,|v|)).
std::size_t distinct_value_count(const Eigen::VectorXd& v, double tol = 1e-12);
std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_cut = 1e-10);

nlohmann::json validate_scheme(const ApproximationScheme& s, std::size_t trials, std::uint64_t seed);

}  // namespace lethargy
