#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace lethargy {

struct TailModel {
    enum class Kind { zero, geometric };
    Kind kind = Kind::zero;
    double ratio = 0.0;

    static TailModel zero() { return {}; }
    static TailModel geometric(double q) { return {Kind::geometric, q}; }
};

// Finite window [0, N) of a non-increasing null sequence.
struct NullSequence {
    std::vector<double> values;
    TailModel tail;

    NullSequence() = default;
    explicit NullSequence(std::vector<double> v, TailModel t = {}) : values(std::move(v)), tail(t) {}

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    // Value at i, continued past the window by the tail model.
    double extended(std::size_t i) const;

    void validate() const;
};

// h on the window, h(n) >= n.
struct IndexMap {
    std::vector<std::size_t> h;

    std::size_t size() const { return h.size(); }
    std::size_t operator()(std::size_t n) const { return h[n]; }
    void validate() const;
};

NullSequence lethargy_majorant(const NullSequence& eps, const IndexMap& h);
NullSequence convex_majorant(const NullSequence& eps);
NullSequence nonincreasing_rearrangement(const std::vector<double>& values);

// Anchor abscissa used by convex_majorant for a window of length n.
inline std::size_t convex_anchor(std::size_t n) { return 4 * n; }

bool is_nonincreasing(const std::vector<double>& v, double rel_tol = 1e-12);

// Common generators for configs and tests.
NullSequence geometric_sequence(std::size_t n, double ratio, double first = 1.0);
NullSequence harmonic_sequence(std::size_t n);  // 1/(i+1)
NullSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NullSequence& s);
std::string to_csv(const NullSequence& s);

}  // namespace lethargy
