#include "lethargy/seq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lethargy/common.hpp"

namespace lethargy {

bool is_nonincreasing(const std::vector<double>& v, double rel_tol) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        double scale = std::max(std::abs(v[i]), std::abs(v[i + 1]));
        if (v[i + 1] - v[i] > rel_tol * scale) return false;
    }
    return true;
}

double NullSequence::extended(std::size_t i) const {
    if (i < values.size()) return values[i];
    if (values.empty() || tail.kind == TailModel::Kind::zero) return 0.0;
    return values.back() * std::pow(tail.ratio, static_cast<double>(i - values.size() + 1));
}

void NullSequence::validate() const {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 0.0) || !std::isfinite(values[i]))
            throw ValidationError("null sequence: entry " + std::to_string(i) + " is negative or not finite");
    }
    if (!is_nonincreasing(values))
        throw ValidationError("null sequence: values are not non-increasing");
    if (tail.kind == TailModel::Kind::geometric && !(tail.ratio > 0.0 && tail.ratio < 1.0))
        throw ValidationError("null sequence: geometric tail ratio must lie in (0,1)");
}

void IndexMap::validate() const {
    for (std::size_t n = 0; n < h.size(); ++n)
        if (h[n] < n) throw ValidationError("index map: h(" + std::to_string(n) + ") < " + std::to_string(n));
}

NullSequence lethargy_majorant(const NullSequence& eps, const IndexMap& h) {
    eps.validate();
    h.validate();
    const std::size_t N = eps.size();
    if (h.size() < N) throw ValidationError("index map shorter than the sequence window");
    if (N == 0) throw InsufficientWindow("insufficient window: empty sequence");

    // h'(n) = max_{k<=n} h(k) + n + 1 (0-based), strictly increasing with h'(n) > n.
    std::vector<std::size_t> hp(N);
    std::size_t run = 0;
    for (std::size_t n = 0; n < N; ++n) {
        run = std::max(run, h(n));
        hp[n] = run + n + 1;
    }
    if (hp[0] > N)
        throw InsufficientWindow("insufficient window: first block [0, " + std::to_string(hp[0]) +
                                 ") does not fit in a window of length " + std::to_string(N));

    std::vector<double> xi(N);
    std::size_t m = 0;
    double beta = eps[0];
    while (m < N) {
        std::size_t next = hp[m];
        for (std::size_t i = m; i < std::min(next, N); ++i) xi[i] = beta;
        m = next;
        if (m < N) beta = std::max(eps[m], beta / 2.0);
    }
    NullSequence out(std::move(xi));
    if (out.values.back() > 0.0) out.tail = TailModel::geometric(0.5);
    return out;
}

// Lexicographically least convex chain over [0, M], M = 4N, with f(M) = 0 and
// f >= eps (zero past the window). With C_k the value at k of the steepest
// chord to (M, 0) still lying above every later point:
//   f(0) = C_0,  f(1) = C_1,  f(k+1) = max(C_{k+1}, 2 f(k) - f(k-1)).
NullSequence convex_majorant(const NullSequence& eps) {
    eps.validate();
    const std::size_t N = eps.size();
    if (N == 0) return eps;
    const double M = static_cast<double>(convex_anchor(N));

    std::vector<double> C(N);
    double best = 0.0;  // max_{j>=k} eps_j / (M - j)
    for (std::size_t k = N; k-- > 0;) {
        best = std::max(best, eps[k] / (M - static_cast<double>(k)));
        C[k] = best * (M - static_cast<double>(k));
    }

    std::vector<double> f(N);
    f[0] = std::max(C[0], eps[0]);
    for (std::size_t k = 1; k < N; ++k) {
        double v = std::max(C[k], eps[k]);
        if (k >= 2) v = std::max(v, 2.0 * f[k - 1] - f[k - 2]);
        f[k] = std::max(v, 0.0);
    }
    NullSequence out(std::move(f));
    if (eps.tail.kind == TailModel::Kind::geometric && out.values.back() > 0.0) out.tail = eps.tail;
    return out;
}

NullSequence nonincreasing_rearrangement(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!(values[i] >= 0.0))
            throw ValidationError("rearrangement: entry " + std::to_string(i) + " is negative");
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<double> out;
    out.reserve(values.size());
    for (std::size_t i : idx) out.push_back(values[i]);
    return NullSequence(std::move(out));
}

NullSequence geometric_sequence(std::size_t n, double ratio, double first) {
    std::vector<double> v(n);
    double x = first;
    for (std::size_t i = 0; i < n; ++i, x *= ratio) v[i] = x;
    return NullSequence(std::move(v), TailModel::geometric(ratio));
}

NullSequence harmonic_sequence(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 / static_cast<double>(i + 1);
    return NullSequence(std::move(v));
}

NullSequence sequence_from_json(const nlohmann::json& j) {
    NullSequence s;
    if (j.is_array()) {
        s.values = j.get<std::vector<double>>();
    } else if (j.contains("values")) {
        s.values = j.at("values").get<std::vector<double>>();
        if (j.contains("tail")) {
            const auto& t = j.at("tail");
            std::string kind = t.is_string() ? t.get<std::string>() : t.value("kind", "zero");
            if (kind == "geometric") s.tail = TailModel::geometric(t.at("ratio").get<double>());
            else if (kind != "zero") throw ValidationError("unknown tail model '" + kind + "'");
        }
    } else if (j.contains("rule")) {
        std::string rule = j.at("rule").get<std::string>();
        std::size_t n = j.value("length", std::size_t{16});
        if (rule == "geometric") s = geometric_sequence(n, j.value("ratio", 0.5), j.value("first", 1.0));
        else if (rule == "harmonic") s = harmonic_sequence(n);
        else if (rule == "constant") s = NullSequence(std::vector<double>(n, j.value("value", 1.0)));
        else throw ValidationError("unknown sequence rule '" + rule + "'");
    } else {
        throw ValidationError("sequence descriptor needs 'values' or 'rule'");
    }
    s.validate();
    return s;
}

nlohmann::json to_json(const NullSequence& s) {
    nlohmann::json t;
    if (s.tail.kind == TailModel::Kind::zero) t = {{"kind", "zero"}};
    else t = {{"kind", "geometric"}, {"ratio", s.tail.ratio}};
    return {{"values", s.values}, {"tail", t}};
}

std::string to_csv(const NullSequence& s) {
    std::ostringstream os;
    os.precision(17);
    os << "n,value\n";
    for (std::size_t i = 0; i < s.size(); ++i) os << i << ',' << s[i] << '\n';
    return os.str();
}

}  // namespace lethargy
