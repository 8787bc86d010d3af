#include "lethargy/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace lethargy {

double StepFunction::operator()(double t) const {
    if (values.empty() || t < breaks.front() || t >= breaks.back()) return 0.0;
    auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
    return values[static_cast<std::size_t>(it - breaks.begin()) - 1];
}

StepFunction haar_scaling(int k, std::int64_t j) {
    double h = std::ldexp(1.0, -k);
    return {{static_cast<double>(j) * h, static_cast<double>(j + 1) * h}, {std::pow(2.0, k / 2.0)}};
}

StepFunction haar_wavelet(int k, std::int64_t j) {
    double h = std::ldexp(1.0, -k), a = std::pow(2.0, k / 2.0);
    double t0 = static_cast<double>(j) * h;
    return {{t0, t0 + h / 2.0, t0 + h}, {a, -a}};
}

namespace {

// Merge breakpoints and apply op to the two values on each piece.
template <class Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
    std::vector<double> br;
    br.reserve(f.breaks.size() + g.breaks.size());
    std::merge(f.breaks.begin(), f.breaks.end(), g.breaks.begin(), g.breaks.end(), std::back_inserter(br));
    br.erase(std::unique(br.begin(), br.end()), br.end());
    StepFunction out;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
        double v = op(f(br[i]), g(br[i]));
        if (!out.values.empty() && out.values.back() == v && out.breaks.back() == br[i]) {
            out.breaks.back() = br[i + 1];
            continue;
        }
        if (out.breaks.empty() || out.breaks.back() != br[i]) {
            if (!out.breaks.empty()) {
                // gap with value zero
                out.values.push_back(0.0);
            }
            out.breaks.push_back(br[i]);
        }
        out.values.push_back(v);
        out.breaks.push_back(br[i + 1]);
    }
    return out;
}

}  // namespace

StepFunction axpy(double a, const StepFunction& x, const StepFunction& y) {
    if (x.empty()) return y;
    if (y.empty()) return scaled(x, a);
    return combine(x, y, [a](double u, double v) { return a * u + v; });
}

StepFunction scaled(const StepFunction& f, double a) {
    StepFunction g = f;
    for (auto& v : g.values) v *= a;
    return g;
}

double inner(const StepFunction& f, const StepFunction& g) {
    if (f.empty() || g.empty()) return 0.0;
    double lo = std::max(f.breaks.front(), g.breaks.front()), hi = std::min(f.breaks.back(), g.breaks.back());
    if (lo >= hi) return 0.0;
    std::size_t i = 0, j = 0;
    while (i + 1 < f.breaks.size() && f.breaks[i + 1] <= lo) ++i;
    while (j + 1 < g.breaks.size() && g.breaks[j + 1] <= lo) ++j;
    double s = 0.0, t = lo;
    while (t < hi && i < f.values.size() && j < g.values.size()) {
        double e = std::min({f.breaks[i + 1], g.breaks[j + 1], hi});
        s += (e - t) * f.values[i] * g.values[j];
        t = e;
        if (f.breaks[i + 1] <= t) ++i;
        if (g.breaks[j + 1] <= t) ++j;
    }
    return s;
}

double norm_l2(const StepFunction& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) s += (f.breaks[i + 1] - f.breaks[i]) * f.values[i] * f.values[i];
    return std::sqrt(s);
}

double projection_norm(const StepFunction& f, int level) {
    // <f, phi_{level,j}> for every j meeting the support.
    std::map<std::int64_t, double> coef;
    const double scale = std::ldexp(1.0, level), amp = std::pow(2.0, level / 2.0);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double a = f.breaks[i], b = f.breaks[i + 1];
        auto j0 = static_cast<std::int64_t>(std::floor(a * scale));
        auto j1 = static_cast<std::int64_t>(std::ceil(b * scale));
        for (std::int64_t j = j0; j < j1; ++j) {
            double lo = std::max(a, static_cast<double>(j) / scale), hi = std::min(b, static_cast<double>(j + 1) / scale);
            if (hi > lo) coef[j] += (hi - lo) * f.values[i] * amp;
        }
    }
    double s = 0.0;
    for (const auto& [j, c] : coef) s += c * c;
    return std::sqrt(s);
}

double l2_residual(double x_norm_sq, const Eigen::MatrixXd& gram, const Eigen::VectorXd& rhs) {
    if (rhs.size() == 0) return std::sqrt(std::max(0.0, x_norm_sq));
    Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    Eigen::VectorXd c = ldlt.solve(rhs);
    if (!c.allFinite()) {
        c = gram.completeOrthogonalDecomposition().solve(rhs);
    }
    return std::sqrt(std::max(0.0, x_norm_sq - rhs.dot(c)));
}

}  // namespace lethargy
