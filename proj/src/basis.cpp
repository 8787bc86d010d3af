#include "lethargy/basis.hpp"

#include <cmath>

namespace lethargy {

const char* to_string(BasisFamily f) {
    switch (f) {
        case BasisFamily::monomial: return "monomial";
        case BasisFamily::trig: return "trig";
        case BasisFamily::coordinate: return "coordinate";
    }
    return "?";
}

BasisFamily basis_family_from_string(const std::string& s) {
    if (s == "monomial" || s == "polynomial") return BasisFamily::monomial;
    if (s == "trig" || s == "trigonometric") return BasisFamily::trig;
    if (s == "coordinate" || s == "orthonormal") return BasisFamily::coordinate;
    throw ValidationError("unknown basis family '" + s + "'");
}

namespace {

void chebyshev_columns(const Grid& g, std::size_t count, Eigen::MatrixXd& T, Eigen::MatrixXd* dT) {
    const Eigen::Index N = static_cast<Eigen::Index>(g.size()), K = static_cast<Eigen::Index>(count);
    T.resize(N, K);
    if (dT) dT->resize(N, K);
    const double scale = 2.0 / (g.b - g.a);
    for (Eigen::Index i = 0; i < N; ++i) {
        double u = scale * (g.nodes[i] - g.a) - 1.0;
        // T_k and U_{k-1} by the three-term recurrences; T_k' = k U_{k-1}.
        double t0 = 1.0, t1 = u, u0 = 1.0, u1 = 2.0 * u;
        for (Eigen::Index k = 0; k < K; ++k) {
            double tk, uk1;  // T_k, U_{k-1}
            if (k == 0) {
                tk = 1.0;
                uk1 = 0.0;
            } else if (k == 1) {
                tk = u;
                uk1 = 1.0;
            } else {
                tk = 2.0 * u * t1 - t0;
                t0 = t1;
                t1 = tk;
                uk1 = (k == 2) ? u1 : 2.0 * u * u1 - u0;
                if (k > 2) {
                    u0 = u1;
                    u1 = uk1;
                }
            }
            T(i, k) = tk;
            if (dT) (*dT)(i, k) = static_cast<double>(k) * uk1 * scale;
        }
    }
}

void trig_columns(const Grid& g, std::size_t count, Eigen::MatrixXd& T, Eigen::MatrixXd* dT) {
    const Eigen::Index N = static_cast<Eigen::Index>(g.size()), K = static_cast<Eigen::Index>(count);
    T.resize(N, K);
    if (dT) dT->resize(N, K);
    for (Eigen::Index i = 0; i < N; ++i) {
        double t = g.nodes[i];
        for (Eigen::Index k = 0; k < K; ++k) {
            double f = static_cast<double>((k + 1) / 2);
            if (k == 0) {
                T(i, k) = 1.0;
                if (dT) (*dT)(i, k) = 0.0;
            } else if (k % 2 == 1) {
                T(i, k) = std::cos(f * t);
                if (dT) (*dT)(i, k) = -f * std::sin(f * t);
            } else {
                T(i, k) = std::sin(f * t);
                if (dT) (*dT)(i, k) = f * std::cos(f * t);
            }
        }
    }
}

}  // namespace

Eigen::MatrixXd basis_matrix(BasisFamily f, const QuasiNormedSpace& X, std::size_t count) {
    Eigen::MatrixXd T;
    if (f == BasisFamily::coordinate) {
        if (X.carrier == Carrier::matrix) throw ValidationError("coordinate basis needs a vector carrier");
        if (count > X.sample_count()) throw ValidationError("more coordinate vectors than the dimension");
        T = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(X.sample_count()), static_cast<Eigen::Index>(count));
        return T;
    }
    if (X.carrier != Carrier::grid) throw ValidationError(std::string(to_string(f)) + " basis needs a grid carrier");
    if (f == BasisFamily::monomial) chebyshev_columns(*X.grid, count, T, nullptr);
    else trig_columns(*X.grid, count, T, nullptr);
    return T;
}

Eigen::MatrixXd basis_derivative_matrix(BasisFamily f, const Grid& g, std::size_t count) {
    Eigen::MatrixXd T, dT;
    if (f == BasisFamily::monomial) chebyshev_columns(g, count, T, &dT);
    else if (f == BasisFamily::trig) trig_columns(g, count, T, &dT);
    else throw ValidationError("derivatives need a function basis");
    return dT;
}

std::size_t zero_bound(BasisFamily f, std::size_t n) {
    switch (f) {
        case BasisFamily::monomial: return n;      // degree < n
        case BasisFamily::trig: return n + 1;      // level n sits inside trig degree <= n/2
        case BasisFamily::coordinate: return n + 1;
    }
    return n + 1;
}

}  // namespace lethargy
