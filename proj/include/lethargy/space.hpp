#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "lethargy/common.hpp"

namespace lethargy {

enum class Domain { interval, torus };
enum class Quadrature { trapezoid, uniform };

struct Grid {
    Domain domain = Domain::interval;
    double a = 0.0, b = 1.0;
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;

    // n nodes including both endpoints, trapezoid weights.
    static Grid interval(double a, double b, std::size_t n);
    // n cells of equal width, nodes at cell midpoints, weights = cell width.
    static Grid cells(double a, double b, std::size_t n);
    // Arbitrary partition: nodes at midpoints of [breaks[i], breaks[i+1]).
    static Grid partition(const std::vector<double>& breaks);
    // n equispaced nodes 2*pi*k/n, uniform weights.
    static Grid torus(std::size_t n);

    std::size_t size() const { return static_cast<std::size_t>(nodes.size()); }
    double length() const { return b - a; }
    void validate() const;
};

// Real vector, complex vector (torus only) or matrix.
struct Element {
    enum class Kind { real, complex, matrix };
    Kind kind = Kind::real;
    Eigen::VectorXd re;
    Eigen::VectorXcd cx;
    Eigen::MatrixXd mat;

    Element() = default;
    static Element real(Eigen::VectorXd v);
    static Element complex(Eigen::VectorXcd v);
    static Element matrix(Eigen::MatrixXd m);

    std::size_t size() const;
    Element scaled(double s) const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element zero_like() const;
};

enum class Carrier { grid, coordinate, matrix };
enum class NormKind { lp, sup, hs, op };

struct QuasiNormedSpace {
    Carrier carrier = Carrier::grid;
    std::shared_ptr<const Grid> grid;
    std::size_t dim = 0;  // coordinate dimension or square matrix size
    double p = 2.0;       // kInf for sup
    NormKind kind = NormKind::lp;
    bool normalized = false;  // grid weights divided by domain length (probability measure)

    static QuasiNormedSpace lp_grid(Grid g, double p, bool normalized = false);
    static QuasiNormedSpace sup_grid(Grid g);
    static QuasiNormedSpace lp_coord(std::size_t dim, double p);
    static QuasiNormedSpace sup_coord(std::size_t dim);
    static QuasiNormedSpace matrices(std::size_t n, NormKind kind);

    double triangle_modulus() const;
    // Quadrature weights the Lp norm uses (ones for coordinates).
    Eigen::VectorXd weights() const;
    std::size_t sample_count() const;

    double norm(const Element& x) const;
    void check_shape(const Element& x) const;
    bool is_sup() const { return kind == NormKind::sup; }
    std::string describe() const;
};

using DistanceOracle = std::function<double(const Element&)>;

// max over B of oracle(b).
double set_distance(const QuasiNormedSpace& X, const std::vector<Element>& B, const DistanceOracle& oracle);

// Lp norm of a weighted real residual (p = kInf for sup).
double weighted_norm(const Eigen::VectorXd& r, const Eigen::VectorXd& w, double p);

// Sample a function of t on the grid nodes.
Element sample(const Grid& g, const std::function<double(double)>& f);

QuasiNormedSpace space_from_json(const nlohmann::json& j);
nlohmann::json to_json(const QuasiNormedSpace& X);
nlohmann::json element_to_json(const Element& x);
Element element_from_json(const nlohmann::json& j);
std::string grid_function_csv(const Grid& g, const Element& x);

}  // namespace lethargy
