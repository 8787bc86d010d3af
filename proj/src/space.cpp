#include "lethargy/space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lethargy {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Grid Grid::interval(double a, double b, std::size_t n) {
    if (n < 2) throw ValidationError("interval grid needs at least 2 nodes");
    if (!(b > a)) throw ValidationError("interval grid needs a < b");
    Grid g;
    g.domain = Domain::interval;
    g.a = a;
    g.b = b;
    g.nodes.resize(static_cast<Eigen::Index>(n));
    g.weights.resize(static_cast<Eigen::Index>(n));
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        g.nodes[static_cast<Eigen::Index>(i)] = (i + 1 == n) ? b : a + h * static_cast<double>(i);
        g.weights[static_cast<Eigen::Index>(i)] = (i == 0 || i + 1 == n) ? h / 2 : h;
    }
    return g;
}

Grid Grid::cells(double a, double b, std::size_t n) {
    std::vector<double> br(n + 1);
    for (std::size_t i = 0; i <= n; ++i) br[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
    br[n] = b;
    return partition(br);
}

Grid Grid::partition(const std::vector<double>& breaks) {
    if (breaks.size() < 2) throw ValidationError("partition grid needs at least one cell");
    Grid g;
    g.domain = Domain::interval;
    g.a = breaks.front();
    g.b = breaks.back();
    const auto n = static_cast<Eigen::Index>(breaks.size() - 1);
    g.nodes.resize(n);
    g.weights.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double lo = breaks[static_cast<std::size_t>(i)], hi = breaks[static_cast<std::size_t>(i) + 1];
        if (!(hi > lo)) throw ValidationError("partition grid breaks must be strictly increasing");
        g.nodes[i] = 0.5 * (lo + hi);
        g.weights[i] = hi - lo;
    }
    return g;
}

Grid Grid::torus(std::size_t n) {
    if (n < 3) throw ValidationError("torus grid needs at least 3 nodes");
    Grid g;
    g.domain = Domain::torus;
    g.a = 0.0;
    g.b = kTwoPi;
    g.nodes.resize(static_cast<Eigen::Index>(n));
    g.weights.setConstant(static_cast<Eigen::Index>(n), kTwoPi / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        g.nodes[static_cast<Eigen::Index>(i)] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    return g;
}

void Grid::validate() const {
    if (nodes.size() == 0 || nodes.size() != weights.size()) throw ValidationError("grid: node/weight size mismatch");
    for (Eigen::Index i = 0; i < nodes.size(); ++i) {
        if (nodes[i] < a || nodes[i] > b) throw ValidationError("grid: node outside the domain");
        if (i > 0 && !(nodes[i] > nodes[i - 1])) throw ValidationError("grid: nodes not strictly increasing");
        if (!(weights[i] >= 0.0)) throw ValidationError("grid: negative weight");
    }
    if (domain == Domain::torus && nodes[nodes.size() - 1] >= b) throw ValidationError("grid: torus node at 2*pi");
    double s = weights.sum();
    if (std::abs(s - length()) > 1e-10 * length()) throw ValidationError("grid: weights do not sum to the domain length");
}

Element Element::real(Eigen::VectorXd v) {
    Element e;
    e.kind = Kind::real;
    e.re = std::move(v);
    return e;
}

Element Element::complex(Eigen::VectorXcd v) {
    Element e;
    e.kind = Kind::complex;
    e.cx = std::move(v);
    return e;
}

Element Element::matrix(Eigen::MatrixXd m) {
    Element e;
    e.kind = Kind::matrix;
    e.mat = std::move(m);
    return e;
}

std::size_t Element::size() const {
    switch (kind) {
        case Kind::real: return static_cast<std::size_t>(re.size());
        case Kind::complex: return static_cast<std::size_t>(cx.size());
        case Kind::matrix: return static_cast<std::size_t>(mat.size());
    }
    return 0;
}

Element Element::scaled(double s) const {
    Element e = *this;
    e.re *= s;
    e.cx *= s;
    e.mat *= s;
    return e;
}

Element Element::operator+(const Element& o) const {
    if (kind != o.kind || size() != o.size()) throw ValidationError("element shape mismatch in +");
    Element e = *this;
    if (kind == Kind::real) e.re += o.re;
    else if (kind == Kind::complex) e.cx += o.cx;
    else e.mat += o.mat;
    return e;
}

Element Element::operator-(const Element& o) const { return *this + o.scaled(-1.0); }

Element Element::zero_like() const { return scaled(0.0); }

QuasiNormedSpace QuasiNormedSpace::lp_grid(Grid g, double p, bool normalized) {
    if (!(p > 0.0)) throw ValidationError("exponent p must be positive");
    g.validate();
    QuasiNormedSpace X;
    X.carrier = Carrier::grid;
    X.grid = std::make_shared<const Grid>(std::move(g));
    X.dim = X.grid->size();
    X.p = p;
    X.kind = std::isinf(p) ? NormKind::sup : NormKind::lp;
    X.normalized = normalized;
    return X;
}

QuasiNormedSpace QuasiNormedSpace::sup_grid(Grid g) { return lp_grid(std::move(g), kInf); }

QuasiNormedSpace QuasiNormedSpace::lp_coord(std::size_t dim, double p) {
    if (!(p > 0.0)) throw ValidationError("exponent p must be positive");
    if (dim == 0) throw ValidationError("coordinate dimension must be positive");
    QuasiNormedSpace X;
    X.carrier = Carrier::coordinate;
    X.dim = dim;
    X.p = p;
    X.kind = std::isinf(p) ? NormKind::sup : NormKind::lp;
    return X;
}

QuasiNormedSpace QuasiNormedSpace::sup_coord(std::size_t dim) { return lp_coord(dim, kInf); }

QuasiNormedSpace QuasiNormedSpace::matrices(std::size_t n, NormKind kind) {
    if (kind != NormKind::hs && kind != NormKind::op) throw ValidationError("matrix spaces use the HS or operator norm");
    if (n == 0) throw ValidationError("matrix size must be positive");
    QuasiNormedSpace X;
    X.carrier = Carrier::matrix;
    X.dim = n;
    X.p = kind == NormKind::hs ? 2.0 : kInf;
    X.kind = kind;
    return X;
}

double QuasiNormedSpace::triangle_modulus() const {
    if (kind == NormKind::lp && p < 1.0) return std::pow(2.0, 1.0 / p - 1.0);
    return 1.0;
}

Eigen::VectorXd QuasiNormedSpace::weights() const {
    if (carrier == Carrier::grid) {
        if (normalized) return grid->weights / grid->length();
        return grid->weights;
    }
    return Eigen::VectorXd::Ones(static_cast<Eigen::Index>(sample_count()));
}

std::size_t QuasiNormedSpace::sample_count() const {
    if (carrier == Carrier::matrix) return dim * dim;
    return dim;
}

void QuasiNormedSpace::check_shape(const Element& x) const {
    switch (carrier) {
        case Carrier::grid:
            if (x.kind == Element::Kind::matrix || x.size() != dim)
                throw ValidationError("element does not match the grid carrier");
            if (x.kind == Element::Kind::complex && grid->domain != Domain::torus)
                throw ValidationError("complex elements are only supported on the torus");
            break;
        case Carrier::coordinate:
            if (x.kind != Element::Kind::real || x.size() != dim)
                throw ValidationError("element does not match the coordinate carrier");
            break;
        case Carrier::matrix:
            if (x.kind != Element::Kind::matrix || static_cast<std::size_t>(x.mat.rows()) != dim ||
                static_cast<std::size_t>(x.mat.cols()) != dim)
                throw ValidationError("element does not match the matrix carrier");
            break;
    }
}

double weighted_norm(const Eigen::VectorXd& r, const Eigen::VectorXd& w, double p) {
    if (std::isinf(p)) return r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
    if (p == 2.0) return std::sqrt((w.array() * r.array().square()).sum());
    if (p == 1.0) return (w.array() * r.array().abs()).sum();
    double s = (w.array() * r.array().abs().pow(p)).sum();
    return std::pow(s, 1.0 / p);
}

double QuasiNormedSpace::norm(const Element& x) const {
    check_shape(x);
    if (carrier == Carrier::matrix) {
        if (kind == NormKind::hs) return x.mat.norm();
        if (x.mat.size() == 0) return 0.0;
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(x.mat);
        return svd.singularValues()(0);
    }
    Eigen::VectorXd mag = x.kind == Element::Kind::complex ? Eigen::VectorXd(x.cx.cwiseAbs()) : x.re;
    return weighted_norm(mag, weights(), kind == NormKind::sup ? kInf : p);
}

std::string QuasiNormedSpace::describe() const {
    std::ostringstream os;
    switch (carrier) {
        case Carrier::grid:
            os << (grid->domain == Domain::torus ? "torus" : "interval") << "[" << grid->size() << "]";
            break;
        case Carrier::coordinate: os << "coord[" << dim << "]"; break;
        case Carrier::matrix: os << "matrix[" << dim << "x" << dim << "]"; break;
    }
    switch (kind) {
        case NormKind::lp: os << " L" << p; break;
        case NormKind::sup: os << " sup"; break;
        case NormKind::hs: os << " HS"; break;
        case NormKind::op: os << " op"; break;
    }
    return os.str();
}

double set_distance(const QuasiNormedSpace& X, const std::vector<Element>& B, const DistanceOracle& oracle) {
    if (B.empty()) throw ValidationError("set_distance: empty set B");
    double d = 0.0;
    for (const auto& b : B) {
        X.check_shape(b);
        d = std::max(d, oracle(b));
    }
    return d;
}

Element sample(const Grid& g, const std::function<double(double)>& f) {
    Eigen::VectorXd v(g.nodes.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = f(g.nodes[i]);
    return Element::real(std::move(v));
}

namespace {
double parse_p(const nlohmann::json& j) {
    if (!j.contains("p")) return 2.0;
    const auto& p = j.at("p");
    if (p.is_string()) {
        std::string s = p.get<std::string>();
        if (s == "inf" || s == "sup") return kInf;
        return std::stod(s);
    }
    return p.get<double>();
}
}  // namespace

QuasiNormedSpace space_from_json(const nlohmann::json& j) {
    std::string carrier = j.value("carrier", "grid");
    if (carrier == "grid") {
        std::string dom = j.value("domain", "interval");
        Grid g;
        if (dom == "torus") {
            g = Grid::torus(j.value("nodes", std::size_t{4096}));
        } else if (dom == "interval") {
            double a = j.value("a", 0.0), b = j.value("b", 1.0);
            std::string quad = j.value("quadrature", "trapezoid");
            if (quad == "trapezoid") g = Grid::interval(a, b, j.value("nodes", std::size_t{2049}));
            else if (quad == "uniform" || quad == "cells") g = Grid::cells(a, b, j.value("nodes", std::size_t{2048}));
            else throw ValidationError("unknown quadrature '" + quad + "'");
        } else {
            throw ValidationError("unknown domain '" + dom + "'");
        }
        return QuasiNormedSpace::lp_grid(std::move(g), parse_p(j), j.value("normalized", false));
    }
    if (carrier == "coordinate") return QuasiNormedSpace::lp_coord(j.at("dim").get<std::size_t>(), parse_p(j));
    if (carrier == "matrix") {
        std::string n = j.value("norm", "hs");
        NormKind k = n == "hs" ? NormKind::hs : n == "op" || n == "operator" ? NormKind::op : NormKind::lp;
        return QuasiNormedSpace::matrices(j.at("dim").get<std::size_t>(), k);
    }
    throw ValidationError("unknown carrier '" + carrier + "'");
}

nlohmann::json to_json(const QuasiNormedSpace& X) {
    nlohmann::json j;
    auto pj = [&]() -> nlohmann::json {
        if (std::isinf(X.p)) return "inf";
        return X.p;
    };
    switch (X.carrier) {
        case Carrier::grid:
            j["carrier"] = "grid";
            j["domain"] = X.grid->domain == Domain::torus ? "torus" : "interval";
            j["a"] = X.grid->a;
            j["b"] = X.grid->b;
            j["nodes"] = X.grid->size();
            if (X.grid->domain == Domain::interval)
                j["quadrature"] = X.grid->nodes[0] > X.grid->a ? "cells" : "trapezoid";
            j["p"] = pj();
            j["normalized"] = X.normalized;
            break;
        case Carrier::coordinate:
            j["carrier"] = "coordinate";
            j["dim"] = X.dim;
            j["p"] = pj();
            break;
        case Carrier::matrix:
            j["carrier"] = "matrix";
            j["dim"] = X.dim;
            j["norm"] = X.kind == NormKind::hs ? "hs" : "op";
            break;
    }
    return j;
}

nlohmann::json element_to_json(const Element& x) {
    nlohmann::json j;
    switch (x.kind) {
        case Element::Kind::real:
            j["kind"] = "real";
            j["values"] = std::vector<double>(x.re.data(), x.re.data() + x.re.size());
            break;
        case Element::Kind::complex: {
            j["kind"] = "complex";
            std::vector<double> re(static_cast<std::size_t>(x.cx.size())), im(re.size());
            for (Eigen::Index i = 0; i < x.cx.size(); ++i) {
                re[static_cast<std::size_t>(i)] = x.cx[i].real();
                im[static_cast<std::size_t>(i)] = x.cx[i].imag();
            }
            j["re"] = re;
            j["im"] = im;
            break;
        }
        case Element::Kind::matrix: {
            j["kind"] = "matrix";
            nlohmann::json rows = nlohmann::json::array();
            for (Eigen::Index r = 0; r < x.mat.rows(); ++r) {
                std::vector<double> row(static_cast<std::size_t>(x.mat.cols()));
                for (Eigen::Index c = 0; c < x.mat.cols(); ++c) row[static_cast<std::size_t>(c)] = x.mat(r, c);
                rows.push_back(row);
            }
            j["rows"] = rows;
            break;
        }
    }
    return j;
}

Element element_from_json(const nlohmann::json& j) {
    std::string kind = j.value("kind", "real");
    if (kind == "real") {
        auto v = j.at("values").get<std::vector<double>>();
        return Element::real(Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
    }
    if (kind == "complex") {
        auto re = j.at("re").get<std::vector<double>>();
        auto im = j.at("im").get<std::vector<double>>();
        if (re.size() != im.size()) throw ValidationError("complex element: re/im size mismatch");
        Eigen::VectorXcd v(static_cast<Eigen::Index>(re.size()));
        for (std::size_t i = 0; i < re.size(); ++i) v[static_cast<Eigen::Index>(i)] = {re[i], im[i]};
        return Element::complex(std::move(v));
    }
    if (kind == "matrix") {
        const auto& rows = j.at("rows");
        Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto row = rows[r].get<std::vector<double>>();
            if (static_cast<Eigen::Index>(row.size()) != m.cols()) throw ValidationError("matrix element: ragged rows");
            for (std::size_t c = 0; c < row.size(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c];
        }
        return Element::matrix(std::move(m));
    }
    throw ValidationError("unknown element kind '" + kind + "'");
}

std::string grid_function_csv(const Grid& g, const Element& x) {
    if (x.kind != Element::Kind::real || x.size() != g.size()) throw ValidationError("csv: element does not match grid");
    std::ostringstream os;
    os.precision(17);
    os << "node,value\n";
    for (Eigen::Index i = 0; i < x.re.size(); ++i) os << g.nodes[i] << ',' << x.re[i] << '\n';
    return os.str();
}

}  // namespace lethargy
