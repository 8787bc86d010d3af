#pragma once

#include <cstddef>
#include <string>

#include <Eigen/Dense>

#include "lethargy/space.hpp"

namespace lethargy {

// monomial: polynomials of degree < n on [a,b] (evaluated as Chebyshev T_k for
// conditioning, same span); trig: 1, cos t, sin t, cos 2t, ...; coordinate: e_k.
enum class BasisFamily { monomial, trig, coordinate };

const char* to_string(BasisFamily f);
BasisFamily basis_family_from_string(const std::string& s);

// Columns are the first `count` basis elements sampled on the carrier.
Eigen::MatrixXd basis_matrix(BasisFamily f, const QuasiNormedSpace& X, std::size_t count);
// Derivatives d/dt of the same columns (grid carriers only).
Eigen::MatrixXd basis_derivative_matrix(BasisFamily f, const Grid& g, std::size_t count);

// Zero bound psi(n): nonzero members of the level-n span have < psi(n) zeros.
std::size_t zero_bound(BasisFamily f, std::size_t n);

}  // namespace lethargy
