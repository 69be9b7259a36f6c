#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace erabeam {

/// Truncated spherical-harmonic basis of degree U. The basis length is
/// T = (U+1)^2 and entries are addressed by the linear index
/// t = u^2 + u + q + 1 for 0 <= u <= U, -u <= q <= u.
struct HarmonicBasis {
  int degree = 0;  // truncation degree U

  explicit HarmonicBasis(int truncation_degree);

  int size() const { return (degree + 1) * (degree + 1); }  // T
};

/// Linear index t of the harmonic (u, q), 1-based. Throws std::domain_error
/// for q outside [-u, u] or negative u.
int harmonic_index(int u, int q);

/// Inverse of harmonic_index: recovers (u, q) from the 1-based linear index.
std::pair<int, int> harmonic_degree_order(int t);

/// Associated Legendre function P_u^m(x) with the Condon-Shortley phase,
/// evaluated by upward recurrence. Requires 0 <= m <= u and |x| <= 1.
double assoc_legendre(int u, int m, double x);

/// Orthonormal spherical harmonic Y_u^q(theta, phi). theta is the elevation
/// from the +z axis, phi the azimuth. Negative orders use P_u^{|q|} and the
/// |q|-normalization, so Y_u^{-q} = conj(Y_u^q).
std::complex<double> sph_harmonic(int u, int q, double theta, double phi);

/// Basis vector b(theta, phi): entry t-1 holds Y at harmonic_degree_order(t).
/// Its squared norm is T/(4*pi) for every direction.
Eigen::VectorXcd basis_vector(const HarmonicBasis& basis, double theta, double phi);

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
/// Used for quadrature over cos(theta) in the sphere integrals.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

}  // namespace erabeam
