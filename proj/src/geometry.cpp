#include "erabeam/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace erabeam {

UpaGeometry::UpaGeometry(int nx_, int ny_, double dx_, double dy_, double wavelength_)
    : nx(nx_), ny(ny_), dx(dx_), dy(dy_), wavelength(wavelength_) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("UpaGeometry: need at least one element per axis");
  if (dx <= 0.0 || dy <= 0.0) throw std::invalid_argument("UpaGeometry: element spacing must be positive");
  if (wavelength <= 0.0) throw std::invalid_argument("UpaGeometry: wavelength must be positive");
}

UpaGeometry UpaGeometry::half_wavelength(int side, double wavelength) {
  return UpaGeometry(side, side, wavelength / 2.0, wavelength / 2.0, wavelength);
}

Eigen::VectorXcd upa_steering(const UpaGeometry& geom, const Direction& dir) {
  const double st = std::sin(dir.theta);
  const double kx = -2.0 * std::numbers::pi / geom.wavelength * geom.dx * st * std::cos(dir.phi);
  const double ky = -2.0 * std::numbers::pi / geom.wavelength * geom.dy * st * std::sin(dir.phi);
  Eigen::VectorXcd a(geom.num_elements());
  for (int ix = 0; ix < geom.nx; ++ix) {
    const std::complex<double> px = std::polar(1.0, kx * ix);
    for (int iy = 0; iy < geom.ny; ++iy) {
      a(ix * geom.ny + iy) = px * std::polar(1.0, ky * iy);
    }
  }
  return a;
}

}  // namespace erabeam
