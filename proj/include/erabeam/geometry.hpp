#pragma once

#include <Eigen/Dense>

namespace erabeam {

/// Propagation direction: elevation from the +z axis and azimuth in the
/// XoY plane, both in radians.
struct Direction {
  double theta = 0.0;
  double phi = 0.0;
};

/// Uniform planar array in the XoY plane. Elements are ordered x-major:
/// the x index varies slowest, matching the Kronecker order of the
/// steering vector.
struct UpaGeometry {
  int nx = 1;
  int ny = 1;
  double dx = 0.0;          // element spacing along x, meters
  double dy = 0.0;          // element spacing along y, meters
  double wavelength = 0.0;  // carrier wavelength, meters

  UpaGeometry(int nx_, int ny_, double dx_, double dy_, double wavelength_);

  int num_elements() const { return nx * ny; }

  /// Half-wavelength-spaced square array of size side x side.
  static UpaGeometry half_wavelength(int side, double wavelength);
};

/// Array response vector a(theta, phi): unit-modulus inter-element phase
/// profile, length nx*ny, first entry 1.
Eigen::VectorXcd upa_steering(const UpaGeometry& geom, const Direction& dir);

}  // namespace erabeam
