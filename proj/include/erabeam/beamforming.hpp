#pragma once

#include <Eigen/Dense>

namespace erabeam {

/// Per-antenna electromagnetic beamformer: column n holds the unit-norm
/// harmonic coefficient vector of antenna n. Applying it to an EM-domain
/// channel contracts each length-T antenna block with the matching column
/// (the block-diagonal EM precoder, stored without materializing it).
struct EmBeamformer {
  Eigen::MatrixXcd coeff;  // T x N_T

  int basis_size() const { return static_cast<int>(coeff.rows()); }
  int num_antennas() const { return static_cast<int>(coeff.cols()); }

  /// All antennas radiate the constant (isotropic) harmonic: c = e1.
  static EmBeamformer isotropic(int basis_size, int num_antennas);
};

/// Joint digital / analog / electromagnetic transmit beamformer.
struct TriHybridBeamformer {
  Eigen::MatrixXcd digital;  // N_TRF x K
  Eigen::MatrixXcd analog;   // N_T x N_TRF, unit-modulus entries
  EmBeamformer em;

  /// Per-stream transmit columns f_k = analog * digital(:, k).
  Eigen::MatrixXcd full_digital() const { return analog * digital; }
};

}  // namespace erabeam
