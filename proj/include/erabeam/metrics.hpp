#pragma once

#include <utility>
#include <vector>

#include "erabeam/channel.hpp"

namespace erabeam {

/// Link-level quality of one beamformer on one channel realization.
struct MetricsReport {
  Eigen::VectorXd sinr;    // per-user, linear
  double sum_rate = 0.0;   // bits/s/Hz
  double scnr = 0.0;       // linear
  double objective = 0.0;  // (1-beta)*sum_rate + beta*scnr
};

/// Per-user SINR and sum rate for transmit columns f_k (one per user).
std::pair<Eigen::VectorXd, double> sinr_and_rate(const std::vector<Eigen::VectorXcd>& cu_channels,
                                                 const Eigen::MatrixXcd& tx_columns,
                                                 double noise_power);

/// Sensing SCNR: total target return over clutter-plus-noise, where the
/// clutter term sums every scatterer echo of every stream.
double scnr(const Eigen::VectorXcd& target_channel,
            const std::vector<Eigen::VectorXcd>& interference_channels,
            const Eigen::MatrixXcd& tx_columns, double noise_power);

double weighted_objective(double sum_rate, double scnr_value, double sensing_weight);

MetricsReport evaluate_metrics(const CompactChannels& channels, const Eigen::MatrixXcd& tx_columns,
                               double noise_power, double sensing_weight);

/// Radiation power gain |c^H b(theta, phi)|^2 of a single element.
double element_gain(const Eigen::VectorXcd& coeff, const HarmonicBasis& basis,
                    const Direction& dir);

/// Element pattern sampled on a theta x phi grid. The coefficient vector
/// must be unit norm (tolerance 1e-9); the peak never exceeds T/(4*pi).
Eigen::MatrixXd element_pattern(const Eigen::VectorXcd& coeff, const HarmonicBasis& basis,
                                const std::vector<double>& thetas,
                                const std::vector<double>& phis);

/// Transmit beam power |h(dir)^H f_k|^2 of stream k, probed with a
/// unit-amplitude single-path channel synthesized at dir.
double array_gain(const TriHybridBeamformer& beamformer, const UpaGeometry& geom,
                  const HarmonicBasis& basis, const Direction& dir, int stream);

}  // namespace erabeam
