#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "erabeam/beamforming.hpp"
#include "erabeam/geometry.hpp"
#include "erabeam/harmonics.hpp"
#include "erabeam/random.hpp"

namespace erabeam {

/// One propagation path: direction of departure and complex amplitude.
struct Path {
  Direction dir;
  std::complex<double> gain;
};

/// Placements and link budget for one channel realization.
struct Scenario {
  std::vector<std::vector<Path>> cu_paths;     // K users, L_k paths each
  std::vector<std::vector<double>> cu_ranges;  // matching radial distances, m
  Path target;
  double target_range = 0.0;
  std::vector<Path> scatterers;  // M round-trip interferers
  std::vector<double> scatterer_ranges;
  double power = 0.0;           // transmit budget P, watts
  double noise_power = 0.0;     // sigma_n^2, watts
  double sensing_weight = 0.0;  // beta in [0,1]; rate weight is 1-beta

  int num_users() const { return static_cast<int>(cu_paths.size()); }
  int num_scatterers() const { return static_cast<int>(scatterers.size()); }
};

/// Bounds and counts for scenario sampling.
struct ScenarioConfig {
  int num_users = 2;
  int num_scatterers = 2;
  int paths_per_user = 1;
  double theta_min = 0.0, theta_max = 3.14159265358979323846;
  double phi_min = 0.0, phi_max = 2.0 * 3.14159265358979323846;
  double range_min = 10.0, range_max = 50.0;  // meters
  double target_rcs = 1.0;                    // m^2
  double scatterer_rcs = 1.0;
  double wavelength = 0.1;
  double power = 1e-5;          // watts (-20 dBm)
  double noise_power = 1e-11;   // watts (-80 dBm)
  double sensing_weight = 0.5;
};

enum class PathKind { OneWay, RoundTrip };

/// Free-space amplitude: lambda/(4*pi*r) one way, the radar-equation
/// round-trip amplitude sqrt(lambda^2*rcs/((4*pi)^3*r^4)) for echoes.
double path_gain_magnitude(PathKind kind, double range, double wavelength, double rcs = 1.0);

/// Amplitude with a phase drawn uniformly from the given stream.
std::complex<double> path_gain(PathKind kind, double range, double wavelength, double rcs,
                               SeededRng& rng);

/// Draw a scenario with uniform placements inside the configured bounds.
/// Identical (config, seed) pairs produce identical scenarios.
Scenario sample_scenario(const ScenarioConfig& config, std::uint64_t seed);

/// EM-domain channel of a single path: antenna-major blocks, block n of
/// length T equal to gain * a_n * b(theta, phi).
Eigen::VectorXcd em_channel_single_path(const Path& path, const UpaGeometry& geom,
                                        const HarmonicBasis& basis);

/// EM-domain channels of every scenario entity.
struct EmChannelSet {
  std::vector<Eigen::VectorXcd> cu;  // K vectors of length N_T*T
  Eigen::VectorXcd target;
  std::vector<Eigen::VectorXcd> interference;  // M vectors
};

/// CU vectors are sqrt(N_T/L_k)-scaled path sums; target and scatterer
/// vectors are single-path with round-trip gains.
EmChannelSet assemble_channels(const Scenario& scenario, const UpaGeometry& geom,
                               const HarmonicBasis& basis);

/// Contract an EM-domain vector with the EM beamformer blockwise:
/// entry n = c^(n)^H * block_n. Never materializes the block-diagonal matrix.
Eigen::VectorXcd compact_channel(const EmBeamformer& em, const Eigen::VectorXcd& h_em);

/// Compact channels of every entity under a common EM beamformer.
struct CompactChannels {
  std::vector<Eigen::VectorXcd> cu;  // K vectors of length N_T
  Eigen::VectorXcd target;
  std::vector<Eigen::VectorXcd> interference;
};
CompactChannels compact_all(const EmBeamformer& em, const EmChannelSet& channels);

/// Ground-truth channel built element by element: entry n is
/// scale * sum_l gain_l * (c^(n)^H b(dir_l)) * a_n(dir_l). Independent of
/// the EM-domain assembly path; used to cross-check it.
Eigen::VectorXcd elementwise_channel(std::span<const Path> paths, double scale,
                                     const EmBeamformer& em, const UpaGeometry& geom,
                                     const HarmonicBasis& basis);

}  // namespace erabeam
