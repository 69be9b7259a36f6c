#include "erabeam/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace erabeam {

namespace {

void validate_em(const EmBeamformer& em, int basis_size) {
  if (em.basis_size() != basis_size)
    throw std::invalid_argument("EM beamformer basis size does not match the harmonic basis");
}

}  // namespace

EmBeamformer EmBeamformer::isotropic(int basis_size, int num_antennas) {
  EmBeamformer em;
  em.coeff = Eigen::MatrixXcd::Zero(basis_size, num_antennas);
  em.coeff.row(0).setOnes();
  return em;
}

double path_gain_magnitude(PathKind kind, double range, double wavelength, double rcs) {
  if (range <= 0.0) throw std::domain_error("path_gain: range must be positive");
  const double four_pi = 4.0 * std::numbers::pi;
  if (kind == PathKind::OneWay) return wavelength / (four_pi * range);
  return std::sqrt(wavelength * wavelength * rcs /
                   (four_pi * four_pi * four_pi * range * range * range * range));
}

std::complex<double> path_gain(PathKind kind, double range, double wavelength, double rcs,
                               SeededRng& rng) {
  const double mag = path_gain_magnitude(kind, range, wavelength, rcs);
  return std::polar(mag, rng.uniform(0.0, 2.0 * std::numbers::pi));
}

Scenario sample_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  if (config.num_users < 1) throw std::invalid_argument("sample_scenario: need at least one user");
  if (config.num_scatterers < 0 || config.paths_per_user < 1)
    throw std::invalid_argument("sample_scenario: invalid entity counts");
  if (config.theta_min >= config.theta_max || config.phi_min >= config.phi_max ||
      config.range_min >= config.range_max)
    throw std::invalid_argument("sample_scenario: empty bound interval");
  if (config.range_min <= 0.0)
    throw std::invalid_argument("sample_scenario: ranges must be positive");

  SeededRng rng(seed);
  auto draw_direction = [&] {
    return Direction{rng.uniform(config.theta_min, config.theta_max),
                     rng.uniform(config.phi_min, config.phi_max)};
  };

  Scenario s;
  s.power = config.power;
  s.noise_power = config.noise_power;
  s.sensing_weight = config.sensing_weight;

  s.cu_paths.resize(config.num_users);
  s.cu_ranges.resize(config.num_users);
  for (int k = 0; k < config.num_users; ++k) {
    for (int l = 0; l < config.paths_per_user; ++l) {
      const Direction dir = draw_direction();
      const double r = rng.uniform(config.range_min, config.range_max);
      s.cu_paths[k].push_back({dir, path_gain(PathKind::OneWay, r, config.wavelength, 1.0, rng)});
      s.cu_ranges[k].push_back(r);
    }
  }

  {
    const Direction dir = draw_direction();
    s.target_range = rng.uniform(config.range_min, config.range_max);
    s.target = {dir, path_gain(PathKind::RoundTrip, s.target_range, config.wavelength,
                               config.target_rcs, rng)};
  }

  for (int m = 0; m < config.num_scatterers; ++m) {
    const Direction dir = draw_direction();
    const double r = rng.uniform(config.range_min, config.range_max);
    s.scatterers.push_back(
        {dir, path_gain(PathKind::RoundTrip, r, config.wavelength, config.scatterer_rcs, rng)});
    s.scatterer_ranges.push_back(r);
  }
  return s;
}

Eigen::VectorXcd em_channel_single_path(const Path& path, const UpaGeometry& geom,
                                        const HarmonicBasis& basis) {
  const Eigen::VectorXcd a = upa_steering(geom, path.dir);
  const Eigen::VectorXcd b = basis_vector(basis, path.dir.theta, path.dir.phi);
  const int t = basis.size();
  Eigen::VectorXcd h(geom.num_elements() * t);
  for (int n = 0; n < geom.num_elements(); ++n) h.segment(n * t, t) = path.gain * a(n) * b;
  return h;
}

EmChannelSet assemble_channels(const Scenario& scenario, const UpaGeometry& geom,
                               const HarmonicBasis& basis) {
  EmChannelSet set;
  const int nt = geom.num_elements();
  for (const auto& paths : scenario.cu_paths) {
    if (paths.empty()) throw std::invalid_argument("assemble_channels: user with no paths");
    Eigen::VectorXcd h = Eigen::VectorXcd::Zero(nt * basis.size());
    for (const Path& p : paths) h += em_channel_single_path(p, geom, basis);
    h *= std::sqrt(static_cast<double>(nt) / static_cast<double>(paths.size()));
    set.cu.push_back(std::move(h));
  }
  set.target = em_channel_single_path(scenario.target, geom, basis);
  for (const Path& p : scenario.scatterers)
    set.interference.push_back(em_channel_single_path(p, geom, basis));
  return set;
}

Eigen::VectorXcd compact_channel(const EmBeamformer& em, const Eigen::VectorXcd& h_em) {
  const int t = em.basis_size();
  const int nt = em.num_antennas();
  if (h_em.size() != static_cast<Eigen::Index>(t) * nt)
    throw std::invalid_argument("compact_channel: EM vector length does not match T*N_T");
  Eigen::VectorXcd h(nt);
  for (int n = 0; n < nt; ++n) h(n) = em.coeff.col(n).dot(h_em.segment(n * t, t));
  return h;
}

CompactChannels compact_all(const EmBeamformer& em, const EmChannelSet& channels) {
  CompactChannels out;
  for (const auto& h : channels.cu) out.cu.push_back(compact_channel(em, h));
  out.target = compact_channel(em, channels.target);
  for (const auto& h : channels.interference) out.interference.push_back(compact_channel(em, h));
  return out;
}

Eigen::VectorXcd elementwise_channel(std::span<const Path> paths, double scale,
                                     const EmBeamformer& em, const UpaGeometry& geom,
                                     const HarmonicBasis& basis) {
  validate_em(em, basis.size());
  Eigen::VectorXcd h = Eigen::VectorXcd::Zero(geom.num_elements());
  for (const Path& p : paths) {
    const Eigen::VectorXcd a = upa_steering(geom, p.dir);
    const Eigen::VectorXcd b = basis_vector(basis, p.dir.theta, p.dir.phi);
    for (int n = 0; n < geom.num_elements(); ++n) {
      const std::complex<double> antenna_gain = em.coeff.col(n).dot(b);
      h(n) += p.gain * antenna_gain * a(n);
    }
  }
  return scale * h;
}

}  // namespace erabeam
