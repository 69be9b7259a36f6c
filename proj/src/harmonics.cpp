#include "erabeam/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace erabeam {

namespace {
constexpr int kMaxDegree = 8;
}

HarmonicBasis::HarmonicBasis(int truncation_degree) : degree(truncation_degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw std::domain_error("HarmonicBasis: truncation degree must be in [0, " +
                            std::to_string(kMaxDegree) + "]");
}

int harmonic_index(int u, int q) {
  if (u < 0 || q < -u || q > u)
    throw std::domain_error("harmonic_index: order q must satisfy -u <= q <= u with u >= 0");
  return u * u + u + q + 1;
}

std::pair<int, int> harmonic_degree_order(int t) {
  if (t < 1) throw std::domain_error("harmonic_degree_order: index must be >= 1");
  const int u = static_cast<int>(std::floor(std::sqrt(static_cast<double>(t - 1))));
  const int q = t - 1 - u * u - u;
  return {u, q};
}

double assoc_legendre(int u, int m, double x) {
  if (m < 0 || m > u) throw std::domain_error("assoc_legendre: need 0 <= m <= u");
  if (std::abs(x) > 1.0) throw std::domain_error("assoc_legendre: need |x| <= 1");

  // seed P_m^m, then climb degrees at fixed order
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * s;  // Condon-Shortley phase
      fact += 2.0;
    }
  }
  if (u == m) return pmm;

  double pm1 = x * (2.0 * m + 1.0) * pmm;  // P_{m+1}^m
  if (u == m + 1) return pm1;

  double p = 0.0;
  for (int deg = m + 2; deg <= u; ++deg) {
    p = (x * (2.0 * deg - 1.0) * pm1 - (deg + m - 1.0) * pmm) / (deg - m);
    pmm = pm1;
    pm1 = p;
  }
  return p;
}

std::complex<double> sph_harmonic(int u, int q, double theta, double phi) {
  if (u < 0 || q < -u || q > u)
    throw std::domain_error("sph_harmonic: order q must satisfy -u <= q <= u with u >= 0");
  const int aq = std::abs(q);
  double ratio = 1.0;  // (u+|q|)! / (u-|q|)!
  for (int i = u - aq + 1; i <= u + aq; ++i) ratio *= i;
  const double norm = std::sqrt((2.0 * u + 1.0) / (4.0 * std::numbers::pi) / ratio);
  const double legendre = assoc_legendre(u, aq, std::cos(theta));
  return norm * legendre * std::polar(1.0, q * phi);
}

Eigen::VectorXcd basis_vector(const HarmonicBasis& basis, double theta, double phi) {
  Eigen::VectorXcd b(basis.size());
  const double ct = std::cos(theta);
  for (int u = 0; u <= basis.degree; ++u) {
    for (int q = 0; q <= u; ++q) {
      double ratio = 1.0;
      for (int i = u - q + 1; i <= u + q; ++i) ratio *= i;
      const double norm = std::sqrt((2.0 * u + 1.0) / (4.0 * std::numbers::pi) / ratio);
      const double legendre = assoc_legendre(u, q, ct);
      const std::complex<double> y = norm * legendre * std::polar(1.0, q * phi);
      b(harmonic_index(u, q) - 1) = y;
      if (q > 0) b(harmonic_index(u, -q) - 1) = std::conj(y);
    }
  }
  return b;
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre P_n(x) and derivative by the three-term recurrence
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace erabeam
