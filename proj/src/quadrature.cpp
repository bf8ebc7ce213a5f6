#include "linboltz/quadrature.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace linboltz {

namespace {

// Evaluate the orthonormal Hermite polynomial h_n(x) and its derivative via
// the three-term recurrence; orthonormal scaling keeps values in range for
// n in the hundreds.
void hermite_eval(std::size_t n, double x, double& h, double& dh) {
  const double kInvPiQuarter = 0.7511255444649425;  // pi^(-1/4)
  double hm = 0.0;
  double hc = kInvPiQuarter;
  for (std::size_t j = 0; j < n; ++j) {
    const double hn = x * std::sqrt(2.0 / (j + 1.0)) * hc -
                      std::sqrt(static_cast<double>(j) / (j + 1.0)) * hm;
    hm = hc;
    hc = hn;
  }
  h = hc;
  dh = std::sqrt(2.0 * static_cast<double>(n)) * hm;
}

}  // namespace

GaussHermiteRule gauss_hermite(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_hermite: n must be positive");
  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const std::size_t half = (n + 1) / 2;
  double x = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    // Initial guesses from largest root inward (Numerical Recipes gauher).
    if (i == 0) {
      x = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      x -= 1.14 * std::pow(static_cast<double>(n), 0.426) / x;
    } else if (i == 2) {
      x = 1.86 * x - 0.86 * rule.nodes[n - 1];
    } else if (i == 3) {
      x = 1.91 * x - 0.91 * rule.nodes[n - 2];
    } else {
      x = 2.0 * x - rule.nodes[n - i + 1];
    }

    double h = 0.0;
    double dh = 1.0;
    for (int it = 0; it < 100; ++it) {
      hermite_eval(n, x, h, dh);
      const double dx = h / dh;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * (1.0 + std::abs(x))) break;
    }
    hermite_eval(n, x, h, dh);

    const double w = 2.0 / (dh * dh);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[half - 1] = 0.0;
  return rule;
}

}  // namespace linboltz
