#pragma once

#include <cstddef>
#include <vector>

namespace linboltz {

struct GaussHermiteRule {
  std::vector<double> nodes;    // roots of H_n, ascending
  std::vector<double> weights;  // for weight function exp(-x^2)
};

// Nodes and weights for the n-point Gauss-Hermite rule (physicists'
// convention, integrates f(x) exp(-x^2) over the real line exactly for
// polynomials up to degree 2n-1).
GaussHermiteRule gauss_hermite(std::size_t n);

// Quadrature order shared by every S evaluation against the closure
// Maxwellian, so the ODE and Euler solvers integrate the same model.
inline constexpr std::size_t kSQuadratureOrder = 20;

}  // namespace linboltz
