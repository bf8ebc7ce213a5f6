#pragma once

#include <span>
#include <string>

#include "linboltz/core.hpp"
#include "linboltz/rng.hpp"

namespace linboltz {

// Which mass-ratio factor enters the collision rule. PaperAlpha uses
// a = alpha*(1-beta) literally; ComplementaryAlpha substitutes (1-alpha),
// under which heavy particles receive small kicks and the stationary
// temperature stays below the background one.
enum class AlphaConvention { PaperAlpha, ComplementaryAlpha };

struct ModelParams {
  double m1 = 0.0;      // test-particle mass
  double m = 0.0;       // background particle mass
  double e = 1.0;       // restitution coefficient, 0 < e <= 1
  double alpha = 0.0;   // m1/(m1+m)
  double beta = 0.0;    // (1-e)/2
  double lambda = 1.0;  // mean free path
  AlphaConvention alpha_convention = AlphaConvention::PaperAlpha;
  double rate_constant = 4.0;  // per-particle rate prefactor in nu = c*S*rho1/lambda
};

// Fixed equilibrium reservoir the test particles collide against.
// T1 = 0 is the degenerate delta background (useful in tests); the config
// layer requires T1 > 0 for actual Maxwellian scenarios.
struct BackgroundState {
  double rho1 = 1.0;
  Vec3 u1{};
  double T1 = 1.0;
};

// Hydrodynamic fields of the inelastic species at one point or cell.
// Cells without enough particles flag their moments undefined instead of
// feeding NaNs downstream.
struct MomentState {
  double rho = 0.0;
  Vec3 u{};
  double T = 0.0;
  bool u_defined = true;
  bool T_defined = true;
};

enum class SVariant {
  Constant,                 // S = s0 (the constant-rate model)
  SqrtRelativeTemperature,  // S = mu*sqrt(T_r)
  ExpectedRelativeSpeed,    // S = (1/rho) * integral of Z(v) f(v) dv
  HardSphere,               // kinetic solver keeps the exact |v-w| kernel
};

struct SClosure {
  SVariant variant = SVariant::Constant;
  double s0 = 1.0;  // Constant
  double mu = 1.0;  // SqrtRelativeTemperature

  static SClosure constant(double s0);
  static SClosure sqrt_relative_temperature(double mu);
  static SClosure expected_relative_speed();
  static SClosure hard_sphere();
};

// --- parameters -------------------------------------------------------------

ModelParams derive_params(double m1, double m, double e, double lambda,
                          AlphaConvention convention = AlphaConvention::PaperAlpha,
                          double rate_constant = 4.0);

// The single scalar a parameterizing the collision rule: a = alpha*(1-beta)
// under PaperAlpha, a = (1-alpha)*(1-beta) under ComplementaryAlpha.
double effective_coefficient(const ModelParams& params);

// Per-particle collision rate nu = rate_constant * S * rho1 / lambda.
double collision_rate(const ModelParams& params, double S, double rho1);

// Relaxation rate of u toward u1: kappa1 = (2/3) * a * nu.
double momentum_relaxation_rate(const ModelParams& params, double S, double rho1);

// --- collision rule ----------------------------------------------------------

// v* = v - 2a ((v-w).n) n, with n a unit vector (checked to 1e-12).
Vec3 post_collision(const Vec3& v, const Vec3& w, const Vec3& n,
                    const ModelParams& params);

// --- Maxwellians -------------------------------------------------------------

// rho/(2 pi T)^{3/2} exp(-|v-u|^2/(2T)); integrates to rho.
double maxwellian_pdf(const MomentState& ms, const Vec3& v);

// u + sqrt(T) g with g a standard 3D Gaussian; T = 0 returns u exactly.
Vec3 sample_maxwellian(CounterRng& rng, const Vec3& u, double T);

// --- equilibrium temperatures ------------------------------------------------

// The hard-sphere literature value quoted alongside the equilibrium
// Maxwellian: T# = (1-alpha)(1-beta)/(1-alpha(1-beta)) * T1.
double equilibrium_temperature_paper(const ModelParams& params, double T1);

// Exact fixed point of the pseudo-Maxwellian jump process with isotropic n:
// T#_PM = a T1 / (1 - a). This is the value the kinetic solver converges to.
double equilibrium_temperature_model(const ModelParams& params, double T1);

// --- S closures ---------------------------------------------------------------

// T_r = T + |u-u1|^2/3, the second moment about the background velocity over 3rho.
double relative_temperature(const MomentState& ms, const Vec3& u1);

// Z(v) = integral of |v-w| M1(w) dw, closed form; rho1 * (mean distance from v
// to the background Gaussian).
double mean_relative_speed_Z(const Vec3& v, const BackgroundState& bg);

// Mean distance from a point at distance g to an isotropic 3D Gaussian with
// per-component variance T (unit mass). Shared kernel of Z and its tests.
double mean_distance_to_gaussian(double g, double T);

// S for a closure evaluated from hydrodynamic moments. ExpectedRelativeSpeed
// integrates Z against the closure Maxwellian with the shared Gauss-Hermite
// rule (kSQuadratureOrder nodes).
double evaluate_S(const SClosure& closure, const MomentState& ms,
                  const BackgroundState& bg);

// S evaluated from an ensemble of velocities (equal statistical weights).
double evaluate_S(const SClosure& closure, std::span<const Vec3> velocities,
                  const BackgroundState& bg);

}  // namespace linboltz
