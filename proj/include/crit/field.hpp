#pragma once

#include <vector>

#include "crit/clusters.hpp"
#include "crit/lattice.hpp"

namespace crit {

// Renormalization Theta_a: either the closed-form exponent a^{15/8} or the
// empirical a^2 rho_hat(a)^{-1/2} built from a measured two-point value.
struct RenormScheme {
  enum class Kind { WuExponent, Empirical };
  Kind kind = Kind::WuExponent;
  double rho_hat = 0.0;

  static RenormScheme wu() { return {}; }
  static RenormScheme empirical(double rho_hat);

  double theta(double mesh) const;
};

// Piecewise-constant representation of the field: cell of site x carries
// Theta_a sigma_x / a^2, so the integral over [0,1]^2 is the renormalized
// magnetization exactly.
struct FieldGrid {
  int n = 0;
  std::vector<double> cell;  // row-major, cell (r, c) at r*n + c

  double mesh() const { return 1.0 / n; }
  double integral() const;
};

FieldGrid field_from_spins(const Lattice& lat, const SpinConfig& spins,
                           const RenormScheme& scheme);

double magnetization(const Lattice& lat, const SpinConfig& spins, const RenormScheme& scheme);

// <field, e_{j,k}> with e_{j,k}(x,y) = 2 sin(j pi x) sin(k pi y), by exact
// per-cell integration of the sines.
double fourier_coefficient(const FieldGrid& field, int j, int k);

struct SobolevCoeffs {
  int j_max = 0;
  std::vector<double> a;  // a[(j-1)*j_max + (k-1)], 1 <= j,k <= j_max

  double at(int j, int k) const { return a[(j - 1) * j_max + (k - 1)]; }
};

// all coefficients up to j_max via a separable two-stage contraction;
// identical values to fourier_coefficient, just O(J N^2 + J^2 N)
SobolevCoeffs sine_coefficients(const FieldGrid& field, int j_max);

struct SobolevNormSq {
  double value = 0.0;       // truncated sum a_{j,k}^2 / (j^2+k^2)^alpha
  double tail_bound = 0.0;  // max |a| on the outer shell times the weight tail
};

SobolevNormSq sobolev_norm_sq(const SobolevCoeffs& coeffs, double alpha);

// field restricted to a sub-square (zero outside)
FieldGrid restrict_to(const FieldGrid& field, const SubSquare& sub);

}  // namespace crit
