#include "crit/field.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace crit {

RenormScheme RenormScheme::empirical(double rho_hat) {
  if (rho_hat <= 0.0) throw std::invalid_argument("rho_hat must be positive");
  return {Kind::Empirical, rho_hat};
}

double RenormScheme::theta(double mesh) const {
  if (kind == Kind::WuExponent) return std::pow(mesh, 15.0 / 8.0);
  if (rho_hat <= 0.0) throw std::invalid_argument("rho_hat must be positive");
  return mesh * mesh / std::sqrt(rho_hat);
}

double FieldGrid::integral() const {
  double a2 = mesh() * mesh();
  double s = 0.0;
  for (double v : cell) s += v;
  return s * a2;
}

FieldGrid field_from_spins(const Lattice& lat, const SpinConfig& spins,
                           const RenormScheme& scheme) {
  FieldGrid f;
  f.n = lat.side();
  double density = scheme.theta(lat.mesh()) / (lat.mesh() * lat.mesh());
  f.cell.resize(lat.sites());
  for (int i = 0; i < lat.sites(); ++i) f.cell[i] = density * spins.spins[i];
  return f;
}

double magnetization(const Lattice& lat, const SpinConfig& spins, const RenormScheme& scheme) {
  long s = 0;
  for (auto v : spins.spins) s += v;
  return scheme.theta(lat.mesh()) * static_cast<double>(s);
}

namespace {

// int_{c/n}^{(c+1)/n} sin(j pi x) dx
inline double sine_cell_integral(int j, int c, int n) {
  double jp = j * std::numbers::pi;
  return (std::cos(jp * c / n) - std::cos(jp * (c + 1) / n)) / jp;
}

}  // namespace

double fourier_coefficient(const FieldGrid& field, int j, int k) {
  if (j < 1 || k < 1) throw std::invalid_argument("basis indices must be >= 1");
  int n = field.n;
  double acc = 0.0;
  for (int r = 0; r < n; ++r) {
    double iy = sine_cell_integral(k, r, n);
    double row = 0.0;
    for (int c = 0; c < n; ++c) row += field.cell[r * n + c] * sine_cell_integral(j, c, n);
    acc += row * iy;
  }
  return 2.0 * acc;
}

SobolevCoeffs sine_coefficients(const FieldGrid& field, int j_max) {
  if (j_max < 1) throw std::invalid_argument("j_max must be >= 1");
  int n = field.n;
  std::vector<double> ix(static_cast<std::size_t>(j_max) * n);
  for (int j = 1; j <= j_max; ++j)
    for (int c = 0; c < n; ++c) ix[(j - 1) * n + c] = sine_cell_integral(j, c, n);

  // t[j][r] = sum_c cell[r][c] * ix[j][c]
  std::vector<double> t(static_cast<std::size_t>(j_max) * n, 0.0);
  for (int j = 0; j < j_max; ++j) {
    const double* w = &ix[static_cast<std::size_t>(j) * n];
    for (int r = 0; r < n; ++r) {
      const double* row = &field.cell[static_cast<std::size_t>(r) * n];
      double acc = 0.0;
      for (int c = 0; c < n; ++c) acc += row[c] * w[c];
      t[static_cast<std::size_t>(j) * n + r] = acc;
    }
  }

  SobolevCoeffs out;
  out.j_max = j_max;
  out.a.assign(static_cast<std::size_t>(j_max) * j_max, 0.0);
  for (int j = 0; j < j_max; ++j) {
    const double* tj = &t[static_cast<std::size_t>(j) * n];
    for (int k = 0; k < j_max; ++k) {
      const double* w = &ix[static_cast<std::size_t>(k) * n];
      double acc = 0.0;
      for (int r = 0; r < n; ++r) acc += tj[r] * w[r];
      out.a[static_cast<std::size_t>(j) * j_max + k] = 2.0 * acc;
    }
  }
  return out;
}

SobolevNormSq sobolev_norm_sq(const SobolevCoeffs& coeffs, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
  int jm = coeffs.j_max;
  SobolevNormSq out;
  double outer_max = 0.0;
  for (int j = 1; j <= jm; ++j) {
    for (int k = 1; k <= jm; ++k) {
      double a = coeffs.at(j, k);
      out.value += a * a / std::pow(static_cast<double>(j) * j + static_cast<double>(k) * k, alpha);
      if (j == jm || k == jm) outer_max = std::max(outer_max, std::abs(a));
    }
  }
  if (alpha > 1.0) {
    // integral bound on sum over {j > J or k > J} of (j^2+k^2)^-alpha
    double b = 0.5 * std::sqrt(std::numbers::pi) * std::tgamma(alpha - 0.5) / std::tgamma(alpha);
    double tail_weight = 2.0 * b * std::pow(static_cast<double>(jm), 2.0 - 2.0 * alpha) /
                         (2.0 * alpha - 2.0);
    out.tail_bound = outer_max * outer_max * tail_weight;
  } else {
    out.tail_bound = std::numeric_limits<double>::infinity();
  }
  return out;
}

FieldGrid restrict_to(const FieldGrid& field, const SubSquare& sub) {
  if (sub.row0 < 0 || sub.col0 < 0 || sub.row0 + sub.side > field.n ||
      sub.col0 + sub.side > field.n || sub.side < 1)
    throw std::invalid_argument("sub-square must lie inside the grid");
  FieldGrid out;
  out.n = field.n;
  out.cell.assign(field.cell.size(), 0.0);
  for (int r = sub.row0; r < sub.row0 + sub.side; ++r)
    for (int c = sub.col0; c < sub.col0 + sub.side; ++c)
      out.cell[r * field.n + c] = field.cell[r * field.n + c];
  return out;
}

}  // namespace crit
