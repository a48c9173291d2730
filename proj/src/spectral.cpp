#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qwalk {

MomentumPair grid_momentum(std::size_t i, std::size_t j, std::size_t grid) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(grid);
  return {step * static_cast<double>(i), step * static_cast<double>(j)};
}

Matrix4 momentum_propagator(const Matrix4& coin, MomentumPair p) {
  const Amplitude ek = std::polar(1.0, p.k);
  const Amplitude el = std::polar(1.0, p.l);
  Vector4 diag;
  diag << ek, std::conj(ek), el, std::conj(el);
  return diag.asDiagonal() * coin;
}

Matrix4 momentum_propagator(const CoinOperator& coin, MomentumPair p) {
  return momentum_propagator(coin.matrix(), p);
}

SpectrumReport detect_constant_eigenvalues(const CoinOperator& coin, std::size_t grid, double tol, Execution exec) {
  if (grid < 8) throw std::invalid_argument("detect_constant_eigenvalues: grid must be at least 8");
  if (!(tol >= 1e-12 && tol <= 1e-4))
    throw std::invalid_argument("detect_constant_eigenvalues: tolerance must lie in [1e-12, 1e-4]");

  // Irrational-ratio offsets keep the seed away from k = 0 and l = 0.
  const double base = std::numbers::pi / static_cast<double>(grid);
  const auto seed = eigenvalues(momentum_propagator(coin, MomentumPair{base * 1.0, base * 1.7}));

  std::vector<Amplitude> candidates;
  for (const Amplitude& z : seed) {
    const bool duplicate = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const Amplitude& c) { return std::abs(c - z) <= tol; });
    if (!duplicate) candidates.push_back(z);
  }

  // residual[cell * K + c]: distance from candidate c to the closest eigenvalue at the cell.
  const std::size_t cells = grid * grid;
  const std::size_t k = candidates.size();
  std::vector<double> residual(cells * k);
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(cells);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
  for (std::ptrdiff_t cell = 0; cell < count; ++cell) {
    const auto i = static_cast<std::size_t>(cell) / grid;
    const auto j = static_cast<std::size_t>(cell) % grid;
    const auto values = eigenvalues(momentum_propagator(coin, grid_momentum(i, j, grid)));
    for (std::size_t c = 0; c < k; ++c) {
      double best = std::numeric_limits<double>::infinity();
      for (const Amplitude& v : values) best = std::min(best, std::abs(v - candidates[c]));
      residual[static_cast<std::size_t>(cell) * k + c] = best;
    }
  }

  SpectrumReport report;
  report.grid_size = grid;
  report.tolerance = tol;
  for (std::size_t c = 0; c < k; ++c) {
    double worst = 0.0;
    for (std::size_t cell = 0; cell < cells; ++cell) worst = std::max(worst, residual[cell * k + c]);
    if (worst < tol) report.constants.push_back({candidates[c], worst});
  }
  std::sort(report.constants.begin(), report.constants.end(),
            [](const ConstantEigenvalue& a, const ConstantEigenvalue& b) {
              return positive_arg(a.value) < positive_arg(b.value);
            });

  auto near_constant = [&](const Amplitude& z) {
    return std::any_of(report.constants.begin(), report.constants.end(),
                       [&](const ConstantEigenvalue& c) { return std::abs(c.value - z) <= tol; });
  };
  report.pairing_ok = std::all_of(report.constants.begin(), report.constants.end(),
                                  [&](const ConstantEigenvalue& c) { return near_constant(-c.value); });
  report.all_constant = std::all_of(seed.begin(), seed.end(), near_constant);
  return report;
}

CharPolyCoefficients elementary_symmetric(const std::array<Amplitude, 4>& r) {
  CharPolyCoefficients e;
  e.e1 = r[0] + r[1] + r[2] + r[3];
  e.e2 = r[0] * r[1] + r[0] * r[2] + r[0] * r[3] + r[1] * r[2] + r[1] * r[3] + r[2] * r[3];
  e.e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] + r[1] * r[2] * r[3];
  e.e4 = r[0] * r[1] * r[2] * r[3];
  return e;
}

CharPolyProfile char_poly_profile(const CoinOperator& coin, std::size_t grid, Execution exec) {
  if (grid < 8) throw std::invalid_argument("char_poly_profile: grid must be at least 8");
  CharPolyProfile profile;
  profile.grid_size = grid;
  profile.det_coin = coin.matrix().determinant();
  const std::size_t cells = grid * grid;
  profile.cells.resize(cells);
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(cells);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
  for (std::ptrdiff_t cell = 0; cell < count; ++cell) {
    const auto i = static_cast<std::size_t>(cell) / grid;
    const auto j = static_cast<std::size_t>(cell) % grid;
    profile.cells[cell] = elementary_symmetric(eigenvalues(momentum_propagator(coin, grid_momentum(i, j, grid))));
  }

  auto component = [](const CharPolyCoefficients& e, std::size_t idx) {
    switch (idx) {
      case 0: return e.e1;
      case 1: return e.e2;
      case 2: return e.e3;
      default: return e.e4;
    }
  };
  const double inv = 1.0 / static_cast<double>(cells);
  for (std::size_t idx = 0; idx < 4; ++idx) {
    Amplitude sum = 0.0;
    for (const auto& e : profile.cells) sum += component(e, idx);
    profile.mean[idx] = sum * inv;
    double var = 0.0;
    for (const auto& e : profile.cells) var += std::norm(component(e, idx) - profile.mean[idx]);
    profile.variance[idx] = var * inv;
  }
  for (const auto& e : profile.cells)
    profile.max_det_deviation = std::max(profile.max_det_deviation, std::abs(e.e4 - profile.det_coin));
  profile.c_zero = profile.e2_variance() <= kConstantCoefficientVariance;
  return profile;
}

GroverEigenvectors grover_constant_eigenvectors(MomentumPair p) {
  const Amplitude ek = std::polar(1.0, p.k);
  const Amplitude el = std::polar(1.0, p.l);
  GroverEigenvectors v;
  v.v1 << ek * (1.0 + el), 1.0 + el, el * (1.0 + ek), 1.0 + ek;
  v.v2 << ek * (1.0 - el), -1.0 + el, el * (1.0 - ek), -1.0 + ek;
  return v;
}

}  // namespace qwalk
