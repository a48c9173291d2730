#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

struct MomentumPair {
  double k = 0.0;  // x-momentum, radians
  double l = 0.0;  // y-momentum, radians
};

/// Cell (i, j) of the M x M grid: (2 pi i / M, 2 pi j / M).
MomentumPair grid_momentum(std::size_t i, std::size_t j, std::size_t grid);

/// Diag(e^{ik}, e^{-ik}, e^{il}, e^{-il}) * C
Matrix4 momentum_propagator(const Matrix4& coin, MomentumPair p);
Matrix4 momentum_propagator(const CoinOperator& coin, MomentumPair p);

struct ConstantEigenvalue {
  Amplitude value;
  double max_residual = 0.0;  // worst distance to the nearest eigenvalue over all grid cells
};

struct SpectrumReport {
  std::vector<ConstantEigenvalue> constants;  // ordered by argument on [0, 2pi)
  std::size_t grid_size = 0;
  double tolerance = 0.0;
  bool pairing_ok = true;     // every constant lambda has -lambda among the constants
  bool all_constant = false;  // all four eigenvalues (with multiplicity) are momentum independent
};

inline constexpr std::size_t kDefaultSpectralGrid = 64;
inline constexpr double kDefaultSpectralTolerance = 1e-8;

/// Momentum-independent eigenvalues of the propagator of `coin`.
///
/// Candidates are the eigenvalues at the generic cell (pi/M, 1.7 pi/M). A
/// candidate survives when every cell of the M x M grid has an eigenvalue
/// within `tol` of it. Needs M >= 8 and 1e-12 <= tol <= 1e-4.
SpectrumReport detect_constant_eigenvalues(const CoinOperator& coin, std::size_t grid = kDefaultSpectralGrid,
                                           double tol = kDefaultSpectralTolerance,
                                           Execution exec = Execution::parallel);

/// Elementary symmetric polynomials of the four eigenvalues. The
/// characteristic polynomial is lambda^4 - e1 lambda^3 + e2 lambda^2 - e3 lambda + e4.
struct CharPolyCoefficients {
  Amplitude e1, e2, e3, e4;
};

CharPolyCoefficients elementary_symmetric(const std::array<Amplitude, 4>& roots);

inline constexpr double kConstantCoefficientVariance = 1e-10;

struct CharPolyProfile {
  std::size_t grid_size = 0;
  std::vector<CharPolyCoefficients> cells;  // row-major, index i * M + j for (k_i, l_j)
  std::array<Amplitude, 4> mean{};          // e1..e4
  std::array<double, 4> variance{};         // mean |e - mean|^2 over the grid
  Amplitude det_coin;
  double max_det_deviation = 0.0;           // max |e4 - det C|
  bool c_zero = false;                      // e2 variance <= 1e-10

  double e2_variance() const noexcept { return variance[1]; }
  /// Momentum-independent part of the lambda^2 coefficient.
  Amplitude b() const noexcept { return mean[1]; }
};

CharPolyProfile char_poly_profile(const CoinOperator& coin, std::size_t grid, Execution exec = Execution::parallel);

struct GroverEigenvectors {
  Vector4 v1;  // eigenvalue +1
  Vector4 v2;  // eigenvalue -1
};

/// Closed-form, non-normalized momentum eigenvectors of the Grover propagator.
GroverEigenvectors grover_constant_eigenvectors(MomentumPair p);

}  // namespace qwalk
