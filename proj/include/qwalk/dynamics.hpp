#pragma once

#include <cstddef>

#include "qwalk/coin.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

/// (I (x) C): multiplies the coin vector at every occupied site.
PositionState apply_coin(const PositionState& s, const CoinOperator& coin, Execution exec = Execution::parallel);

/// Conditional displacement: R -> (m+1, n), L -> (m-1, n), U -> (m, n+1), D -> (m, n-1).
PositionState apply_shift(const PositionState& s, Execution exec = Execution::parallel);

/// One walk step U = S (I (x) C), coin first then shift.
PositionState step(const PositionState& s, const CoinOperator& coin, Execution exec = Execution::parallel);

PositionState evolve(const PositionState& s, const CoinOperator& coin, std::size_t steps,
                     Execution exec = Execution::parallel);

// Single-threaded std::map scatter implementation of the same step. Kept as
// the reference the production kernel is tested and benchmarked against.
namespace reference {
PositionState step(const PositionState& s, const CoinOperator& coin);
PositionState evolve(const PositionState& s, const CoinOperator& coin, std::size_t steps);
}  // namespace reference

struct EvolutionConfig {
  std::size_t steps = 0;
  std::size_t lattice_size = 0;  // even; momentum path only
};

/// Amplitudes below this modulus are dropped when leaving the momentum path.
inline constexpr double kMomentumDropThreshold = 1e-14;

/// Evolution in the momentum representation on an N x N periodic box centered
/// on the state's bounding box. Each coin component is Fourier transformed
/// (forward kernel e^{+i(km+ln)}, matching R <-> e^{ik}), multiplied per
/// momentum cell by Diag(e^{ik}, e^{-ik}, e^{il}, e^{-il}) C raised to the
/// t-th power, and transformed back.
///
/// Throws std::invalid_argument for odd or zero N, or when the support does
/// not fit in the box. Matches evolve() as long as N > 2t + extent.
PositionState evolve_momentum(const PositionState& s, const CoinOperator& coin, const EvolutionConfig& config,
                              Execution exec = Execution::parallel);

}  // namespace qwalk
