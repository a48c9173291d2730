#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

struct GroverStationaryStates {
  PositionState psi1;  // eigenvalue +1
  PositionState psi2;  // eigenvalue -1
};

/// The two normalized Grover eigenstates supported on the block (0,0)-(1,1).
GroverStationaryStates grover_stationary_states();

/// (psi1 + psi2)/sqrt2 = (1/2)[|1,0>(R+D) + |0,1>(L+U)]
PositionState revival_state();

/// Image of revival_state() after one Grover step: (1/2)[|0,0>(L+D) + |1,1>(R+U)]
PositionState revival_partner_state();

/// |0,0> (x) (R+L+U+D)/2
PositionState origin_symmetric_state();

/// s x s window of sites with lower-left corner `origin`.
struct SiteBox {
  LatticePoint origin{};
  std::size_t size = 1;
};

struct StationaryStateSet {
  Amplitude eigenvalue;
  std::vector<PositionState> states;  // orthonormal
  SiteBox box;
};

inline constexpr double kNullSpaceRelativeThreshold = 1e-10;

/// Orthonormal basis of the box-supported solutions of U s = lambda s.
///
/// The image of a box-supported state lives on the box padded by one site, so
/// the system is 4(s+2)^2 x 4s^2; its null space comes from an SVD with
/// singular values at or below 1e-10 * sigma_max treated as zero. Each state's
/// global phase is fixed so its first largest-modulus amplitude is real
/// positive. Throws std::invalid_argument when |lambda| is not 1 within 1e-10
/// or the box is empty.
StationaryStateSet find_local_stationary_states(const CoinOperator& coin, Amplitude lambda, SiteBox box);

struct RevivalReport {
  std::optional<std::size_t> period;
  std::vector<double> fidelity_series;  // entry t-1 is the fidelity at step t
  double tolerance = 0.0;
  std::optional<Amplitude> phase;       // <initial|state(period)> / |.|
};

/// Steps the initial state up to t_max times; the period is the first t with
/// fidelity to the initial state >= 1 - tol. The whole series is recorded
/// regardless.
RevivalReport detect_period(const PositionState& initial, const CoinOperator& coin, std::size_t t_max, double tol,
                            Execution exec = Execution::parallel);

/// Probability at (0,0) after t = 0..t_max steps. The initial state must be
/// normalized and occupy only the origin.
std::vector<double> return_probability_series(const PositionState& initial, const CoinOperator& coin,
                                              std::size_t t_max, Execution exec = Execution::parallel);

}  // namespace qwalk
