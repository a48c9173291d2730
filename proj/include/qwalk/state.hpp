#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "qwalk/lattice.hpp"

namespace qwalk {

struct Site {
  LatticePoint point;
  CoinVector amplitudes{};

  friend bool operator==(const Site&, const Site&) = default;
};

/// Pure state of a walker on Z^2 with a four-dimensional coin.
///
/// Stored as a vector of occupied sites sorted lexicographically by (m, n).
/// Sites whose four amplitudes are all exactly zero are never stored, so two
/// states compare equal iff they are the same vector. Values are immutable
/// once built; every operation returns a new state.
class PositionState {
 public:
  PositionState() = default;

  /// Accepts sites in any order; repeated points are summed in input order.
  explicit PositionState(std::vector<Site> sites);

  /// Caller guarantees strictly increasing points. Zero vectors are still pruned.
  static PositionState from_sorted(std::vector<Site> sites);

  std::span<const Site> sites() const noexcept { return sites_; }
  std::size_t size() const noexcept { return sites_.size(); }
  bool empty() const noexcept { return sites_.empty(); }

  /// nullptr when `p` is unoccupied.
  const Site* find(LatticePoint p) const noexcept;
  CoinVector at(LatticePoint p) const noexcept;
  Amplitude amplitude(LatticePoint p, CoinComponent c) const noexcept { return at(p)[index(c)]; }

  friend bool operator==(const PositionState&, const PositionState&) = default;

 private:
  std::vector<Site> sites_;
};

struct Term {
  Amplitude coefficient;
  PositionState state;
};

PositionState make_basis_state(LatticePoint point, CoinComponent c);

/// Pointwise linear combination; not renormalized. Throws std::invalid_argument
/// on an empty term list.
PositionState superpose(std::span<const Term> terms);
PositionState superpose(std::initializer_list<Term> terms);

PositionState scale(const PositionState& s, Amplitude factor);

double squared_norm(const PositionState& s);
double norm(const PositionState& s);

/// <a|b>, conjugate-linear in `a`.
Amplitude inner_product(const PositionState& a, const PositionState& b);

/// |<a|b>|^2. Both inputs must be normalized within 1e-9 (NormalizationError otherwise).
double fidelity(const PositionState& a, const PositionState& b);

PositionState translate(const PositionState& s, LatticePoint offset);

/// Coin-marginal probability per site. Requires a normalized state.
std::map<LatticePoint, double> position_distribution(const PositionState& s);

/// ||a - b|| over the union of supports.
double distance(const PositionState& a, const PositionState& b);

/// Largest |a(p,c) - b(p,c)| over the union of supports.
double max_amplitude_difference(const PositionState& a, const PositionState& b);

inline constexpr double kFidelityNormSlack = 1e-9;

/// Throws NormalizationError if |norm(s) - 1| > slack.
void require_normalized(const PositionState& s, double slack = kFidelityNormSlack);

}  // namespace qwalk
