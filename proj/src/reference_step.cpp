#include <map>

#include "qwalk/dynamics.hpp"

namespace qwalk::reference {

PositionState step(const PositionState& s, const CoinOperator& coin) {
  const Matrix4& c = coin.matrix();
  std::map<LatticePoint, CoinVector> out;
  for (const Site& site : s.sites()) {
    for (std::size_t i = 0; i < kCoinDim; ++i) {
      Amplitude a = c(i, 0) * site.amplitudes[0];
      for (std::size_t j = 1; j < kCoinDim; ++j) a += c(i, j) * site.amplitudes[j];
      out[site.point + displacement(i)][i] += a;
    }
  }
  std::vector<Site> sites;
  sites.reserve(out.size());
  for (const auto& [p, v] : out) sites.push_back({p, v});
  return PositionState::from_sorted(std::move(sites));
}

PositionState evolve(const PositionState& s, const CoinOperator& coin, std::size_t steps) {
  PositionState current = s;
  for (std::size_t t = 0; t < steps; ++t) current = reference::step(current, coin);
  return current;
}

}  // namespace qwalk::reference
