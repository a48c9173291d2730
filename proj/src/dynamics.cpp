#include "qwalk/dynamics.hpp"

#include <algorithm>
#include <iterator>

namespace qwalk {
namespace {

// Occupied targets of the shift: the union of the four displaced copies of the
// source support. Each copy is already sorted, so two rounds of merges suffice.
std::vector<LatticePoint> shifted_support(std::span<const Site> sources) {
  std::array<std::vector<LatticePoint>, kCoinDim> copies;
  for (std::size_t c = 0; c < kCoinDim; ++c) {
    copies[c].reserve(sources.size());
    const LatticePoint d = displacement(c);
    for (const Site& s : sources) copies[c].push_back(s.point + d);
  }
  // Sorted order of (m,n) is preserved by translation.
  std::vector<LatticePoint> lu, rd, all;
  lu.reserve(2 * sources.size());
  rd.reserve(2 * sources.size());
  std::merge(copies[1].begin(), copies[1].end(), copies[2].begin(), copies[2].end(), std::back_inserter(lu));
  std::merge(copies[0].begin(), copies[0].end(), copies[3].begin(), copies[3].end(), std::back_inserter(rd));
  all.reserve(4 * sources.size());
  std::merge(lu.begin(), lu.end(), rd.begin(), rd.end(), std::back_inserter(all));
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

const Site* find_site(std::span<const Site> sites, LatticePoint p) {
  auto it = std::lower_bound(sites.begin(), sites.end(), p,
                             [](const Site& s, LatticePoint q) { return s.point < q; });
  if (it == sites.end() || it->point != p) return nullptr;
  return &*it;
}

// Gathers component c of target q from source q - displacement(c).
PositionState shift_gather(std::span<const Site> sources, Execution exec) {
  const std::vector<LatticePoint> targets = shifted_support(sources);
  std::vector<Site> out(targets.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(static) if (run_parallel(exec, targets.size()))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    Site& t = out[i];
    t.point = targets[i];
    for (std::size_t c = 0; c < kCoinDim; ++c) {
      if (const Site* src = find_site(sources, t.point - displacement(c))) t.amplitudes[c] = src->amplitudes[c];
    }
  }
  return PositionState::from_sorted(std::move(out));
}

std::vector<Site> coined_sites(const PositionState& s, const CoinOperator& coin, Execution exec) {
  std::vector<Site> out(s.sites().begin(), s.sites().end());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (run_parallel(exec, out.size()))
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i].amplitudes = coin.apply(out[i].amplitudes);
  return out;
}

}  // namespace

PositionState apply_coin(const PositionState& s, const CoinOperator& coin, Execution exec) {
  return PositionState::from_sorted(coined_sites(s, coin, exec));
}

PositionState apply_shift(const PositionState& s, Execution exec) { return shift_gather(s.sites(), exec); }

PositionState step(const PositionState& s, const CoinOperator& coin, Execution exec) {
  const std::vector<Site> coined = coined_sites(s, coin, exec);
  return shift_gather(coined, exec);
}

PositionState evolve(const PositionState& s, const CoinOperator& coin, std::size_t steps, Execution exec) {
  PositionState current = s;
  for (std::size_t t = 0; t < steps; ++t) current = step(current, coin, exec);
  return current;
}

}  // namespace qwalk
