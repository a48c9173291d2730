#include "qwalk/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

void prune_zeros(std::vector<Site>& sites) {
  std::erase_if(sites, [](const Site& s) { return is_zero(s.amplitudes); });
}

bool point_less(const Site& a, const Site& b) { return a.point < b.point; }

// Walks the union of two sorted supports, calling f(point, a_vec, b_vec).
template <typename F>
void for_each_union(const PositionState& a, const PositionState& b, F&& f) {
  static constexpr CoinVector kZero{};
  auto ia = a.sites().begin(), ea = a.sites().end();
  auto ib = b.sites().begin(), eb = b.sites().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->point < ib->point)) {
      f(ia->point, ia->amplitudes, kZero);
      ++ia;
    } else if (ia == ea || ib->point < ia->point) {
      f(ib->point, kZero, ib->amplitudes);
      ++ib;
    } else {
      f(ia->point, ia->amplitudes, ib->amplitudes);
      ++ia;
      ++ib;
    }
  }
}

}  // namespace

PositionState::PositionState(std::vector<Site> sites) {
  std::stable_sort(sites.begin(), sites.end(), point_less);
  std::vector<Site> merged;
  merged.reserve(sites.size());
  for (const Site& s : sites) {
    if (!merged.empty() && merged.back().point == s.point) {
      for (std::size_t c = 0; c < kCoinDim; ++c) merged.back().amplitudes[c] += s.amplitudes[c];
    } else {
      merged.push_back(s);
    }
  }
  prune_zeros(merged);
  sites_ = std::move(merged);
}

PositionState PositionState::from_sorted(std::vector<Site> sites) {
  prune_zeros(sites);
  PositionState out;
  out.sites_ = std::move(sites);
  return out;
}

const Site* PositionState::find(LatticePoint p) const noexcept {
  auto it = std::lower_bound(sites_.begin(), sites_.end(), p,
                             [](const Site& s, LatticePoint q) { return s.point < q; });
  if (it == sites_.end() || it->point != p) return nullptr;
  return &*it;
}

CoinVector PositionState::at(LatticePoint p) const noexcept {
  const Site* s = find(p);
  return s ? s->amplitudes : CoinVector{};
}

PositionState make_basis_state(LatticePoint point, CoinComponent c) {
  Site s{point, {}};
  s.amplitudes[index(c)] = 1.0;
  return PositionState::from_sorted({s});
}

PositionState superpose(std::span<const Term> terms) {
  if (terms.empty()) throw std::invalid_argument("superpose: empty term list");
  std::vector<Site> all;
  std::size_t total = 0;
  for (const Term& t : terms) total += t.state.size();
  all.reserve(total);
  for (const Term& t : terms) {
    for (const Site& s : t.state.sites()) {
      Site scaled = s;
      for (auto& a : scaled.amplitudes) a *= t.coefficient;
      all.push_back(scaled);
    }
  }
  return PositionState(std::move(all));
}

PositionState superpose(std::initializer_list<Term> terms) {
  return superpose(std::span<const Term>(terms.begin(), terms.size()));
}

PositionState scale(const PositionState& s, Amplitude factor) {
  std::vector<Site> sites(s.sites().begin(), s.sites().end());
  for (Site& site : sites)
    for (auto& a : site.amplitudes) a *= factor;
  return PositionState::from_sorted(std::move(sites));
}

double squared_norm(const PositionState& s) {
  double sum = 0.0;
  for (const Site& site : s.sites())
    for (const auto& a : site.amplitudes) sum += std::norm(a);
  return sum;
}

double norm(const PositionState& s) { return std::sqrt(squared_norm(s)); }

Amplitude inner_product(const PositionState& a, const PositionState& b) {
  Amplitude sum = 0.0;
  // Only common sites contribute.
  auto ib = b.sites().begin(), eb = b.sites().end();
  for (const Site& sa : a.sites()) {
    while (ib != eb && ib->point < sa.point) ++ib;
    if (ib == eb) break;
    if (ib->point != sa.point) continue;
    for (std::size_t c = 0; c < kCoinDim; ++c) sum += std::conj(sa.amplitudes[c]) * ib->amplitudes[c];
  }
  return sum;
}

void require_normalized(const PositionState& s, double slack) {
  const double n = norm(s);
  if (std::abs(n - 1.0) > slack)
    throw NormalizationError("state is not normalized (norm = " + std::to_string(n) + ")", n);
}

double fidelity(const PositionState& a, const PositionState& b) {
  require_normalized(a);
  require_normalized(b);
  return std::norm(inner_product(a, b));
}

PositionState translate(const PositionState& s, LatticePoint offset) {
  std::vector<Site> sites(s.sites().begin(), s.sites().end());
  for (Site& site : sites) site.point = site.point + offset;
  return PositionState::from_sorted(std::move(sites));
}

std::map<LatticePoint, double> position_distribution(const PositionState& s) {
  require_normalized(s);
  std::map<LatticePoint, double> out;
  for (const Site& site : s.sites()) {
    double p = 0.0;
    for (const auto& a : site.amplitudes) p += std::norm(a);
    out.emplace_hint(out.end(), site.point, p);
  }
  return out;
}

double distance(const PositionState& a, const PositionState& b) {
  double sum = 0.0;
  for_each_union(a, b, [&](LatticePoint, const CoinVector& x, const CoinVector& y) {
    for (std::size_t c = 0; c < kCoinDim; ++c) sum += std::norm(x[c] - y[c]);
  });
  return std::sqrt(sum);
}

double max_amplitude_difference(const PositionState& a, const PositionState& b) {
  double worst = 0.0;
  for_each_union(a, b, [&](LatticePoint, const CoinVector& x, const CoinVector& y) {
    for (std::size_t c = 0; c < kCoinDim; ++c) worst = std::max(worst, std::abs(x[c] - y[c]));
  });
  return worst;
}

}  // namespace qwalk
