#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qwalk {

using Amplitude = std::complex<double>;

struct LatticePoint {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;

  friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.m + b.m, a.n + b.n}; }
  friend constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.m - b.m, a.n - b.n}; }
  friend constexpr LatticePoint operator-(LatticePoint a) { return {-a.m, -a.n}; }
};

// Ordinals match the diagonal of the momentum propagator:
// R <-> e^{ik}, L <-> e^{-ik}, U <-> e^{il}, D <-> e^{-il}.
enum class CoinComponent : std::uint8_t { R = 0, L = 1, U = 2, D = 3 };

inline constexpr std::size_t kCoinDim = 4;

inline constexpr std::array<CoinComponent, kCoinDim> kCoinComponents = {
    CoinComponent::R, CoinComponent::L, CoinComponent::U, CoinComponent::D};

constexpr std::size_t index(CoinComponent c) { return static_cast<std::size_t>(c); }

/// Lattice displacement applied by the shift operator to component `c`.
constexpr LatticePoint displacement(CoinComponent c) {
  switch (c) {
    case CoinComponent::R: return {1, 0};
    case CoinComponent::L: return {-1, 0};
    case CoinComponent::U: return {0, 1};
    case CoinComponent::D: return {0, -1};
  }
  return {0, 0};
}

constexpr LatticePoint displacement(std::size_t c) { return displacement(static_cast<CoinComponent>(c)); }

constexpr char component_name(CoinComponent c) { return "RLUD"[index(c)]; }

constexpr std::optional<CoinComponent> parse_component(std::string_view s) {
  if (s == "R") return CoinComponent::R;
  if (s == "L") return CoinComponent::L;
  if (s == "U") return CoinComponent::U;
  if (s == "D") return CoinComponent::D;
  return std::nullopt;
}

/// Four coin amplitudes at one lattice site, ordered (R, L, U, D).
using CoinVector = std::array<Amplitude, kCoinDim>;

constexpr bool is_zero(const CoinVector& v) {
  return v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0 && v[3] == 0.0;
}

}  // namespace qwalk
