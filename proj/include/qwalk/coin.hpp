#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "qwalk/linalg.hpp"

namespace qwalk {

inline constexpr double kCoinUnitarityTolerance = 1e-12;

/// A 4x4 unitary acting on the coin basis (R, L, U, D).
class CoinOperator {
 public:
  /// Throws CoinValidationError when the matrix is not unitary within 1e-12.
  explicit CoinOperator(const Matrix4& matrix, std::string name = {});

  const Matrix4& matrix() const noexcept { return matrix_; }
  const std::string& name() const noexcept { return name_; }

  CoinVector apply(const CoinVector& v) const noexcept {
    CoinVector out;
    for (std::size_t i = 0; i < kCoinDim; ++i) {
      Amplitude acc = matrix_(i, 0) * v[0];
      for (std::size_t j = 1; j < kCoinDim; ++j) acc += matrix_(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  /// e^{i theta} C
  CoinOperator with_global_phase(double theta) const;

 private:
  Matrix4 matrix_;
  std::string name_;
};

std::span<const std::string_view> builtin_coin_names();
bool is_builtin_coin(std::string_view name);

/// grover, hadamard4, dft4 or swap. Throws std::invalid_argument otherwise.
CoinOperator builtin_coin(std::string_view name);

// Coin file: 4 lines of 8 whitespace-separated reals, re/im interleaved per row.
CoinOperator parse_coin(std::istream& in, std::string name = {});
CoinOperator load_coin(const std::filesystem::path& path);
void write_coin(std::ostream& out, const CoinOperator& coin);

/// Haar-random unitary coin (QR of a complex Ginibre matrix with phase fix).
CoinOperator random_unitary_coin(std::uint64_t seed);

}  // namespace qwalk
