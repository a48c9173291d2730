#include "qwalk/coin.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

constexpr std::array<std::string_view, 4> kBuiltinNames = {"grover", "hadamard4", "dft4", "swap"};

Matrix4 grover_matrix() {
  Matrix4 g = Matrix4::Constant(Amplitude(0.5, 0.0));
  g.diagonal().setConstant(Amplitude(-0.5, 0.0));
  return g;
}

Matrix4 hadamard4_matrix() {
  // H (x) H with H = [[1,1],[1,-1]]/sqrt2; entries are exactly +-1/2.
  Matrix4 h;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int parity = __builtin_popcount(static_cast<unsigned>(i & j)) & 1;
      h(i, j) = parity ? -0.5 : 0.5;
    }
  return h;
}

Matrix4 dft4_matrix() {
  static constexpr std::array<Amplitude, 4> kPowersOfI = {Amplitude(1, 0), Amplitude(0, 1), Amplitude(-1, 0),
                                                         Amplitude(0, -1)};
  Matrix4 f;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) f(j, k) = 0.5 * kPowersOfI[(j * k) % 4];
  return f;
}

Matrix4 swap_matrix() {
  Matrix4 s = Matrix4::Zero();
  s(0, 1) = s(1, 0) = s(2, 3) = s(3, 2) = 1.0;
  return s;
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

CoinOperator::CoinOperator(const Matrix4& matrix, std::string name) : matrix_(matrix), name_(std::move(name)) {
  const double dev = unitarity_deviation(matrix_);
  if (!(dev <= kCoinUnitarityTolerance))
    throw CoinValidationError("coin is not unitary: max |C^dagger C - I| = " + format_real(dev), dev);
}

CoinOperator CoinOperator::with_global_phase(double theta) const {
  return CoinOperator(std::polar(1.0, theta) * matrix_, name_.empty() ? name_ : name_ + "*phase");
}

std::span<const std::string_view> builtin_coin_names() { return kBuiltinNames; }

bool is_builtin_coin(std::string_view name) {
  return std::find(kBuiltinNames.begin(), kBuiltinNames.end(), name) != kBuiltinNames.end();
}

CoinOperator builtin_coin(std::string_view name) {
  if (name == "grover") return CoinOperator(grover_matrix(), "grover");
  if (name == "hadamard4") return CoinOperator(hadamard4_matrix(), "hadamard4");
  if (name == "dft4") return CoinOperator(dft4_matrix(), "dft4");
  if (name == "swap") return CoinOperator(swap_matrix(), "swap");
  throw std::invalid_argument("unknown coin '" + std::string(name) + "'");
}

CoinOperator parse_coin(std::istream& in, std::string name) {
  Matrix4 m;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (row == 4) throw CoinValidationError("coin file: more than 4 rows");
    std::istringstream ss(line);
    std::array<double, 8> values{};
    for (double& v : values)
      if (!(ss >> v)) throw CoinValidationError("coin file: row " + std::to_string(row + 1) + " needs 8 reals");
    if (std::string extra; ss >> extra)
      throw CoinValidationError("coin file: row " + std::to_string(row + 1) + " has more than 8 fields");
    for (int j = 0; j < 4; ++j) m(row, j) = {values[2 * j], values[2 * j + 1]};
    ++row;
  }
  if (row != 4) throw CoinValidationError("coin file: expected 4 rows, got " + std::to_string(row));
  return CoinOperator(m, std::move(name));
}

CoinOperator load_coin(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CoinValidationError("cannot open coin file " + path.string());
  return parse_coin(in, path.filename().string());
}

void write_coin(std::ostream& out, const CoinOperator& coin) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (j) out << ' ';
      out << format_real(coin.matrix()(i, j).real()) << ' ' << format_real(coin.matrix()(i, j).imag());
    }
    out << '\n';
  }
}

CoinOperator random_unitary_coin(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Matrix4 z;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) z(i, j) = {gauss(rng), gauss(rng)};
  Eigen::HouseholderQR<Matrix4> qr(z);
  Matrix4 q = qr.householderQ();
  const Matrix4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 4; ++j) {
    const Amplitude d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return CoinOperator(q, "random:" + std::to_string(seed));
}

}  // namespace qwalk
