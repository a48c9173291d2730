#include "qwalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace qwalk {

double unitarity_deviation(const Matrix4& a) {
  return (a.adjoint() * a - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

double positive_arg(Amplitude z) {
  double arg = std::arg(z);
  if (arg < 0.0) arg += 2.0 * std::numbers::pi;
  // -0 and tiny negative arguments round up to exactly 2pi.
  if (arg >= 2.0 * std::numbers::pi) arg = 0.0;
  return arg;
}

std::array<EigenPair, 4> eigensystem(const Matrix4& a) {
  if (const double dev = unitarity_deviation(a); dev > 1e-10)
    throw std::invalid_argument("eigensystem: matrix is not unitary (deviation " + std::to_string(dev) + ")");
  Eigen::ComplexSchur<Matrix4> schur(a, true);
  const Matrix4& t = schur.matrixT();
  const Matrix4& q = schur.matrixU();
  std::array<EigenPair, 4> pairs;
  for (int i = 0; i < 4; ++i) {
    pairs[i].value = t(i, i);
    pairs[i].vector = q.col(i);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const EigenPair& x, const EigenPair& y) {
    return positive_arg(x.value) < positive_arg(y.value);
  });
  return pairs;
}

std::array<Amplitude, 4> eigenvalues(const Matrix4& a) {
  const auto pairs = eigensystem(a);
  return {pairs[0].value, pairs[1].value, pairs[2].value, pairs[3].value};
}

Matrix4 unitary_power(const Matrix4& a, std::size_t t) {
  if (t <= 8) {
    Matrix4 out = Matrix4::Identity();
    for (std::size_t i = 0; i < t; ++i) out = a * out;
    return out;
  }
  Eigen::ComplexSchur<Matrix4> schur(a, true);
  const Matrix4& q = schur.matrixU();
  Vector4 phases;
  for (int i = 0; i < 4; ++i) {
    const double theta = std::arg(schur.matrixT()(i, i));
    phases(i) = std::polar(1.0, static_cast<double>(t) * theta);
  }
  return q * phases.asDiagonal() * q.adjoint();
}

}  // namespace qwalk
