#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Dense>

#include "qwalk/lattice.hpp"

namespace qwalk {

using Matrix4 = Eigen::Matrix<Amplitude, 4, 4>;
using Vector4 = Eigen::Matrix<Amplitude, 4, 1>;

/// Max entrywise |A^dagger A - I|.
double unitarity_deviation(const Matrix4& a);

struct EigenPair {
  Amplitude value;
  Vector4 vector;  // unit norm
};

/// Eigenpairs of a unitary 4x4 matrix, ordered by argument on [0, 2pi).
/// Eigenvectors are orthonormal (taken from the complex Schur basis, which is
/// diagonal for normal matrices). Throws std::invalid_argument if the input
/// deviates from unitarity by more than 1e-10.
std::array<EigenPair, 4> eigensystem(const Matrix4& a);

/// Eigenvalues only, same ordering and preconditions as eigensystem().
std::array<Amplitude, 4> eigenvalues(const Matrix4& a);

/// a^t for unitary a. Repeated multiplication for t <= 8, otherwise
/// Q diag(lambda^t) Q^dagger from the Schur factorization.
Matrix4 unitary_power(const Matrix4& a, std::size_t t);

/// Argument mapped into [0, 2pi).
double positive_arg(Amplitude z);

}  // namespace qwalk
