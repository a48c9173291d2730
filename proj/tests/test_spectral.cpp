#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "qwalk/report_json.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

// Faddeev-LeVerrier via Newton's identities on traces of powers; never looks at eigenvalues.
CharPolyCoefficients coefficients_from_traces(const Matrix4& a) {
  const Matrix4 a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  const Amplitude p1 = a.trace(), p2 = a2.trace(), p3 = a3.trace(), p4 = a4.trace();
  CharPolyCoefficients e;
  e.e1 = p1;
  e.e2 = (e.e1 * p1 - p2) / 2.0;
  e.e3 = (e.e2 * p1 - e.e1 * p2 + p3) / 3.0;
  e.e4 = (e.e3 * p1 - e.e2 * p2 + e.e1 * p3 - p4) / 4.0;
  return e;
}

// Leibniz expansion over the 24 permutations.
Amplitude leibniz_determinant(const Matrix4& a) {
  std::array<int, 4> perm{0, 1, 2, 3};
  Amplitude det = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    Amplitude term = (inversions % 2) ? -1.0 : 1.0;
    for (int i = 0; i < 4; ++i) term *= a(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::array<Amplitude, 4> other_solver_eigenvalues(const Matrix4& a) {
  Eigen::ComplexEigenSolver<Matrix4> es(a, false);
  return {es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2), es.eigenvalues()(3)};
}

MomentumPair random_momentum(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
  return {u(rng), u(rng)};
}

std::vector<CoinOperator> theorem_coin_set() {
  const auto g = builtin_coin("grover");
  return {g, builtin_coin("swap"), g.with_global_phase(0.3), g.with_global_phase(1.1), g.with_global_phase(2.5)};
}

}  // namespace

TEST_CASE("momentum propagator") {
  const auto g = builtin_coin("grover");
  CHECK(momentum_propagator(g, {0.0, 0.0}) == g.matrix());

  Matrix4 rows_negated = g.matrix();
  rows_negated.row(0) *= -1.0;
  rows_negated.row(1) *= -1.0;
  CHECK((momentum_propagator(g, {pi, 0.0}) - rows_negated).cwiseAbs().maxCoeff() < 1e-15);

  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto c = random_unitary_coin(seed);
    const Amplitude det_c = c.matrix().determinant();
    for (int i = 0; i < 10; ++i) {
      const Matrix4 u = momentum_propagator(c, random_momentum(rng));
      CHECK(unitarity_deviation(u) <= 1e-13);
      CHECK(std::abs(u.determinant() - det_c) <= 1e-12);
    }
  }
}

TEST_CASE("eigensystem") {
  const Matrix4 g = builtin_coin("grover").matrix();
  // G = J/2 - I and J has spectrum {4, 0, 0, 0}.
  const auto pairs = eigensystem(g);
  CHECK(std::abs(pairs[0].value - 1.0) < 1e-14);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(pairs[i].value + 1.0) < 1e-14);

  for (const auto& p : eigensystem(Matrix4::Identity())) CHECK(p.value == Amplitude(1.0));

  std::mt19937_64 rng(2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix4 u = momentum_propagator(random_unitary_coin(seed), random_momentum(rng));
    const auto es = eigensystem(u);
    double last_arg = -1.0;
    for (const auto& p : es) {
      CHECK((u * p.vector - p.value * p.vector).norm() <= 1e-10);
      CHECK(std::abs(p.vector.norm() - 1.0) <= 1e-13);
      CHECK(std::abs(std::abs(p.value) - 1.0) <= 1e-10);
      CHECK(positive_arg(p.value) >= last_arg);
      last_arg = positive_arg(p.value);
    }
  }

  for (int i = 0; i < 20; ++i) {
    const auto values = eigenvalues(momentum_propagator(builtin_coin("grover"), random_momentum(rng)));
    auto has = [&](Amplitude z) {
      return std::any_of(values.begin(), values.end(), [&](Amplitude v) { return std::abs(v - z) < 1e-12; });
    };
    CHECK(has(1.0));
    CHECK(has(-1.0));
  }

  Matrix4 bad = g;
  bad(0, 0) = 0.5;
  CHECK_THROWS_AS(eigensystem(bad), std::invalid_argument);
}

TEST_CASE("constant eigenvalue detection on the named coins") {
  SUBCASE("grover") {
    const auto r = detect_constant_eigenvalues(builtin_coin("grover"), 64, 1e-8);
    REQUIRE(r.constants.size() == 2);
    CHECK(std::abs(r.constants[0].value - 1.0) < 1e-12);
    CHECK(std::abs(r.constants[1].value + 1.0) < 1e-12);
    CHECK(r.constants[0].max_residual <= 1e-12);
    CHECK(r.constants[1].max_residual <= 1e-12);
    CHECK(r.pairing_ok);
    CHECK_FALSE(r.all_constant);
    CHECK(r.grid_size == 64);
    CHECK(r.tolerance == 1e-8);
  }
  SUBCASE("hadamard4") {
    const auto r = detect_constant_eigenvalues(builtin_coin("hadamard4"), 64, 1e-8);
    CHECK(r.constants.empty());
    CHECK(r.pairing_ok);
  }
  SUBCASE("swap") {
    const auto r = detect_constant_eigenvalues(builtin_coin("swap"), 64, 1e-8);
    REQUIRE(r.constants.size() == 2);
    CHECK(std::abs(r.constants[0].value - 1.0) < 1e-12);
    CHECK(std::abs(r.constants[1].value + 1.0) < 1e-12);
    CHECK(r.pairing_ok);
    CHECK(r.all_constant);
  }
  CHECK_THROWS_AS(detect_constant_eigenvalues(builtin_coin("grover"), 7, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(detect_constant_eigenvalues(builtin_coin("grover"), 64, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(detect_constant_eigenvalues(builtin_coin("grover"), 64, 1e-13), std::invalid_argument);
}

TEST_CASE("brute-force cross-checks with an independent eigensolver") {
  constexpr std::size_t grid = 64;
  SUBCASE("hadamard4 has no eigenvalue present at every cell") {
    // Any constant would have to be one of the spectrum at cell (0,0).
    const auto origin = other_solver_eigenvalues(builtin_coin("hadamard4").matrix());
    for (const Amplitude& z : origin) {
      double worst = 0.0;
      for (std::size_t i = 0; i < grid; ++i)
        for (std::size_t j = 0; j < grid; ++j) {
          const auto v = other_solver_eigenvalues(momentum_propagator(builtin_coin("hadamard4"), grid_momentum(i, j, grid)));
          double best = 1e9;
          for (const auto& x : v) best = std::min(best, std::abs(x - z));
          worst = std::max(worst, best);
        }
      CHECK(worst > 0.1);
    }
  }
  SUBCASE("swap has +1 and -1 twice each at every cell") {
    for (std::size_t i = 0; i < grid; i += 3)
      for (std::size_t j = 0; j < grid; j += 5) {
        auto v = other_solver_eigenvalues(momentum_propagator(builtin_coin("swap"), grid_momentum(i, j, grid)));
        int plus = 0, minus = 0;
        for (const auto& x : v) {
          plus += std::abs(x - 1.0) < 1e-12;
          minus += std::abs(x + 1.0) < 1e-12;
        }
        CHECK(plus == 2);
        CHECK(minus == 2);
      }
  }
}

TEST_CASE("pairing, phase covariance and never-three") {
  for (const auto& coin : theorem_coin_set()) {
    const auto r = detect_constant_eigenvalues(coin);
    CHECK(r.pairing_ok);
    CHECK(r.constants.size() == 2);
  }
  const auto base = detect_constant_eigenvalues(builtin_coin("grover"));
  for (double theta : {0.3, 1.1, 2.5}) {
    const auto r = detect_constant_eigenvalues(builtin_coin("grover").with_global_phase(theta));
    REQUIRE(r.constants.size() == base.constants.size());
    for (const auto& c : base.constants) {
      const Amplitude expected = std::polar(1.0, theta) * c.value;
      CHECK(std::any_of(r.constants.begin(), r.constants.end(),
                        [&](const ConstantEigenvalue& x) { return std::abs(x.value - expected) <= 1e-8; }));
    }
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = detect_constant_eigenvalues(random_unitary_coin(seed));
    CHECK(r.constants.size() != 3);
  }
}

TEST_CASE("characteristic polynomial profile") {
  const auto g = builtin_coin("grover");
  const auto prof = char_poly_profile(g, 32);
  CHECK(prof.cells.size() == 32 * 32);
  CHECK(std::abs(prof.det_coin - leibniz_determinant(g.matrix())) < 1e-15);
  CHECK(std::abs(prof.det_coin + 1.0) < 1e-15);
  for (const auto& e : prof.cells) CHECK(std::abs(e.e4 + 1.0) <= 1e-12);
  CHECK(prof.max_det_deviation <= 1e-12);
  CHECK(prof.e2_variance() <= 1e-10);
  CHECK(prof.c_zero);

  const auto h = char_poly_profile(builtin_coin("hadamard4"), 32);
  CHECK(h.e2_variance() > 1e-4);
  CHECK_FALSE(h.c_zero);

  SUBCASE("eigenvalue route agrees with the trace route at every cell") {
    for (const auto& coin : {g, builtin_coin("dft4"), random_unitary_coin(7)}) {
      const auto p = char_poly_profile(coin, 16);
      for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) {
          const auto direct = coefficients_from_traces(momentum_propagator(coin, grid_momentum(i, j, 16)));
          const auto& e = p.cells[i * 16 + j];
          CHECK(std::abs(e.e1 - direct.e1) < 1e-12);
          CHECK(std::abs(e.e2 - direct.e2) < 1e-12);
          CHECK(std::abs(e.e3 - direct.e3) < 1e-12);
          CHECK(std::abs(e.e4 - direct.e4) < 1e-12);
        }
    }
  }

  SUBCASE("c = 0 whenever a constant eigenvalue exists") {
    std::vector<CoinOperator> coins = theorem_coin_set();
    for (std::uint64_t seed = 100; seed < 110; ++seed) coins.push_back(random_unitary_coin(seed));
    coins.push_back(builtin_coin("hadamard4"));
    coins.push_back(builtin_coin("dft4"));
    for (const auto& coin : coins) {
      if (!detect_constant_eigenvalues(coin).constants.empty()) CHECK(char_poly_profile(coin, 32).c_zero);
    }
  }
}

TEST_CASE("determinant constancy over the grid for random coins") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = random_unitary_coin(seed);
    const Amplitude det_c = leibniz_determinant(c.matrix());
    for (std::size_t i = 0; i < 32; ++i)
      for (std::size_t j = 0; j < 32; ++j) {
        const Matrix4 u = momentum_propagator(c, grid_momentum(i, j, 32));
        CHECK(std::abs(leibniz_determinant(u) - det_c) <= 1e-12);
        for (const auto& z : eigenvalues(u)) CHECK(std::abs(std::abs(z) - 1.0) <= 1e-10);
      }
  }
}

TEST_CASE("Grover closed-form momentum eigenvectors") {
  const auto at0 = grover_constant_eigenvectors({0.0, 0.0});
  for (int i = 0; i < 4; ++i) {
    CHECK(at0.v1(i) == Amplitude(2.0));
    CHECK(at0.v2(i) == Amplitude(0.0));
  }
  const auto atpi = grover_constant_eigenvectors({pi, pi});
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(atpi.v1(i)) < 1e-15);
    CHECK(std::abs(atpi.v2(i) + 2.0) < 1e-15);
  }
  std::mt19937_64 rng(9);
  const auto g = builtin_coin("grover");
  for (int i = 0; i < 100; ++i) {
    const auto p = random_momentum(rng);
    const Matrix4 u = momentum_propagator(g, p);
    const auto v = grover_constant_eigenvectors(p);
    CHECK((u * v.v1 - v.v1).norm() <= 1e-12);
    CHECK((u * v.v2 + v.v2).norm() <= 1e-12);
  }
}

TEST_CASE("serial and parallel grid scans agree bit for bit") {
  const auto c = random_unitary_coin(3);
  const auto a = detect_constant_eigenvalues(builtin_coin("grover"), 64, 1e-8, Execution::serial);
  const auto b = detect_constant_eigenvalues(builtin_coin("grover"), 64, 1e-8, Execution::parallel);
  REQUIRE(a.constants.size() == b.constants.size());
  for (std::size_t i = 0; i < a.constants.size(); ++i) {
    CHECK(a.constants[i].value == b.constants[i].value);
    CHECK(a.constants[i].max_residual == b.constants[i].max_residual);
  }
  const auto pa = char_poly_profile(c, 32, Execution::serial);
  const auto pb = char_poly_profile(c, 32, Execution::parallel);
  CHECK(pa.variance == pb.variance);
  CHECK(pa.mean == pb.mean);
}

TEST_CASE("spectrum JSON") {
  const auto g = builtin_coin("grover");
  const auto j = to_json(detect_constant_eigenvalues(g), char_poly_profile(g, 32));
  REQUIRE(j["constants"].size() == 2);
  CHECK(j["constants"][0]["re"].get<double>() == doctest::Approx(1.0));
  CHECK(j["constants"][1]["re"].get<double>() == doctest::Approx(-1.0));
  CHECK(j["constants"][0].contains("max_residual"));
  CHECK(j["grid_size"] == 64);
  CHECK(j["tolerance"].get<double>() == 1e-8);
  CHECK(j["pairing_ok"] == true);
  CHECK(j["c_zero"] == true);
  CHECK(j["e2_variance"].get<double>() <= 1e-10);
  CHECK(j["det_coin"]["re"].get<double>() == doctest::Approx(-1.0));
  CHECK(j["det_coin"]["im"].get<double>() == doctest::Approx(0.0));
}
