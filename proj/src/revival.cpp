#include "qwalk/revival.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

#include "qwalk/dynamics.hpp"

namespace qwalk {
namespace {

using enum CoinComponent;

Site two_component_site(LatticePoint p, CoinComponent a, CoinComponent b, double amp) {
  Site s{p, {}};
  s.amplitudes[index(a)] = amp;
  s.amplitudes[index(b)] = amp;
  return s;
}

}  // namespace

GroverStationaryStates grover_stationary_states() {
  const double a = 1.0 / std::sqrt(8.0);
  GroverStationaryStates out;
  out.psi1 = PositionState({two_component_site({0, 0}, L, D, a), two_component_site({0, 1}, L, U, a),
                            two_component_site({1, 0}, R, D, a), two_component_site({1, 1}, R, U, a)});
  out.psi2 = PositionState({two_component_site({0, 0}, L, D, -a), two_component_site({0, 1}, L, U, a),
                            two_component_site({1, 0}, R, D, a), two_component_site({1, 1}, R, U, -a)});
  return out;
}

PositionState revival_state() {
  return PositionState({two_component_site({1, 0}, R, D, 0.5), two_component_site({0, 1}, L, U, 0.5)});
}

PositionState revival_partner_state() {
  return PositionState({two_component_site({0, 0}, L, D, 0.5), two_component_site({1, 1}, R, U, 0.5)});
}

PositionState origin_symmetric_state() { return PositionState({Site{{0, 0}, {0.5, 0.5, 0.5, 0.5}}}); }

StationaryStateSet find_local_stationary_states(const CoinOperator& coin, Amplitude lambda, SiteBox box) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-10)
    throw std::invalid_argument("find_local_stationary_states: |lambda| must be 1");
  if (box.size == 0) throw std::invalid_argument("find_local_stationary_states: box size must be positive");

  const auto s = static_cast<std::int64_t>(box.size);
  const std::int64_t padded = s + 2;
  const auto unknowns = static_cast<Eigen::Index>(4 * s * s);
  const auto equations = static_cast<Eigen::Index>(4 * padded * padded);

  // Column (site, c) holds U|site,c> - lambda |site,c> on the padded box.
  auto column_of = [&](std::int64_t i, std::int64_t j, std::size_t c) {
    return static_cast<Eigen::Index>((i * s + j) * 4 + static_cast<std::int64_t>(c));
  };
  auto row_of = [&](std::int64_t i, std::int64_t j, std::size_t c) {
    return static_cast<Eigen::Index>(((i + 1) * padded + (j + 1)) * 4 + static_cast<std::int64_t>(c));
  };
  Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(equations, unknowns);
  const Matrix4& u = coin.matrix();
  for (std::int64_t i = 0; i < s; ++i)
    for (std::int64_t j = 0; j < s; ++j)
      for (std::size_t c = 0; c < kCoinDim; ++c) {
        const Eigen::Index col = column_of(i, j, c);
        for (std::size_t out = 0; out < kCoinDim; ++out) {
          const LatticePoint d = displacement(out);
          system(row_of(i + d.m, j + d.n, out), col) += u(out, c);
        }
        system(row_of(i, j, c), col) -= lambda;
      }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff = kNullSpaceRelativeThreshold * sigma(0);

  StationaryStateSet result{lambda, {}, box};
  for (Eigen::Index col = 0; col < unknowns; ++col) {
    if (sigma(col) > cutoff) continue;
    Eigen::VectorXcd v = svd.matrixV().col(col);
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    v *= std::abs(v(pivot)) / v(pivot);
    std::vector<Site> sites;
    for (std::int64_t i = 0; i < s; ++i)
      for (std::int64_t j = 0; j < s; ++j) {
        Site site{{box.origin.m + i, box.origin.n + j}, {}};
        for (std::size_t c = 0; c < kCoinDim; ++c) site.amplitudes[c] = v(column_of(i, j, c));
        sites.push_back(site);
      }
    result.states.push_back(PositionState::from_sorted(std::move(sites)));
  }
  return result;
}

RevivalReport detect_period(const PositionState& initial, const CoinOperator& coin, std::size_t t_max, double tol,
                            Execution exec) {
  require_normalized(initial);
  if (t_max == 0) throw std::invalid_argument("detect_period: t_max must be at least 1");
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("detect_period: tolerance must lie in (0, 1)");

  RevivalReport report;
  report.tolerance = tol;
  report.fidelity_series.reserve(t_max);
  PositionState current = initial;
  for (std::size_t t = 1; t <= t_max; ++t) {
    current = step(current, coin, exec);
    const Amplitude overlap = inner_product(initial, current);
    const double f = std::norm(overlap);
    report.fidelity_series.push_back(f);
    if (!report.period && f >= 1.0 - tol) {
      report.period = t;
      report.phase = overlap / std::abs(overlap);
    }
  }
  return report;
}

std::vector<double> return_probability_series(const PositionState& initial, const CoinOperator& coin,
                                              std::size_t t_max, Execution exec) {
  require_normalized(initial);
  if (initial.size() != 1 || initial.sites().front().point != LatticePoint{0, 0})
    throw std::invalid_argument("return_probability_series: initial state must occupy only the origin");
  std::vector<double> series;
  series.reserve(t_max + 1);
  PositionState current = initial;
  auto at_origin = [](const PositionState& s) {
    double p = 0.0;
    for (const auto& a : s.at({0, 0})) p += std::norm(a);
    return p;
  };
  series.push_back(at_origin(current));
  for (std::size_t t = 1; t <= t_max; ++t) {
    current = step(current, coin, exec);
    series.push_back(at_origin(current));
  }
  return series;
}

}  // namespace qwalk
