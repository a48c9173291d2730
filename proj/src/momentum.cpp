#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "qwalk/dynamics.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {
namespace {

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

struct PlanDestroy {
  void operator()(fftw_plan p) const noexcept { fftw_destroy_plan(p); }
};
using FftwPlan = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDestroy>;

// The FFTW planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Four in-place N x N transforms, one per coin component, laid out back to back.
FftwPlan make_plan(fftw_complex* data, int n, int sign) {
  std::lock_guard lock(planner_mutex());
  const int dims[2] = {n, n};
  return FftwPlan(fftw_plan_many_dft(2, dims, static_cast<int>(kCoinDim), data, nullptr, 1, n * n, data, nullptr, 1,
                                     n * n, sign, FFTW_ESTIMATE));
}

std::int64_t floor_div2(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

PositionState evolve_momentum(const PositionState& s, const CoinOperator& coin, const EvolutionConfig& config,
                              Execution exec) {
  const std::size_t n = config.lattice_size;
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("evolve_momentum: lattice size must be even and positive");
  if (s.empty()) return s;

  std::int64_t m_lo = s.sites().front().point.m, m_hi = m_lo;
  std::int64_t n_lo = s.sites().front().point.n, n_hi = n_lo;
  for (const Site& site : s.sites()) {
    m_lo = std::min(m_lo, site.point.m);
    m_hi = std::max(m_hi, site.point.m);
    n_lo = std::min(n_lo, site.point.n);
    n_hi = std::max(n_hi, site.point.n);
  }
  const auto side = static_cast<std::int64_t>(n);
  if (m_hi - m_lo >= side || n_hi - n_lo >= side)
    throw std::invalid_argument("evolve_momentum: state support exceeds the periodic box");
  const LatticePoint origin{floor_div2(m_lo + m_hi) - side / 2, floor_div2(n_lo + n_hi) - side / 2};

  const std::size_t cells = n * n;
  FftwBuffer data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * cells * kCoinDim)));
  if (!data) throw std::bad_alloc();
  auto* buf = reinterpret_cast<Amplitude*>(data.get());
  std::fill(buf, buf + cells * kCoinDim, Amplitude{});
  // FFTW_BACKWARD is the e^{+i...} kernel: the forward transform here.
  FftwPlan to_momentum = make_plan(data.get(), static_cast<int>(n), FFTW_BACKWARD);
  FftwPlan to_position = make_plan(data.get(), static_cast<int>(n), FFTW_FORWARD);

  for (const Site& site : s.sites()) {
    const auto i = static_cast<std::size_t>(site.point.m - origin.m);
    const auto j = static_cast<std::size_t>(site.point.n - origin.n);
    for (std::size_t c = 0; c < kCoinDim; ++c) buf[c * cells + i * n + j] = site.amplitudes[c];
  }

  fftw_execute(to_momentum.get());

  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(cells);
  const double inv_cells = 1.0 / static_cast<double>(cells);
#pragma omp parallel for schedule(static) if (run_parallel(exec, cells))
  for (std::ptrdiff_t cell = 0; cell < count; ++cell) {
    const auto i = static_cast<std::size_t>(cell) / n;
    const auto j = static_cast<std::size_t>(cell) % n;
    const Matrix4 u = unitary_power(momentum_propagator(coin, grid_momentum(i, j, n)), config.steps);
    Vector4 v;
    for (std::size_t c = 0; c < kCoinDim; ++c) v(c) = buf[c * cells + cell];
    const Vector4 w = u * v;
    for (std::size_t c = 0; c < kCoinDim; ++c) buf[c * cells + cell] = w(c) * inv_cells;
  }

  fftw_execute(to_position.get());

  std::vector<Site> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Site site{{origin.m + static_cast<std::int64_t>(i), origin.n + static_cast<std::int64_t>(j)}, {}};
      for (std::size_t c = 0; c < kCoinDim; ++c) {
        const Amplitude a = buf[c * cells + i * n + j];
        if (std::abs(a) >= kMomentumDropThreshold) site.amplitudes[c] = a;
      }
      out.push_back(site);
    }
  }
  return PositionState::from_sorted(std::move(out));
}

}  // namespace qwalk
