#include "lmhd/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "lmhd/errors.hpp"

namespace lmhd {

namespace {
// The FFTW planner is not re-entrant; execution is.
std::mutex planner_mutex;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

fftw_complex* as_fftw(const Complex* p) {
  return reinterpret_cast<fftw_complex*>(const_cast<Complex*>(p));
}
}  // namespace

struct Grid::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  Plans(int dim, int points, std::size_t size) {
    std::lock_guard lock(planner_mutex);
    auto* in = fftw_alloc_complex(size);
    auto* out = fftw_alloc_complex(size);
    std::array<int, 3> n{points, points, points};
    const unsigned flags = FFTW_MEASURE | FFTW_UNALIGNED;
    forward = fftw_plan_dft(dim, n.data(), in, out, FFTW_FORWARD, flags);
    backward = fftw_plan_dft(dim, n.data(), in, out, FFTW_BACKWARD, flags);
    fftw_free(in);
    fftw_free(out);
  }
  ~Plans() {
    std::lock_guard lock(planner_mutex);
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
};

Grid::Grid(int dim, int points) : dim_(dim), points_(points) {
  detail::require(dim == 2 || dim == 3, "grid dimension must be 2 or 3, got " + std::to_string(dim));
  detail::require(is_power_of_two(points) && points >= 8,
                  "points per axis must be a power of two >= 8, got " + std::to_string(points));
  size_ = 1;
  for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(points);
  plans_ = std::make_shared<const Plans>(dim, points, size_);

  auto table = std::make_shared<std::vector<WaveVector>>(size_);
  const auto n = static_cast<std::size_t>(points_);
  for (std::size_t flat = 0; flat < size_; ++flat) {
    WaveVector k{0, 0, 0};
    std::size_t rest = flat;
    for (int a = dim_ - 1; a >= 0; --a) {
      k[a] = wavenumber(static_cast<int>(rest % n));
      rest /= n;
    }
    (*table)[flat] = k;
  }
  wavevectors_ = std::move(table);
}

std::size_t Grid::index_of(const WaveVector& k) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim_; ++a) {
    detail::require(k[a] >= -points_ / 2 && k[a] < points_ / 2, "wave vector outside grid");
    const int i = k[a] >= 0 ? k[a] : k[a] + points_;
    flat = flat * static_cast<std::size_t>(points_) + static_cast<std::size_t>(i);
  }
  return flat;
}

std::size_t Grid::conjugate_index(std::size_t flat) const {
  const auto n = static_cast<std::size_t>(points_);
  std::size_t result = 0;
  std::size_t stride = 1;
  for (int a = dim_ - 1; a >= 0; --a) {
    const std::size_t i = flat % n;
    flat /= n;
    result += ((n - i) % n) * stride;
    stride *= n;
  }
  return result;
}

double Grid::radius(std::size_t flat) const { return std::sqrt(static_cast<double>(radius_squared(flat))); }

double Grid::max_radius() const { return std::sqrt(static_cast<double>(dim_)) * points_ / 2.0; }

double Grid::cell_volume() const { return domain_volume() / static_cast<double>(size_); }

double Grid::domain_volume() const { return std::pow(2.0 * std::numbers::pi, dim_); }

void Grid::forward_fft(std::span<const Complex> in, std::span<Complex> out) const {
  detail::require(in.size() == size_ && out.size() == size_, "FFT buffer size mismatch");
  if (in.data() == out.data()) {
    std::vector<Complex> copy(in.begin(), in.end());
    fftw_execute_dft(plans_->forward, as_fftw(copy.data()), as_fftw(out.data()));
    return;
  }
  fftw_execute_dft(plans_->forward, as_fftw(in.data()), as_fftw(out.data()));
}

void Grid::backward_fft(std::span<const Complex> in, std::span<Complex> out) const {
  detail::require(in.size() == size_ && out.size() == size_, "FFT buffer size mismatch");
  if (in.data() == out.data()) {
    std::vector<Complex> copy(in.begin(), in.end());
    fftw_execute_dft(plans_->backward, as_fftw(copy.data()), as_fftw(out.data()));
    return;
  }
  fftw_execute_dft(plans_->backward, as_fftw(in.data()), as_fftw(out.data()));
}

}  // namespace lmhd
