#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace lmhd {

using Complex = std::complex<double>;
using WaveVector = std::array<int, 3>;

/// Uniform periodic grid on [0, 2π)^dim with `points` samples per axis.
///
/// Storage is row-major with axis 0 slowest. Along each axis the index i maps
/// to the wavenumber i for i < points/2 and i - points otherwise, so the
/// Nyquist wavenumber is -points/2. Copies share the FFTW plans.
class Grid {
 public:
  Grid(int dim, int points);

  int dim() const { return dim_; }
  int points() const { return points_; }
  std::size_t size() const { return size_; }

  int wavenumber(int index) const { return index < points_ / 2 ? index : index - points_; }
  bool is_nyquist(int wavenumber) const { return wavenumber == -points_ / 2; }

  /// Wave vector of a flat index; unused trailing entries are 0.
  const WaveVector& wavevector(std::size_t flat) const { return (*wavevectors_)[flat]; }
  /// Flat index of a wave vector given in the range [-points/2, points/2).
  std::size_t index_of(const WaveVector& k) const;
  /// Flat index of -k (mod points).
  std::size_t conjugate_index(std::size_t flat) const;
  int radius_squared(std::size_t flat) const {
    const WaveVector& k = wavevector(flat);
    return k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
  }
  double radius(std::size_t flat) const;
  /// Largest |k| over the grid, attained at the all-Nyquist corner.
  double max_radius() const;

  /// Derivative wavenumber along `axis`: k_axis, or 0 on the Nyquist index.
  int derivative_wavenumber(std::size_t flat, int axis) const {
    const int k = wavevector(flat)[axis];
    return is_nyquist(k) ? 0 : k;
  }

  double cell_volume() const;
  double domain_volume() const;

  /// Unnormalized DFTs: forward uses e^{-ik·x}, backward e^{+ik·x}.
  void forward_fft(std::span<const Complex> in, std::span<Complex> out) const;
  void backward_fft(std::span<const Complex> in, std::span<Complex> out) const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  struct Plans;
  int dim_;
  int points_;
  std::size_t size_;
  std::shared_ptr<const Plans> plans_;
  std::shared_ptr<const std::vector<WaveVector>> wavevectors_;
};

}  // namespace lmhd
