#pragma once

#include <map>
#include <string>
#include <vector>

#include "lmhd/mhd.hpp"

namespace lmhd {

using InitialConditionParams = std::map<std::string, std::string>;

/// Builds a solenoidal, zero-mean, band-limited (u, b) at time 0.
///
///   orszag_tang_2d  u = A(-sin x₂, sin x₁), b = A(-sin x₂, sin 2x₁)       {amplitude}
///   taylor_green_2d u = A(sin x₁ cos x₂, -cos x₁ sin x₂),
///                   b = (A/2)(sin 2x₁ cos 2x₂, -cos 2x₁ sin 2x₂)          {amplitude}
///   random_band     Gaussian coefficients on 1 <= |k| <= band, projected and
///                   scaled to RMS `amplitude` per field                   {seed, band, amplitude}
///   single_mode     A e cos(k·x) with e ⟂ k, |e| = 1                       {k, amplitude, field=u|b|both}
///
/// Unknown names and invalid parameters throw ConfigError.
SolutionPair initial_condition(const std::string& name, const InitialConditionParams& params, const Grid& grid);

std::vector<std::string> initial_condition_names();

/// Hermitian-symmetric random scalar field with Gaussian coefficients on the
/// modes accepted by `keep` (called with the wave vector); deterministic in seed.
template <typename Keep>
SpectralField random_field(const Grid& grid, unsigned long seed, Keep keep);

}  // namespace lmhd

#include <random>

namespace lmhd {

template <typename Keep>
SpectralField random_field(const Grid& grid, unsigned long seed, Keep keep) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralField f(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::size_t j = grid.conjugate_index(i);
    if (j < i) continue;
    const WaveVector k = grid.wavevector(i);
    bool nyquist = false;
    for (int a = 0; a < grid.dim(); ++a) nyquist = nyquist || grid.is_nyquist(k[a]);
    const double re = normal(rng);
    const double im = normal(rng);
    if (nyquist || !keep(k)) continue;
    if (i == j) {
      f[i] = re;
    } else {
      f[i] = {re, im};
      f[j] = {re, -im};
    }
  }
  return f;
}

}  // namespace lmhd
