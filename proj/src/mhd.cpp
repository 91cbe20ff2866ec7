#include "lmhd/mhd.hpp"

#include <cmath>

#include "lmhd/errors.hpp"
#include "lmhd/spectral.hpp"

namespace lmhd {

SolutionPair zero_state(const Grid& grid) { return {VectorField(grid), VectorField(grid), 0.0}; }

void SystemParams::validate() const {
  diss_u.validate();
  diss_b.validate();
}

bool SystemParams::theorem_regime(int dim) const {
  return diss_u.coefficient > 0.0 && diss_b.coefficient == 0.0 && diss_u.exponent >= 1.0 + dim / 2.0;
}

namespace {

using Samples = std::vector<double>;

// Two real fields per complex transform: the inverse of â + i b̂ is a + i b.
std::vector<Samples> to_physical_packed(const std::vector<const SpectralField*>& fields) {
  const Grid& grid = fields.front()->grid();
  std::vector<Samples> out(fields.size(), Samples(grid.size()));
  std::vector<Complex> in(grid.size());
  std::vector<Complex> x(grid.size());
  for (std::size_t f = 0; f < fields.size(); f += 2) {
    const auto& a = *fields[f];
    if (f + 1 < fields.size()) {
      const auto& b = *fields[f + 1];
      for (std::size_t i = 0; i < grid.size(); ++i) in[i] = a[i] + Complex{-b[i].imag(), b[i].real()};
    } else {
      for (std::size_t i = 0; i < grid.size(); ++i) in[i] = a[i];
    }
    grid.backward_fft(in, x);
    for (std::size_t i = 0; i < grid.size(); ++i) out[f][i] = x[i].real();
    if (f + 1 < fields.size()) {
      for (std::size_t i = 0; i < grid.size(); ++i) out[f + 1][i] = x[i].imag();
    }
  }
  return out;
}

// Forward transforms of real samples, two per complex transform, truncated by
// the 2/3 rule and stripped of the mean.
std::vector<SpectralField> to_spectral_packed(const Grid& grid, const std::vector<Samples>& samples) {
  std::vector<SpectralField> out;
  std::vector<Complex> in(grid.size());
  std::vector<Complex> z(grid.size());
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (std::size_t f = 0; f < samples.size(); f += 2) {
    const bool pair = f + 1 < samples.size();
    for (std::size_t i = 0; i < grid.size(); ++i) in[i] = {samples[f][i], pair ? samples[f + 1][i] : 0.0};
    grid.forward_fft(in, z);
    SpectralField p(grid);
    SpectralField q(grid);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (!is_retained(grid, i)) continue;
      const Complex zc = std::conj(z[grid.conjugate_index(i)]);
      p[i] = 0.5 * scale * (z[i] + zc);
      q[i] = Complex{0.0, -0.5 * scale} * (z[i] - zc);
    }
    out.push_back(std::move(p));
    if (pair) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

Tendency nonlinear_tendency(const SolutionPair& state) {
  const Grid& grid = state.grid();
  detail::require(state.b.grid() == grid, "u and b must share one grid");
  const int dim = grid.dim();
  // Layout: u_0..u_{d-1}, b_0..b_{d-1}, ∂_j u_i at 2d + i d + j, ∂_j b_i after those.
  std::vector<SpectralField> derivs;
  for (const auto* v : {&state.u, &state.b}) {
    for (const auto& c : *v) {
      for (int j = 0; j < dim; ++j) derivs.push_back(partial(c, j));
    }
  }
  std::vector<const SpectralField*> inputs;
  for (const auto& c : state.u) inputs.push_back(&c);
  for (const auto& c : state.b) inputs.push_back(&c);
  for (const auto& d : derivs) inputs.push_back(&d);
  const auto phys = to_physical_packed(inputs);
  auto u = [&](int i) -> const Samples& { return phys[static_cast<std::size_t>(i)]; };
  auto b = [&](int i) -> const Samples& { return phys[static_cast<std::size_t>(dim + i)]; };
  auto grad_u = [&](int i, int j) -> const Samples& { return phys[static_cast<std::size_t>(2 * dim + i * dim + j)]; };
  auto grad_b = [&](int i, int j) -> const Samples& {
    return phys[static_cast<std::size_t>(2 * dim + dim * dim + i * dim + j)];
  };

  std::vector<Samples> du(dim, Samples(grid.size(), 0.0));
  std::vector<Samples> db(dim, Samples(grid.size(), 0.0));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const auto& uj = u(j);
      const auto& bj = b(j);
      const auto& dj_ui = grad_u(i, j);
      const auto& dj_bi = grad_b(i, j);
      for (std::size_t x = 0; x < grid.size(); ++x) {
        du[i][x] += bj[x] * dj_bi[x] - uj[x] * dj_ui[x];
        db[i][x] += bj[x] * dj_ui[x] - uj[x] * dj_bi[x];
      }
    }
  }
  std::vector<Samples> products = std::move(du);
  for (auto& p : db) products.push_back(std::move(p));
  auto spectral = to_spectral_packed(grid, products);
  std::vector<SpectralField> du_hat(spectral.begin(), spectral.begin() + dim);
  std::vector<SpectralField> db_hat(spectral.begin() + dim, spectral.end());
  return {leray_project(VectorField(std::move(du_hat))), leray_project(VectorField(std::move(db_hat)))};
}

Tendency full_tendency(const SolutionPair& state, const SystemParams& params) {
  Tendency t = params.nonlinear ? nonlinear_tendency(state) : Tendency{VectorField(state.grid()), VectorField(state.grid())};
  t.du -= apply_dissipation(state.u, params.diss_u);
  t.db -= apply_dissipation(state.b, params.diss_b);
  return t;
}

EnergyFlux energy_flux_identity(const SolutionPair& state, const SystemParams& params) {
  const Tendency nl = nonlinear_tendency(state);
  EnergyFlux flux;
  flux.nonlinear_rate = inner_product(nl.du, state.u) + inner_product(nl.db, state.b);
  const double lu = l2_norm(apply_L(state.u, params.diss_u));
  const double lb = l2_norm(apply_L(state.b, params.diss_b));
  flux.dissipation_rate = params.diss_u.coefficient * lu * lu + params.diss_b.coefficient * lb * lb;
  return flux;
}

}  // namespace lmhd
