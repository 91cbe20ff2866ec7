#include "lmhd/initial_conditions.hpp"

#include <cmath>

#include "lmhd/config.hpp"
#include "lmhd/errors.hpp"
#include "lmhd/spectral.hpp"

namespace lmhd {

namespace {

double real_param(const InitialConditionParams& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : parse_real("ic." + key, it->second);
}

void check_keys(const std::string& name, const InitialConditionParams& p, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : p) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError("initial condition " + name + " has no parameter '" + key + "'");
  }
}

// Field with coefficient `value` at k and its conjugate at -k.
void add_mode(SpectralField& f, const WaveVector& k, Complex value) {
  f.at(k) += value;
  WaveVector minus{-k[0], -k[1], -k[2]};
  f.at(minus) += std::conj(value);
}

// sin(k·x) = (e^{ik·x} - e^{-ik·x}) / 2i
void add_sin(SpectralField& f, const WaveVector& k, double amp) { add_mode(f, k, Complex{0.0, -0.5 * amp}); }
void add_cos(SpectralField& f, const WaveVector& k, double amp) { add_mode(f, k, Complex{0.5 * amp, 0.0}); }

// sin(a x₁) cos(b x₂) = ½[sin(a x₁ + b x₂) + sin(a x₁ - b x₂)], and similar.
void add_sin_cos(SpectralField& f, int a, int b, double amp) {
  add_sin(f, {a, b, 0}, 0.5 * amp);
  add_sin(f, {a, -b, 0}, 0.5 * amp);
}
void add_cos_sin(SpectralField& f, int a, int b, double amp) {
  add_sin(f, {a, b, 0}, 0.5 * amp);
  add_sin(f, {-a, b, 0}, 0.5 * amp);
}

SolutionPair orszag_tang(const InitialConditionParams& p, const Grid& grid) {
  check_keys("orszag_tang_2d", p, {"amplitude"});
  if (grid.dim() != 2) throw ConfigError("orszag_tang_2d needs grid.n = 2");
  const double amp = real_param(p, "amplitude", 1.0);
  SolutionPair s = zero_state(grid);
  add_sin(s.u[0], {0, 1, 0}, -amp);
  add_sin(s.u[1], {1, 0, 0}, amp);
  add_sin(s.b[0], {0, 1, 0}, -amp);
  add_sin(s.b[1], {2, 0, 0}, amp);
  return s;
}

SolutionPair taylor_green(const InitialConditionParams& p, const Grid& grid) {
  check_keys("taylor_green_2d", p, {"amplitude"});
  if (grid.dim() != 2) throw ConfigError("taylor_green_2d needs grid.n = 2");
  const double amp = real_param(p, "amplitude", 1.0);
  SolutionPair s = zero_state(grid);
  add_sin_cos(s.u[0], 1, 1, amp);
  add_cos_sin(s.u[1], 1, 1, -amp);
  add_sin_cos(s.b[0], 2, 2, 0.5 * amp);
  add_cos_sin(s.b[1], 2, 2, -0.5 * amp);
  return s;
}

VectorField random_solenoidal(const Grid& grid, unsigned long seed, double band, double amplitude) {
  const int kmax = max_retained_wavenumber(grid);
  auto keep = [&](const WaveVector& k) {
    const double r2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    for (int a = 0; a < grid.dim(); ++a) {
      if (std::abs(k[a]) > kmax) return false;
    }
    return r2 >= 1.0 && r2 <= band * band;
  };
  std::vector<SpectralField> comps;
  for (int a = 0; a < grid.dim(); ++a) comps.push_back(random_field(grid, seed * 7919UL + static_cast<unsigned long>(a), keep));
  VectorField v = leray_project(VectorField(std::move(comps)));
  const double rms = l2_norm(v) / std::sqrt(grid.domain_volume());
  if (rms > 0.0) v *= amplitude / rms;
  return v;
}

SolutionPair random_band(const InitialConditionParams& p, const Grid& grid) {
  check_keys("random_band", p, {"seed", "band", "amplitude"});
  const double seed = real_param(p, "seed", 1.0);
  const double band = real_param(p, "band", 4.0);
  const double amp = real_param(p, "amplitude", 1.0);
  if (seed < 0 || seed != std::floor(seed)) throw ConfigError("ic.seed must be a non-negative integer");
  if (band < 1.0) throw ConfigError("ic.band must be >= 1");
  const auto s = static_cast<unsigned long>(seed);
  return {random_solenoidal(grid, 2 * s, band, amp), random_solenoidal(grid, 2 * s + 1, band, amp), 0.0};
}

SolutionPair single_mode(const InitialConditionParams& p, const Grid& grid) {
  check_keys("single_mode", p, {"k", "amplitude", "field"});
  const double amp = real_param(p, "amplitude", 1.0);
  const auto k_list = p.count("k") ? parse_real_list("ic.k", p.at("k")) : std::vector<double>{1.0, 0.0, 0.0};
  WaveVector k{0, 0, 0};
  for (std::size_t a = 0; a < k_list.size(); ++a) {
    if (a >= static_cast<std::size_t>(grid.dim()) && k_list[a] != 0.0) throw ConfigError("ic.k has too many components");
    if (a < 3) k[a] = static_cast<int>(k_list[a]);
  }
  const int kmax = max_retained_wavenumber(grid);
  double k2 = 0.0;
  for (int a = 0; a < grid.dim(); ++a) {
    if (std::abs(k[a]) > kmax) throw ConfigError("ic.k lies outside the dealiased band");
    k2 += k[a] * k[a];
  }
  if (k2 == 0.0) throw ConfigError("ic.k must be nonzero");

  // Unit vector orthogonal to k.
  std::array<double, 3> e{0, 0, 0};
  if (grid.dim() == 2) {
    e = {-double(k[1]), double(k[0]), 0.0};
  } else {
    int axis = 0;
    for (int a = 1; a < 3; ++a) {
      if (std::abs(k[a]) < std::abs(k[axis])) axis = a;
    }
    std::array<double, 3> ref{0, 0, 0};
    ref[axis] = 1.0;
    e = {k[1] * ref[2] - k[2] * ref[1], k[2] * ref[0] - k[0] * ref[2], k[0] * ref[1] - k[1] * ref[0]};
  }
  const double norm = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);

  const std::string field = p.count("field") ? p.at("field") : "u";
  if (field != "u" && field != "b" && field != "both") throw ConfigError("ic.field must be u, b or both");
  SolutionPair s = zero_state(grid);
  for (int a = 0; a < grid.dim(); ++a) {
    const double c = amp * e[static_cast<std::size_t>(a)] / norm;
    if (c == 0.0) continue;
    if (field != "b") add_cos(s.u[a], k, c);
    if (field != "u") add_cos(s.b[a], k, c);
  }
  return s;
}

}  // namespace

std::vector<std::string> initial_condition_names() {
  return {"orszag_tang_2d", "taylor_green_2d", "random_band", "single_mode"};
}

SolutionPair initial_condition(const std::string& name, const InitialConditionParams& params, const Grid& grid) {
  if (name == "orszag_tang_2d") return orszag_tang(params, grid);
  if (name == "taylor_green_2d") return taylor_green(params, grid);
  if (name == "random_band") return random_band(params, grid);
  if (name == "single_mode") return single_mode(params, grid);
  throw ConfigError("unknown initial condition '" + name + "'");
}

}  // namespace lmhd
