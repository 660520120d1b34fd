// Copyright 2026 The qlga developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlga/mixing.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace qlga {

namespace {

constexpr std::size_t kDenseSearchLimit = 1000;

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1], got " +
                                std::to_string(epsilon));
  }
}

/// Compensated add, so accumulated distribution mass stays exact to
/// rounding even over millions of terms.
inline void kahan_add(double value, double& sum, double& comp) {
  const double y = value - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

/**
 * Forward-only Cesaro accumulator: holds the system state at time T-1 and
 * the sum of the first T instantaneous distributions. Copies are cheap
 * (two or three vectors), which is what the bisection refinement leans on.
 */
template <typename System>
class CesaroCursor {
 public:
  explicit CesaroCursor(System system)
      : system_(std::move(system)), acc_(system_.dimension(), 0.0) {
    system_.add_current(acc_);
    horizon_ = 1;
  }

  std::size_t horizon() const { return horizon_; }

  void advance_to(std::size_t horizon) {
    while (horizon_ < horizon) {
      system_.step();
      system_.add_current(acc_);
      ++horizon_;
    }
  }

  double tv_to_uniform() const {
    const double target = 1.0 / double(acc_.size());
    double sum = 0.0;
    for (double a : acc_) sum += std::abs(a / double(horizon_) - target);
    return 0.5 * sum;
  }

 private:
  System system_;
  std::vector<double> acc_;
  std::size_t horizon_ = 0;
};

struct QuantumSystem {
  QlgaState state;
  ScatterAngle s;

  std::size_t dimension() const { return state.sites(); }
  void step() { state.apply_step(s); }
  void add_current(std::vector<double>& acc) const {
    const auto amp = state.amplitudes();
    for (std::size_t x = 0; x < acc.size(); ++x) {
      acc[x] += std::norm(amp[2 * x]) + std::norm(amp[2 * x + 1]);
    }
  }
};

struct ClassicalSystem {
  std::vector<double> p;

  std::size_t dimension() const { return p.size(); }
  void step() {
    const std::size_t n = p.size();
    std::vector<double> next(n);
    for (std::size_t x = 0; x < n; ++x) {
      next[x] = 0.5 * p[(x + n - 1) % n] + 0.5 * p[(x + 1) % n];
    }
    p = std::move(next);
  }
  void add_current(std::vector<double>& acc) const {
    for (std::size_t x = 0; x < acc.size(); ++x) acc[x] += p[x];
  }
};

/**
 * Walks the search grid with a trailing cursor at the last failing point.
 * When a grid point passes beyond the dense region, bisects between the
 * two cursors; the trailing cursor only ever moves forward, so total work
 * stays linear in the horizon actually reached.
 */
template <typename System>
std::optional<std::size_t> search_mixing_time(System system, double epsilon,
                                              std::size_t max_horizon) {
  CesaroCursor<System> lo(std::move(system));
  if (lo.tv_to_uniform() <= epsilon) return 1;

  for (std::size_t grid_point : mixing_search_grid(max_horizon)) {
    if (grid_point <= lo.horizon()) continue;
    CesaroCursor<System> hi = lo;
    hi.advance_to(grid_point);
    if (hi.tv_to_uniform() > epsilon) {
      lo = std::move(hi);
      continue;
    }
    // Found a passing point; refine down to the boundary above lo.
    std::size_t lo_t = lo.horizon();
    std::size_t hi_t = grid_point;
    while (hi_t - lo_t > 1) {
      const std::size_t mid = lo_t + (hi_t - lo_t) / 2;
      CesaroCursor<System> probe = lo;
      probe.advance_to(mid);
      if (probe.tv_to_uniform() <= epsilon) {
        hi_t = mid;
      } else {
        lo_t = mid;
        lo = std::move(probe);
      }
    }
    return hi_t;
  }
  return std::nullopt;
}

std::string quantum_tag(ScatterAngle s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "quantum(s=%.12g)", s.radians());
  return buf;
}

}  // namespace

Distribution time_averaged_distribution(const QlgaState& initial,
                                        ScatterAngle s, std::size_t horizon) {
  if (horizon == 0) {
    throw std::invalid_argument("time-average horizon must be at least 1");
  }
  const std::size_t n = initial.sites();
  std::vector<double> acc(n, 0.0);
  std::vector<double> comp(n, 0.0);
  QlgaState state = initial;
  for (std::size_t t = 0;; ++t) {
    const auto amp = state.amplitudes();
    for (std::size_t x = 0; x < n; ++x) {
      kahan_add(std::norm(amp[2 * x]) + std::norm(amp[2 * x + 1]), acc[x],
                comp[x]);
    }
    if (t + 1 == horizon) break;
    state.apply_step(s);
  }
  for (double& p : acc) p /= double(horizon);
  return Distribution(LatticeSize(n), std::move(acc));
}

std::vector<std::size_t> mixing_search_grid(std::size_t max_horizon) {
  if (max_horizon == 0) {
    throw std::invalid_argument("search horizon must be at least 1");
  }
  std::vector<std::size_t> grid;
  for (std::size_t t = 1; t <= std::min(max_horizon, kDenseSearchLimit); ++t) {
    grid.push_back(t);
  }
  std::size_t t = kDenseSearchLimit;
  while (t < max_horizon) {
    t = std::min(max_horizon, t + std::max<std::size_t>(1, t / 10));
    grid.push_back(t);
  }
  return grid;
}

std::size_t default_max_horizon(LatticeSize size) {
  return 50 * size.sites() * size.sites();
}

MixingReport quantum_mixing_time(LatticeSize size, ScatterAngle s,
                                 const InitialState& initial, double epsilon,
                                 std::size_t max_horizon) {
  return quantum_mixing_time(make_initial(size, initial), s, epsilon,
                             max_horizon);
}

MixingReport quantum_mixing_time(const QlgaState& initial, ScatterAngle s,
                                 double epsilon, std::size_t max_horizon) {
  check_epsilon(epsilon);
  if (max_horizon == 0) {
    throw std::invalid_argument("max horizon must be at least 1");
  }
  MixingReport report;
  report.sites = initial.sites();
  report.epsilon = epsilon;
  report.max_horizon = max_horizon;
  report.system = quantum_tag(s);
  report.mixing_time =
      search_mixing_time(QuantumSystem{initial, s}, epsilon, max_horizon);
  return report;
}

MixingReport classical_mixing_time(LatticeSize size, std::size_t start,
                                   double epsilon, std::size_t max_horizon) {
  if (start >= size.sites()) {
    throw std::out_of_range("start site " + std::to_string(start) +
                            " outside lattice of size " +
                            std::to_string(size.sites()));
  }
  return classical_mixing_time(MarkovDist::delta(size, start), epsilon,
                               max_horizon);
}

MixingReport classical_mixing_time(const MarkovDist& initial, double epsilon,
                                   std::size_t max_horizon) {
  check_epsilon(epsilon);
  if (max_horizon == 0) {
    throw std::invalid_argument("max horizon must be at least 1");
  }
  MixingReport report;
  report.sites = initial.sites();
  report.epsilon = epsilon;
  report.max_horizon = max_horizon;
  report.system = "classical";
  report.mixing_time = search_mixing_time(
      ClassicalSystem{{initial.probabilities().begin(),
                       initial.probabilities().end()}},
      epsilon, max_horizon);
  return report;
}

ScalingFit scaling_fit(std::vector<std::pair<double, double>> points) {
  if (points.size() < 3) {
    throw std::invalid_argument("scaling fit needs at least 3 points, got " +
                                std::to_string(points.size()));
  }
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::invalid_argument("scaling fit points must be positive");
    }
  }
  const std::size_t m = points.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += std::log(x);
    mean_y += std::log(y);
  }
  mean_x /= double(m);
  mean_y /= double(m);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mean_x;
    const double dy = std::log(y) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("scaling fit needs distinct abscissae");
  }
  ScalingFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  const double ss_res = syy - fit.slope * sxy;
  fit.r2 = syy > 0.0 ? std::max(0.0, 1.0 - ss_res / syy) : 1.0;
  fit.points = std::move(points);
  return fit;
}

}  // namespace qlga
