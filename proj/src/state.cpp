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

#include "qlga/state.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qlga {

namespace {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void check_site(std::size_t site, LatticeSize size) {
  if (site >= size.sites()) {
    throw std::out_of_range("site " + std::to_string(site) +
                            " outside lattice of size " +
                            std::to_string(size.sites()));
  }
}

}  // namespace

ScatterAngle::ScatterAngle(double radians) : radians_(radians) {
  if (!std::isfinite(radians_)) {
    throw std::invalid_argument("scatter angle must be finite");
  }
}

double ScatterAngle::canonical() const {
  const double tau = 2.0 * std::numbers::pi;
  double r = std::fmod(radians_, tau);
  if (r < 0.0) r += tau;
  return r;
}

std::array<std::complex<double>, 4> scatter_matrix(ScatterAngle s) {
  const double c = std::cos(s.radians());
  const std::complex<double> is(0.0, std::sin(s.radians()));
  return {c, is, is, c};
}

InitialState InitialState::delta(std::size_t site, Velocity velocity) {
  InitialState init;
  init.kind = Kind::delta;
  init.site = site;
  init.velocity = velocity;
  return init;
}

InitialState InitialState::symmetric(std::size_t site) {
  InitialState init;
  init.kind = Kind::symmetric;
  init.site = site;
  return init;
}

InitialState InitialState::gaussian(std::size_t site, double width,
                                    double momentum) {
  InitialState init;
  init.kind = Kind::gaussian;
  init.site = site;
  init.width = width;
  init.momentum = momentum;
  return init;
}

std::string InitialState::describe() const {
  switch (kind) {
    case Kind::delta:
      return "delta(" + std::to_string(site) + "," +
             (velocity == Velocity::right ? "+1" : "-1") + ")";
    case Kind::symmetric:
      return "symmetric(" + std::to_string(site) + ")";
    case Kind::gaussian:
      return "gaussian(" + std::to_string(site) + "," + format_real(width) +
             "," + format_real(momentum) + ")";
  }
  throw std::logic_error("unreachable initial-state kind");
}

QlgaState::QlgaState(LatticeSize size,
                     std::vector<std::complex<double>> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != 2 * size.sites()) {
    throw std::invalid_argument(
        "amplitude vector length " + std::to_string(amplitudes_.size()) +
        " does not match lattice size " + std::to_string(size.sites()));
  }
  if (std::abs(norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state norm " + std::to_string(norm()) +
                                " is not 1");
  }
}

double QlgaState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

void QlgaState::apply_advection() {
  const std::size_t n = sites();
  // Left movers: new[x] = old[x + 1], wrap the first element to the end.
  const std::complex<double> first = amplitudes_[0];
  for (std::size_t x = 0; x + 1 < n; ++x) {
    amplitudes_[2 * x] = amplitudes_[2 * (x + 1)];
  }
  amplitudes_[2 * (n - 1)] = first;
  // Right movers: new[x] = old[x - 1], wrap the last element to the front.
  const std::complex<double> last = amplitudes_[2 * (n - 1) + 1];
  for (std::size_t x = n - 1; x > 0; --x) {
    amplitudes_[2 * x + 1] = amplitudes_[2 * (x - 1) + 1];
  }
  amplitudes_[1] = last;
}

void QlgaState::apply_scatter(ScatterAngle s) {
  const auto m = scatter_matrix(s);
  const std::size_t n = sites();
  for (std::size_t x = 0; x < n; ++x) {
    const std::complex<double> l = amplitudes_[2 * x];
    const std::complex<double> r = amplitudes_[2 * x + 1];
    amplitudes_[2 * x] = m[0] * l + m[1] * r;
    amplitudes_[2 * x + 1] = m[2] * l + m[3] * r;
  }
}

void QlgaState::apply_step(ScatterAngle s) {
  apply_advection();
  apply_scatter(s);
}

QlgaState make_initial(LatticeSize size, const InitialState& initial) {
  check_site(initial.site, size);
  const std::size_t n = size.sites();
  std::vector<std::complex<double>> amp(2 * n, 0.0);
  switch (initial.kind) {
    case InitialState::Kind::delta:
      amp[2 * initial.site + velocity_index(initial.velocity)] = 1.0;
      break;
    case InitialState::Kind::symmetric: {
      const double r = 1.0 / std::sqrt(2.0);
      amp[2 * initial.site] = r;
      amp[2 * initial.site + 1] = r;
      break;
    }
    case InitialState::Kind::gaussian: {
      if (!(initial.width > 0.0)) {
        throw std::invalid_argument("gaussian width must be positive");
      }
      double mass = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t raw =
            x >= initial.site ? x - initial.site : initial.site - x;
        const double d = double(std::min(raw, n - raw));
        const double envelope =
            std::exp(-d * d / (4.0 * initial.width * initial.width));
        const std::complex<double> phase =
            std::polar(1.0, initial.momentum * double(x));
        amp[2 * x] = envelope * phase;
        amp[2 * x + 1] = envelope * phase;
        mass += 2.0 * envelope * envelope;
      }
      const double scale = 1.0 / std::sqrt(mass);
      for (auto& a : amp) a *= scale;
      break;
    }
  }
  return QlgaState(size, std::move(amp));
}

QlgaState advect(QlgaState state) {
  state.apply_advection();
  return state;
}

QlgaState scatter(QlgaState state, ScatterAngle s) {
  state.apply_scatter(s);
  return state;
}

QlgaState step(QlgaState state, ScatterAngle s) {
  state.apply_step(s);
  return state;
}

QlgaState evolve(QlgaState state, ScatterAngle s, std::size_t steps) {
  for (std::size_t t = 0; t < steps; ++t) state.apply_step(s);
  return state;
}

Distribution position_distribution(const QlgaState& state) {
  const std::size_t n = state.sites();
  std::vector<double> p(n);
  const auto amp = state.amplitudes();
  for (std::size_t x = 0; x < n; ++x) {
    p[x] = std::norm(amp[2 * x]) + std::norm(amp[2 * x + 1]);
  }
  return Distribution(LatticeSize(n), std::move(p));
}

DenseUnitary dense_unitary(LatticeSize size, ScatterAngle s) {
  const std::size_t n = size.sites();
  const std::size_t d = 2 * n;
  const auto m = scatter_matrix(s);
  std::vector<std::complex<double>> u(d * d, 0.0);
  // Column 2x+a: advection sends the basis state to site y = x + sign(a),
  // where scattering then distributes it over the two velocities.
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t yl = (x + n - 1) % n;
    u[(2 * yl + 0) * d + (2 * x + 0)] = m[0];
    u[(2 * yl + 1) * d + (2 * x + 0)] = m[2];
    const std::size_t yr = (x + 1) % n;
    u[(2 * yr + 0) * d + (2 * x + 1)] = m[1];
    u[(2 * yr + 1) * d + (2 * x + 1)] = m[3];
  }
  return DenseUnitary(d, std::move(u));
}

}  // namespace qlga
