#include "esqkd/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace esqkd {

namespace {

void check_qubit_pair(const PureState& s, int i, int j) {
  const int n = s.subsystems();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::out_of_range("bell measurement: subsystem index out of range");
  if (i == j) throw std::invalid_argument("bell measurement: subsystems must differ");
  if (s.dims()[i] != 2 || s.dims()[j] != 2)
    throw std::invalid_argument("bell measurement: subsystems must be qubits");
}

}  // namespace

BellProjection bell_project(const PureState& s, int i, int j, BellLabel label) {
  check_qubit_pair(s, i, j);
  const auto& c = bell_amplitudes(label);
  const int si = s.stride(i);
  const int sj = s.stride(j);
  const int dim = s.dim();

  BellProjection out;
  for (int t = 0; t < s.subsystems(); ++t)
    if (t != i && t != j) out.remaining_dims.push_back(s.dims()[t]);
  if (out.remaining_dims.empty()) out.remaining_dims.push_back(1);
  out.amps = Vec::Zero(dim / 4);

  // Walk base indices (digits at i and j both zero) in increasing order;
  // their rank is exactly the compacted residual index.
  int r = 0;
  for (int idx = 0; idx < dim; ++idx) {
    if ((idx / si) % 2 != 0 || (idx / sj) % 2 != 0) continue;
    Complex acc = 0.0;
    for (int bi = 0; bi < 2; ++bi)
      for (int bj = 0; bj < 2; ++bj)
        acc += std::conj(c[2 * bi + bj]) * s.amps()[idx + bi * si + bj * sj];
    out.amps[r++] = acc;
  }
  return out;
}

std::array<double, 4> bell_probabilities(const PureState& s, int i, int j) {
  std::array<double, 4> p{};
  for (BellLabel l : kBellLabels)
    p[bell_index(l)] = bell_project(s, i, j, l).amps.squaredNorm();
  return p;
}

std::pair<BellLabel, PureState> bell_measure(const PureState& s, int i, int j, Rng& rng) {
  const auto probs = bell_probabilities(s, i, j);
  const std::size_t k = rng.pick({probs.begin(), probs.end()});
  const BellLabel outcome = bell_from_index(static_cast<int>(k));

  const BellProjection proj = bell_project(s, i, j, outcome);
  const double norm = std::sqrt(proj.amps.squaredNorm());
  const auto& c = bell_amplitudes(outcome);
  const int si = s.stride(i);
  const int sj = s.stride(j);

  // Rebuild the full vector: measured pair exactly in the outcome Bell
  // state, remaining subsystems in the renormalized residual.
  Vec amps = Vec::Zero(s.dim());
  int r = 0;
  for (int idx = 0; idx < s.dim(); ++idx) {
    if ((idx / si) % 2 != 0 || (idx / sj) % 2 != 0) continue;
    const Complex residual = proj.amps[r++] / norm;
    for (int bi = 0; bi < 2; ++bi)
      for (int bj = 0; bj < 2; ++bj)
        amps[idx + bi * si + bj * sj] = c[2 * bi + bj] * residual;
  }
  return {outcome, PureState(s.dims(), std::move(amps))};
}

}  // namespace esqkd
