#pragma once

#include <array>
#include <utility>

#include "esqkd/rng.hpp"
#include "esqkd/state.hpp"

namespace esqkd {

/// Unnormalized residual of projecting onto Bell state `label` at qubit
/// subsystems (i, j): amplitudes over the remaining subsystems in their
/// original order. dims(i) and dims(j) must be 2 and i != j.
struct BellProjection {
  std::vector<int> remaining_dims;
  Vec amps;  // squared norm = outcome probability
};
BellProjection bell_project(const PureState& s, int i, int j, BellLabel label);

/// Born probabilities of the four Bell outcomes on subsystems (i, j).
/// Entries sum to 1 within 1e-12.
std::array<double, 4> bell_probabilities(const PureState& s, int i, int j);

/// Sample a Bell measurement on (i, j) using rng and collapse. The returned
/// state has the same dims; the measured pair's marginal equals the outcome
/// Bell state exactly. Zero-probability outcomes are never sampled.
std::pair<BellLabel, PureState> bell_measure(const PureState& s, int i, int j, Rng& rng);

}  // namespace esqkd
