#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "esqkd/measure.hpp"
#include "esqkd/rng.hpp"
#include "esqkd/state.hpp"

namespace esqkd {

/// Outcome pair of one entanglement-swapping round.
struct SwapOutcome {
  BellLabel alice;
  BellLabel bob;
};

using JointTable = std::array<std::array<double, 4>, 4>;

/// Exact joint outcome probabilities P(alice = X, bob = Y) for Bell
/// measurements on particles (1,3) and (2,4) of two pairs prepared in the
/// given Bell states. Computed by expansion, never hard-coded; for every
/// input pair the table has exactly four 1/4 cells forming a permutation.
JointTable swap_joint_table(BellLabel init1, BellLabel init2);

/// The unique Bob label with nonzero probability given Alice's outcome,
/// derived from swap_joint_table.
BellLabel expected_partner(BellLabel init1, BellLabel init2, BellLabel alice);

/// Compose two 2-qubit pairs (particles 1-2 and 3-4), Bell-measure (1,3)
/// as Alice then (2,4) as Bob. Returns both labels and the post-measurement
/// product state.
std::pair<SwapOutcome, PureState> entanglement_swap(const PureState& pair12,
                                                    const PureState& pair34,
                                                    Rng& rng);

using SwapHistogram = std::array<std::array<std::uint64_t, 4>, 4>;

/// Monte Carlo histogram of (alice, bob) outcomes over seeded trials.
/// trials must be >= 1.
SwapHistogram swap_histogram(BellLabel init1, BellLabel init2,
                             std::uint64_t trials, std::uint64_t seed);

}  // namespace esqkd
