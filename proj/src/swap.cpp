#include "esqkd/swap.hpp"

#include <stdexcept>

namespace esqkd {

JointTable swap_joint_table(BellLabel init1, BellLabel init2) {
  // Subsystem order of the composite is (1,2,3,4); Alice holds (1,3) =
  // subsystems (0,2), Bob holds (2,4) = subsystems (1,3).
  const PureState joint = tensor(bell_state(init1), bell_state(init2));
  JointTable table{};
  for (BellLabel x : kBellLabels) {
    // Unnormalized residual on Bob's particles (2,4) after Alice's outcome.
    const BellProjection after_alice = bell_project(joint, 0, 2, x);
    for (BellLabel y : kBellLabels) {
      Complex amp = 0.0;
      const auto& c = bell_amplitudes(y);
      for (int k = 0; k < 4; ++k) amp += std::conj(c[k]) * after_alice.amps[k];
      table[bell_index(x)][bell_index(y)] = std::norm(amp);
    }
  }
  return table;
}

BellLabel expected_partner(BellLabel init1, BellLabel init2, BellLabel alice) {
  // The exact tables are small and pure; cache all 16 on first use.
  static const auto partners = [] {
    std::array<std::array<std::array<BellLabel, 4>, 4>, 4> out{};
    for (BellLabel l1 : kBellLabels)
      for (BellLabel l2 : kBellLabels) {
        const JointTable t = swap_joint_table(l1, l2);
        for (BellLabel x : kBellLabels) {
          int hits = 0;
          for (BellLabel y : kBellLabels)
            if (t[bell_index(x)][bell_index(y)] > 1e-9) {
              out[bell_index(l1)][bell_index(l2)][bell_index(x)] = y;
              ++hits;
            }
          if (hits != 1)
            throw std::logic_error("expected_partner: conditional outcome not unique");
        }
      }
    return out;
  }();
  return partners[bell_index(init1)][bell_index(init2)][bell_index(alice)];
}

std::pair<SwapOutcome, PureState> entanglement_swap(const PureState& pair12,
                                                    const PureState& pair34,
                                                    Rng& rng) {
  if (pair12.dims() != std::vector<int>{2, 2} || pair34.dims() != std::vector<int>{2, 2})
    throw std::invalid_argument("entanglement_swap: inputs must be 2-qubit states");
  const PureState joint = tensor(pair12, pair34);
  auto [alice, after_alice] = bell_measure(joint, 0, 2, rng);
  auto [bob, final_state] = bell_measure(after_alice, 1, 3, rng);
  return {SwapOutcome{alice, bob}, std::move(final_state)};
}

SwapHistogram swap_histogram(BellLabel init1, BellLabel init2,
                             std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("swap_histogram: trials must be >= 1");
  const PureState p1 = bell_state(init1);
  const PureState p2 = bell_state(init2);
  Rng rng = Rng(seed).child("es-demo");
  SwapHistogram hist{};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto [outcome, rest] = entanglement_swap(p1, p2, rng);
    ++hist[bell_index(outcome.alice)][bell_index(outcome.bob)];
  }
  return hist;
}

}  // namespace esqkd
