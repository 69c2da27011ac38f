#pragma once

#include <array>
#include <string>

#include "esqkd/rng.hpp"
#include "esqkd/state.hpp"
#include "esqkd/swap.hpp"

namespace esqkd {

/// One-pair ancilla attack in Schmidt form across the (pair):(ancilla) cut:
/// the attacked pair-plus-ancilla state is
///   sum_k schmidt[k] |psi_k>_AB |e_k>_E
/// with |e_k> the canonical basis of a 4-dimensional ancilla and |psi_k>
/// the two-qubit states whose computational-basis coefficients form the
/// rows of `states`.
struct AncillaAttack {
  std::array<double, 4> schmidt{};  // nonnegative, sum of squares = 1
  Eigen::Matrix4cd states;          // row k = coefficients of |psi_k> over |00>,|01>,|10>,|11>

  /// Throws std::invalid_argument on any invariant violation:
  /// sum schmidt^2 = 1 (1e-12), schmidt >= 0, rows orthonormal (1e-10).
  void validate() const;
};

/// The four coupling vectors v_l[k] = schmidt[k] * states(k, l): the
/// ancilla-space coefficients attached to each computational pair basis
/// state. sum_l |v_l|^2 = 1 for a valid attack.
struct CouplingVectors {
  std::array<Eigen::Vector4cd, 4> v;
};

/// The attacked pair-plus-ancilla pure state, dims (2, 2, 4), subsystem
/// order (A, B, E).
PureState attack_state(const AncillaAttack& att);

/// Build an attack from a physical channel unitary U acting on Bob's
/// transmitted qubit joined with Eve's fresh k-dimensional probe (started
/// in |0>), k = U.rows()/2 <= 4. The result is the Schmidt canonical form
/// of U applied to half of a Phi+ pair; it reproduces the same physical
/// state up to a local change of Eve's basis (equal reduced pair state).
AncillaAttack from_channel_unitary(const Mat& channel_unitary);

CouplingVectors coupling_vectors(const AncillaAttack& att);

/// P(Alice gets X, Bob gets Y) when both parties run entanglement swapping
/// across two independently attacked pairs: brute-force tensor route over
/// the 256-dimensional two-pair state.
JointTable joint_outcome_table(const AncillaAttack& att);

/// Same table from the coupling-vector closed forms (the sixteen
/// quartic sums in the v_l), with no tensor algebra. Second route for
/// cross-validation against joint_outcome_table.
JointTable joint_outcome_table_vform(const AncillaAttack& att);

/// Total probability of the twelve outcome pairs that an undisturbed
/// channel can never produce (Bob's label != Alice's label).
double forbidden_mass(const AncillaAttack& att);

/// Average probability that Bob's conditional pair state fails the
/// correlation check: sum over Alice's outcome X of
/// p(X) * (1 - <xi_X| rho_X |xi_X>), rho_X Bob's pair state with the
/// ancillas traced out and xi_X the correlated Bell state.
double disturbance_d(const AncillaAttack& att);

/// Holevo bound on Eve's information about Bob's key symbol, in bits:
/// chi of the ensemble {p(Y), rho_E|Y} of Eve's two-ancilla conditional
/// states. In [0, 2].
double eve_holevo(const AncillaAttack& att);

/// No-op attack: pair left in Phi+, ancilla uncoupled.
AncillaAttack trivial_attack();

/// Intercept-and-resend in coherent form: Eve swaps the transmitted qubit
/// with half of her own Phi+ pair; her 4-dim ancilla holds (captured
/// qubit, retained half). Schmidt spectrum (1/2, 1/2, 1/2, 1/2).
AncillaAttack intercept_resend_attack();

/// Rank-one attack leaving the pair exactly in the given Bell state,
/// uncoupled from the ancilla; unused basis rows are completed at random.
/// PsiPlus/PsiMinus span one zero-error family, PhiPlus/PhiMinus the other.
AncillaAttack product_attack(BellLabel pair_state, Rng& rng);

/// Haar-distributed n x n unitary (QR of a complex Ginibre sample).
Mat haar_unitary(int n, Rng& rng);

/// Generic random attack: from_channel_unitary of a Haar-random 8x8
/// channel unitary, so the sampled attacks are exactly the physically
/// reachable ones (reduced state of Alice's untouched qubit stays I/2).
AncillaAttack random_attack(Rng& rng);

/// Attack parameter file: JSON object {"a": [4 reals], "b": 4x4 array of
/// [re, im] pairs, row-major}. Validated against the invariants on load.
AncillaAttack load_attack_file(const std::string& path);
void save_attack_file(const AncillaAttack& att, const std::string& path);

}  // namespace esqkd
