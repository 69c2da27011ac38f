#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "esqkd/bell.hpp"

namespace esqkd {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Dense normalized state vector over an ordered list of subsystem
/// dimensions. Composite indexing is big-endian: subsystem 0 is the most
/// significant digit, so |a b c> sits at index a*(d1*d2) + b*d2 + c.
class PureState {
 public:
  /// Validates that amps.size() == prod(dims) and the squared norm is
  /// within 1e-12 of 1.
  PureState(std::vector<int> dims, Vec amps);

  /// Computational basis state with the given digit per subsystem.
  static PureState basis(std::vector<int> dims, const std::vector<int>& digits);

  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(amps_.size()); }
  int subsystems() const { return static_cast<int>(dims_.size()); }
  const Vec& amps() const { return amps_; }
  double norm_sq() const { return amps_.squaredNorm(); }

  /// Index stride of one subsystem under the big-endian convention.
  int stride(int subsystem) const;

 private:
  std::vector<int> dims_;
  Vec amps_;
};

/// Canonical two-qubit Bell state, dims = [2, 2].
PureState bell_state(BellLabel label);

/// Kronecker composition: dims concatenate, amp(i,j) = a[i] * b[j].
PureState tensor(const PureState& a, const PureState& b);

/// Dense density matrix over subsystem dimensions. Construction validates
/// Hermiticity (1e-10 entrywise) and unit trace (1e-10); eigenvalue
/// nonnegativity is enforced where the spectrum is actually computed.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<int> dims, Mat entries);

  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  const Mat& entries() const { return entries_; }

  /// Full invariant check including eigenvalues >= -1e-10.
  void validate_spectrum() const;

 private:
  std::vector<int> dims_;
  Mat entries_;
};

/// |s><s| as a density matrix.
DensityMatrix density(const PureState& s);

/// Reduced density matrix over the kept subsystems (original order
/// preserved). keep must be a nonempty subset of subsystem indices.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Reduced state of a pure state, computed without forming the full
/// density matrix.
DensityMatrix partial_trace(const PureState& s, const std::vector<int>& keep);

/// <xi| rho |xi>. Dimensions must match.
double fidelity_sq(const PureState& xi, const DensityMatrix& rho);

/// -sum lambda log2 lambda, with 0 log 0 := 0. Eigenvalues in [-1e-10, 0]
/// are clamped to zero; if clamped_magnitude is non-null it receives the
/// largest magnitude clamped. Negativity beyond 1e-10 throws.
double von_neumann_entropy(const DensityMatrix& rho, double* clamped_magnitude = nullptr);

/// Probability-weighted list of density matrices over identical dims.
struct Ensemble {
  std::vector<std::pair<double, DensityMatrix>> items;

  /// Throws unless probabilities are nonnegative, sum to 1 within 1e-10,
  /// and all member dims agree.
  void validate() const;
};

/// chi = S(sum p_i rho_i) - sum p_i S(rho_i), in bits.
double holevo_quantity(const Ensemble& e);

}  // namespace esqkd
