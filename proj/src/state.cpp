#include "esqkd/state.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace esqkd {

namespace {

long long product_of(const std::vector<int>& dims) {
  long long p = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("subsystem dimension must be >= 1");
    p *= d;
  }
  return p;
}

}  // namespace

PureState::PureState(std::vector<int> dims, Vec amps)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
  if (dims_.empty()) throw std::invalid_argument("PureState: no subsystems");
  if (product_of(dims_) != amps_.size())
    throw std::invalid_argument("PureState: amps length does not match dims");
  if (std::abs(amps_.squaredNorm() - 1.0) > 1e-12)
    throw std::invalid_argument("PureState: not normalized");
}

PureState PureState::basis(std::vector<int> dims, const std::vector<int>& digits) {
  if (digits.size() != dims.size())
    throw std::invalid_argument("basis: digit count does not match dims");
  long long idx = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (digits[s] < 0 || digits[s] >= dims[s])
      throw std::invalid_argument("basis: digit out of range");
    idx = idx * dims[s] + digits[s];
  }
  Vec amps = Vec::Zero(product_of(dims));
  amps[idx] = 1.0;
  return PureState(std::move(dims), std::move(amps));
}

int PureState::stride(int subsystem) const {
  if (subsystem < 0 || subsystem >= subsystems())
    throw std::invalid_argument("stride: subsystem out of range");
  int s = 1;
  for (int t = subsystems() - 1; t > subsystem; --t) s *= dims_[t];
  return s;
}

PureState bell_state(BellLabel label) {
  const auto& c = bell_amplitudes(label);
  Vec amps(4);
  for (int i = 0; i < 4; ++i) amps[i] = c[i];
  return PureState({2, 2}, std::move(amps));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  Vec amps(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a.amps()[i] * b.amps()[j];
  return PureState(std::move(dims), std::move(amps));
}

DensityMatrix::DensityMatrix(std::vector<int> dims, Mat entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw std::invalid_argument("DensityMatrix: not square");
  if (product_of(dims_) != entries_.rows())
    throw std::invalid_argument("DensityMatrix: size does not match dims");
  const double herm_err = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > 1e-10)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(entries_.trace().real() - 1.0) > 1e-10 ||
      std::abs(entries_.trace().imag()) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
}

void DensityMatrix::validate_spectrum() const {
  Eigen::SelfAdjointEigenSolver<Mat> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
}

DensityMatrix density(const PureState& s) {
  Mat m = s.amps() * s.amps().adjoint();
  return DensityMatrix(s.dims(), std::move(m));
}

namespace {

struct TraceLayout {
  std::vector<int> kept_dims;
  long long kept_dim = 1;
  long long traced_dim = 1;
  // full index = sum over subsystems of digit * stride; we enumerate kept and
  // traced composite indices and map both into the full index.
  std::vector<long long> kept_offset;    // kept composite -> contribution
  std::vector<long long> traced_offset;  // traced composite -> contribution
};

TraceLayout make_layout(const std::vector<int>& dims, const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  std::vector<bool> is_kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: bad subsystem index");
    if (is_kept[k]) throw std::invalid_argument("partial_trace: duplicate subsystem index");
    is_kept[k] = true;
  }
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");

  std::vector<long long> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  TraceLayout lay;
  std::vector<int> kept_subs, traced_subs;
  for (int s = 0; s < n; ++s) (is_kept[s] ? kept_subs : traced_subs).push_back(s);
  for (int s : kept_subs) {
    lay.kept_dims.push_back(dims[s]);
    lay.kept_dim *= dims[s];
  }
  for (int s : traced_subs) lay.traced_dim *= dims[s];

  lay.kept_offset.assign(lay.kept_dim, 0);
  for (long long idx = 0; idx < lay.kept_dim; ++idx) {
    long long rem = idx, off = 0;
    for (int pos = static_cast<int>(kept_subs.size()) - 1; pos >= 0; --pos) {
      const int s = kept_subs[pos];
      off += (rem % dims[s]) * stride[s];
      rem /= dims[s];
    }
    lay.kept_offset[idx] = off;
  }
  lay.traced_offset.assign(lay.traced_dim, 0);
  for (long long idx = 0; idx < lay.traced_dim; ++idx) {
    long long rem = idx, off = 0;
    for (int pos = static_cast<int>(traced_subs.size()) - 1; pos >= 0; --pos) {
      const int s = traced_subs[pos];
      off += (rem % dims[s]) * stride[s];
      rem /= dims[s];
    }
    lay.traced_offset[idx] = off;
  }
  return lay;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const TraceLayout lay = make_layout(rho.dims(), keep);
  Mat out = Mat::Zero(lay.kept_dim, lay.kept_dim);
  for (long long r = 0; r < lay.kept_dim; ++r)
    for (long long c = 0; c < lay.kept_dim; ++c) {
      Complex acc = 0.0;
      for (long long t = 0; t < lay.traced_dim; ++t)
        acc += rho.entries()(lay.kept_offset[r] + lay.traced_offset[t],
                              lay.kept_offset[c] + lay.traced_offset[t]);
      out(r, c) = acc;
    }
  return DensityMatrix(lay.kept_dims, std::move(out));
}

DensityMatrix partial_trace(const PureState& s, const std::vector<int>& keep) {
  const TraceLayout lay = make_layout(s.dims(), keep);
  // Matricize |s> as M(kept, traced); reduced state is M M^dagger.
  Mat m(lay.kept_dim, lay.traced_dim);
  for (long long r = 0; r < lay.kept_dim; ++r)
    for (long long t = 0; t < lay.traced_dim; ++t)
      m(r, t) = s.amps()[lay.kept_offset[r] + lay.traced_offset[t]];
  Mat out = m * m.adjoint();
  return DensityMatrix(lay.kept_dims, std::move(out));
}

double fidelity_sq(const PureState& xi, const DensityMatrix& rho) {
  if (xi.dim() != rho.dim())
    throw std::invalid_argument("fidelity_sq: dimension mismatch");
  const Complex val = xi.amps().dot(rho.entries() * xi.amps());
  return val.real();
}

double von_neumann_entropy(const DensityMatrix& rho, double* clamped_magnitude) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(rho.entries(), Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  double clamped = 0.0;
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()[i];
    if (lambda < -1e-10)
      throw std::invalid_argument("von_neumann_entropy: negative eigenvalue beyond tolerance");
    if (lambda <= 0.0) {
      clamped = std::max(clamped, -lambda);
      continue;
    }
    entropy -= lambda * std::log2(lambda);
  }
  if (clamped_magnitude) *clamped_magnitude = clamped;
  return std::max(entropy, 0.0);
}

void Ensemble::validate() const {
  if (items.empty()) throw std::invalid_argument("Ensemble: empty");
  double total = 0.0;
  const auto& dims0 = items.front().second.dims();
  for (const auto& [p, rho] : items) {
    if (p < 0.0) throw std::invalid_argument("Ensemble: negative probability");
    if (rho.dims() != dims0) throw std::invalid_argument("Ensemble: mixed dims");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::invalid_argument("Ensemble: probabilities do not sum to 1");
}

double holevo_quantity(const Ensemble& e) {
  e.validate();
  Mat avg = Mat::Zero(e.items.front().second.dim(), e.items.front().second.dim());
  double conditional = 0.0;
  for (const auto& [p, rho] : e.items) {
    avg += p * rho.entries();
    if (p > 0.0) conditional += p * von_neumann_entropy(rho);
  }
  const DensityMatrix mix(e.items.front().second.dims(), std::move(avg));
  return von_neumann_entropy(mix) - conditional;
}

}  // namespace esqkd
