#include "qsim/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qsim {

int product_dim(const std::vector<int>& dims) {
  int d = 1;
  for (int k : dims) {
    if (k < 2) throw std::invalid_argument("every site needs at least 2 levels");
    d *= k;
  }
  return d;
}

int levels_to_index(const std::vector<int>& levels, const std::vector<int>& dims) {
  if (levels.size() != dims.size())
    throw std::invalid_argument("levels/dims size mismatch");
  int idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (levels[k] < 0 || levels[k] >= dims[k])
      throw std::invalid_argument("level out of range for site");
    idx = idx * dims[k] + levels[k];
  }
  return idx;
}

std::vector<int> index_to_levels(int index, const std::vector<int>& dims) {
  std::vector<int> levels(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    levels[k] = index % dims[k];
    index /= dims[k];
  }
  return levels;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

QuantumState QuantumState::raw_pure(std::vector<int> dims, Vector amplitudes) {
  QuantumState s;
  s.dims_ = std::move(dims);
  s.total_dim_ = product_dim(s.dims_);
  if (amplitudes.size() != s.total_dim_)
    throw std::invalid_argument("amplitude vector length does not match dims");
  s.pure_ = true;
  s.psi_ = std::move(amplitudes);
  return s;
}

QuantumState QuantumState::raw_mixed(std::vector<int> dims, Matrix rho) {
  QuantumState s;
  s.dims_ = std::move(dims);
  s.total_dim_ = product_dim(s.dims_);
  if (rho.rows() != s.total_dim_ || rho.cols() != s.total_dim_)
    throw std::invalid_argument("density matrix shape does not match dims");
  s.pure_ = false;
  s.rho_ = std::move(rho);
  return s;
}

QuantumState QuantumState::pure(std::vector<int> dims, Vector amplitudes) {
  QuantumState s = raw_pure(std::move(dims), std::move(amplitudes));
  s.validate();
  return s;
}

QuantumState QuantumState::mixed(std::vector<int> dims, Matrix rho) {
  QuantumState s = raw_mixed(std::move(dims), std::move(rho));
  s.validate();
  return s;
}

QuantumState QuantumState::basis(std::vector<int> dims, const std::vector<int>& levels) {
  int d = product_dim(dims);
  Vector psi = Vector::Zero(d);
  psi(levels_to_index(levels, dims)) = 1.0;
  return raw_pure(std::move(dims), std::move(psi));
}

QuantumState QuantumState::ground(std::vector<int> dims) {
  return basis(std::move(dims), std::vector<int>(dims.size(), 0));
}

const Vector& QuantumState::amplitudes() const {
  if (!pure_) throw std::logic_error("amplitudes() on a mixed state");
  return psi_;
}

const Matrix& QuantumState::density() const {
  if (pure_) throw std::logic_error("density() on a pure state; use to_density()");
  return rho_;
}

Matrix QuantumState::to_density() const {
  if (pure_) return psi_ * psi_.adjoint();
  return rho_;
}

QuantumState QuantumState::as_mixed() const {
  if (!pure_) return *this;
  return raw_mixed(dims_, to_density());
}

RealVector QuantumState::probabilities() const {
  if (pure_) return psi_.cwiseAbs2();
  return rho_.diagonal().real();
}

double QuantumState::site_population(int site, int level) const {
  RealVector p = probabilities();
  double total = 0.0;
  for (int idx = 0; idx < total_dim_; ++idx) {
    if (index_to_levels(idx, dims_)[site] == level) total += p(idx);
  }
  return total;
}

double QuantumState::norm_error() const {
  if (pure_) return std::abs(psi_.norm() - 1.0);
  return std::abs(rho_.trace().real() - 1.0) + std::abs(rho_.trace().imag());
}

void QuantumState::validate(double tol) const {
  if (pure_) {
    if (std::abs(psi_.squaredNorm() - 1.0) > tol)
      throw std::invalid_argument("pure state not normalized");
    return;
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("density matrix not Hermitian");
  if (std::abs(rho_.trace() - Complex(1.0, 0.0)) > tol)
    throw std::invalid_argument("density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("density matrix has negative eigenvalues");
}

}  // namespace qsim
