#include "qsim/gates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsim {

double fidelity(const QuantumState& a, const QuantumState& b) {
  if (a.dims() != b.dims())
    throw std::invalid_argument("fidelity: dimension mismatch");
  double f;
  if (a.is_pure() && b.is_pure()) {
    f = std::norm(a.amplitudes().dot(b.amplitudes()));
  } else if (a.is_pure()) {
    f = std::real(a.amplitudes().dot(b.density() * a.amplitudes()));
  } else if (b.is_pure()) {
    f = std::real(b.amplitudes().dot(a.density() * b.amplitudes()));
  } else {
    f = std::real((a.density() * b.density()).trace());
  }
  return std::clamp(f, 0.0, 1.0);
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

Matrix embed_unitary(const Matrix& u, const std::vector<int>& sites,
                     const std::vector<int>& dims) {
  int sub_dim = 1;
  for (int s : sites) {
    if (s < 0 || s >= static_cast<int>(dims.size()))
      throw std::invalid_argument("apply_unitary: site out of range");
    sub_dim *= dims[s];
  }
  if (u.rows() != sub_dim || u.cols() != sub_dim)
    throw std::invalid_argument("apply_unitary: matrix does not match joint site dimension");

  const int dim = product_dim(dims);
  Matrix full = Matrix::Zero(dim, dim);
  // Walk every basis column; route the sub-index through u.
  for (int col = 0; col < dim; ++col) {
    std::vector<int> levels = index_to_levels(col, dims);
    int sub_col = 0;
    for (int s : sites) sub_col = sub_col * dims[s] + levels[s];
    for (int sub_row = 0; sub_row < sub_dim; ++sub_row) {
      if (u(sub_row, sub_col) == Complex(0.0, 0.0)) continue;
      std::vector<int> out_levels = levels;
      int rem = sub_row;
      for (int k = static_cast<int>(sites.size()) - 1; k >= 0; --k) {
        out_levels[sites[k]] = rem % dims[sites[k]];
        rem /= dims[sites[k]];
      }
      full(levels_to_index(out_levels, dims), col) = u(sub_row, sub_col);
    }
  }
  return full;
}

QuantumState apply_unitary(const QuantumState& state, const Matrix& u,
                           const std::vector<int>& sites) {
  if (!is_unitary(u))
    throw std::invalid_argument("apply_unitary: matrix is not unitary");
  Matrix full = embed_unitary(u, sites, state.dims());
  if (state.is_pure())
    return QuantumState::raw_pure(state.dims(), full * state.amplitudes());
  return QuantumState::raw_mixed(state.dims(), full * state.density() * full.adjoint());
}

Matrix half_pi_pulse(double phi) {
  const double c = std::cos(M_PI / 4.0), s = std::sin(M_PI / 4.0);
  Matrix u(2, 2);
  u << c, Complex(0, -1) * std::exp(Complex(0, -phi)) * s,
      Complex(0, -1) * std::exp(Complex(0, phi)) * s, c;
  return u;
}

Matrix pi_pulse(double phi) {
  Matrix u(2, 2);
  u << 0.0, Complex(0, -1) * std::exp(Complex(0, -phi)),
      Complex(0, -1) * std::exp(Complex(0, phi)), 0.0;
  return u;
}

Matrix rz(double theta) {
  Matrix u = Matrix::Zero(2, 2);
  u(0, 0) = std::exp(Complex(0, -theta / 2.0));
  u(1, 1) = std::exp(Complex(0, theta / 2.0));
  return u;
}

Matrix pauli_x() {
  Matrix u(2, 2);
  u << 0, 1, 1, 0;
  return u;
}

Matrix haar_su2(Rng& rng) {
  // Random unit quaternion.
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& v : q) {
      v = gaussian(rng);
      n2 += v * v;
    }
  } while (n2 < 1e-12);
  const double n = std::sqrt(n2);
  for (double& v : q) v /= n;
  Matrix u(2, 2);
  u << Complex(q[0], q[1]), Complex(q[2], q[3]), Complex(-q[2], q[3]),
      Complex(q[0], -q[1]);
  return u;
}

Matrix embed_qubit_unitary(const Matrix& u, const std::vector<int>& dims) {
  const int nq = static_cast<int>(dims.size());
  const int qdim = 1 << nq;
  if (u.rows() != qdim || u.cols() != qdim)
    throw std::invalid_argument("embed_qubit_unitary: expected a 2^n matrix");
  const int dim = product_dim(dims);
  Matrix full = Matrix::Identity(dim, dim);
  // Map qubit basis indices into the qudit register (levels 0/1 only).
  std::vector<int> qubit_index(qdim);
  for (int b = 0; b < qdim; ++b) {
    std::vector<int> levels(nq);
    for (int k = 0; k < nq; ++k) levels[k] = (b >> (nq - 1 - k)) & 1;
    qubit_index[b] = levels_to_index(levels, dims);
  }
  for (int i = 0; i < qdim; ++i)
    for (int j = 0; j < qdim; ++j)
      full(qubit_index[i], qubit_index[j]) = u(i, j);
  return full;
}

}  // namespace qsim
