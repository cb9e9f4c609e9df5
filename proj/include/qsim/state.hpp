#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qsim {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// State of a tensor product of d-level qudits, either a pure amplitude
/// vector or a density matrix. Site 0 is the leftmost (slowest) index,
/// so for qubits the basis label reads like a bitstring: |q0 q1 ...>.
class QuantumState {
 public:
  /// Validating constructors. Pure states must be normalized to 1e-10;
  /// density matrices Hermitian, unit trace, eigenvalues >= -1e-9.
  static QuantumState pure(std::vector<int> dims, Vector amplitudes);
  static QuantumState mixed(std::vector<int> dims, Matrix rho);

  /// Basis state |levels[0] levels[1] ...>.
  static QuantumState basis(std::vector<int> dims, const std::vector<int>& levels);
  static QuantumState ground(std::vector<int> dims);

  /// Non-validating constructors for evolution outputs, which carry
  /// integrator drift below the validation tolerances but above zero.
  static QuantumState raw_pure(std::vector<int> dims, Vector amplitudes);
  static QuantumState raw_mixed(std::vector<int> dims, Matrix rho);

  const std::vector<int>& dims() const { return dims_; }
  int num_sites() const { return static_cast<int>(dims_.size()); }
  int total_dim() const { return total_dim_; }
  bool is_pure() const { return pure_; }

  const Vector& amplitudes() const;
  const Matrix& density() const;
  Matrix to_density() const;
  QuantumState as_mixed() const;

  /// Born-rule probabilities over the joint basis.
  RealVector probabilities() const;
  /// Population of `level` on `site`, traced over all other sites.
  double site_population(int site, int level) const;

  double norm_error() const;   // pure: | ||psi|| - 1 |, mixed: |tr(rho) - 1|
  void validate(double tol = 1e-10) const;

 private:
  QuantumState() = default;
  std::vector<int> dims_;
  int total_dim_ = 0;
  bool pure_ = true;
  Vector psi_;
  Matrix rho_;
};

/// Index arithmetic between a flat basis index and per-site levels.
int levels_to_index(const std::vector<int>& levels, const std::vector<int>& dims);
std::vector<int> index_to_levels(int index, const std::vector<int>& dims);
int product_dim(const std::vector<int>& dims);

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace qsim
