#pragma once

#include <functional>
#include <vector>

#include "qsim/state.hpp"

namespace qsim {

/// Local operator tags for one site of a qudit register.
enum class LocalOp {
  Lower,      // a
  Raise,      // a^dag
  Number,     // a^dag a
  Kerr,       // a^dag a^dag a a
  Projector,  // |level><level|
  Identity,
  Custom,     // arbitrary square matrix of the site dimension
};

struct LocalFactor {
  int site = 0;
  LocalOp op = LocalOp::Identity;
  int level = 0;  // Projector only
  Matrix custom;  // Custom only
};

/// Scalar-valued time coefficient; rad/ns convention like everything else.
using TimeCoeff = std::function<Complex(double)>;

struct OpTerm {
  Complex coeff{1.0, 0.0};
  TimeCoeff time_coeff;  // multiplies coeff when present
  std::vector<LocalFactor> factors;
};

/// Sum of tensor-product terms over a fixed register; the symbolic form
/// all Hamiltonians and collapse operators are assembled from.
class OperatorExpr {
 public:
  explicit OperatorExpr(std::vector<int> dims);

  OperatorExpr& add(Complex coeff, std::vector<LocalFactor> factors);
  OperatorExpr& add(TimeCoeff coeff, std::vector<LocalFactor> factors);
  OperatorExpr& add_term(OpTerm term);

  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const { return total_dim_; }
  bool time_dependent() const;
  bool empty() const { return terms_.empty(); }

  Matrix to_matrix(double t = 0.0) const;
  /// Writes to_matrix(t) into a preallocated buffer (hot loops).
  void assemble(double t, Matrix& out) const;

  bool is_hermitian(double t = 0.0, double tol = 1e-10) const;

  static Matrix local_matrix(const LocalFactor& f, int dim);

 private:
  std::vector<int> dims_;
  int total_dim_ = 0;
  std::vector<OpTerm> terms_;
};

}  // namespace qsim
