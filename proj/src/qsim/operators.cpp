#include "qsim/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace qsim {

OperatorExpr::OperatorExpr(std::vector<int> dims)
    : dims_(std::move(dims)), total_dim_(product_dim(dims_)) {}

OperatorExpr& OperatorExpr::add(Complex coeff, std::vector<LocalFactor> factors) {
  OpTerm t;
  t.coeff = coeff;
  t.factors = std::move(factors);
  return add_term(std::move(t));
}

OperatorExpr& OperatorExpr::add(TimeCoeff coeff, std::vector<LocalFactor> factors) {
  OpTerm t;
  t.time_coeff = std::move(coeff);
  t.factors = std::move(factors);
  return add_term(std::move(t));
}

OperatorExpr& OperatorExpr::add_term(OpTerm term) {
  for (const LocalFactor& f : term.factors) {
    if (f.site < 0 || f.site >= static_cast<int>(dims_.size()))
      throw std::invalid_argument("operator term references a site outside the register");
    if (f.op == LocalOp::Custom) {
      if (f.custom.rows() != dims_[f.site] || f.custom.cols() != dims_[f.site])
        throw std::invalid_argument("custom local matrix does not match site dimension");
    }
    if (f.op == LocalOp::Projector && (f.level < 0 || f.level >= dims_[f.site]))
      throw std::invalid_argument("projector level out of range");
  }
  terms_.push_back(std::move(term));
  return *this;
}

bool OperatorExpr::time_dependent() const {
  for (const OpTerm& t : terms_)
    if (t.time_coeff) return true;
  return false;
}

Matrix OperatorExpr::local_matrix(const LocalFactor& f, int dim) {
  Matrix m = Matrix::Zero(dim, dim);
  switch (f.op) {
    case LocalOp::Lower:
      for (int n = 1; n < dim; ++n) m(n - 1, n) = std::sqrt(double(n));
      break;
    case LocalOp::Raise:
      for (int n = 1; n < dim; ++n) m(n, n - 1) = std::sqrt(double(n));
      break;
    case LocalOp::Number:
      for (int n = 0; n < dim; ++n) m(n, n) = double(n);
      break;
    case LocalOp::Kerr:
      for (int n = 0; n < dim; ++n) m(n, n) = double(n) * double(n - 1);
      break;
    case LocalOp::Projector:
      m(f.level, f.level) = 1.0;
      break;
    case LocalOp::Identity:
      m.setIdentity();
      break;
    case LocalOp::Custom:
      m = f.custom;
      break;
  }
  return m;
}

void OperatorExpr::assemble(double t, Matrix& out) const {
  out.setZero(total_dim_, total_dim_);
  const int nsites = static_cast<int>(dims_.size());
  for (const OpTerm& term : terms_) {
    Complex c = term.coeff;
    if (term.time_coeff) c *= term.time_coeff(t);
    if (c == Complex(0.0, 0.0)) continue;

    // Per-site matrices, identity where the term has no factor.
    std::vector<Matrix> site_ops(nsites);
    for (int s = 0; s < nsites; ++s)
      site_ops[s] = Matrix::Identity(dims_[s], dims_[s]);
    for (const LocalFactor& f : term.factors)
      site_ops[f.site] = site_ops[f.site] * local_matrix(f, dims_[f.site]);

    Matrix full = site_ops[0];
    for (int s = 1; s < nsites; ++s) full = kron(full, site_ops[s]);
    out.noalias() += c * full;
  }
}

Matrix OperatorExpr::to_matrix(double t) const {
  Matrix out;
  assemble(t, out);
  return out;
}

bool OperatorExpr::is_hermitian(double t, double tol) const {
  Matrix m = to_matrix(t);
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

}  // namespace qsim
