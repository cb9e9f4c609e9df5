#include "qsim/evolve.hpp"

#include <cmath>
#include <stdexcept>

namespace qsim {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

int step_count(double span, double dt_max) {
  if (dt_max <= 0.0) throw std::invalid_argument("dt_max must be positive");
  return std::max(1, static_cast<int>(std::ceil(span / dt_max - 1e-12)));
}

}  // namespace

LindbladModel& LindbladModel::add(OperatorExpr op, double rate) {
  if (rate < 0.0) throw std::invalid_argument("collapse rate must be nonnegative");
  terms_.emplace_back(std::move(op), rate);
  return *this;
}

void require_hermitian(const Matrix& h, const char* what) {
  double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument(std::string(what) + ": Hamiltonian is not Hermitian");
}

Matrix hermitian_propagator(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  Vector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k)
    phases(k) = std::exp(kMinusI * es.eigenvalues()(k) * t);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Vector evolve_pure_fn(Vector psi, int dim, const HamiltonianFn& hfn, double t0,
                      double t1, double dt_max) {
  const int nsteps = step_count(t1 - t0, dt_max);
  const double dt = (t1 - t0) / nsteps;
  Matrix h(dim, dim);
  Vector k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  double t = t0;
  for (int s = 0; s < nsteps; ++s) {
    hfn(t, h);
    require_hermitian(h, "evolve");
    k1 = kMinusI * (h * psi);
    hfn(t + 0.5 * dt, h);
    require_hermitian(h, "evolve");
    tmp = psi + (0.5 * dt) * k1;
    k2 = kMinusI * (h * tmp);
    tmp = psi + (0.5 * dt) * k2;
    k3 = kMinusI * (h * tmp);
    hfn(t + dt, h);
    require_hermitian(h, "evolve");
    tmp = psi + dt * k3;
    k4 = kMinusI * (h * tmp);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = t0 + (s + 1) * dt;
  }
  return psi;
}

Matrix evolve_unitary_fn(int dim, const HamiltonianFn& hfn, double t0, double t1,
                         double dt_max) {
  const int nsteps = step_count(t1 - t0, dt_max);
  const double dt = (t1 - t0) / nsteps;
  Matrix u = Matrix::Identity(dim, dim);
  Matrix h(dim, dim), k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim),
      tmp(dim, dim);
  double t = t0;
  for (int s = 0; s < nsteps; ++s) {
    hfn(t, h);
    require_hermitian(h, "evolve");
    k1.noalias() = kMinusI * (h * u);
    hfn(t + 0.5 * dt, h);
    require_hermitian(h, "evolve");
    tmp = u + (0.5 * dt) * k1;
    k2.noalias() = kMinusI * (h * tmp);
    tmp = u + (0.5 * dt) * k2;
    k3.noalias() = kMinusI * (h * tmp);
    hfn(t + dt, h);
    require_hermitian(h, "evolve");
    tmp = u + dt * k3;
    k4.noalias() = kMinusI * (h * tmp);
    u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = t0 + (s + 1) * dt;
  }
  return u;
}

namespace {

// Right-hand side of the master equation for preassembled H and
// sqrt(rate)-scaled collapse matrices with cached L^dag L.
struct LindbladRhs {
  const std::vector<Matrix>& ls;
  const std::vector<Matrix>& ldl;

  void operator()(const Matrix& h, const Matrix& rho, Matrix& out) const {
    out.noalias() = kMinusI * (h * rho - rho * h);
    for (std::size_t k = 0; k < ls.size(); ++k) {
      out.noalias() += ls[k] * rho * ls[k].adjoint();
      out.noalias() -= 0.5 * (ldl[k] * rho + rho * ldl[k]);
    }
  }
};

}  // namespace

Matrix evolve_density_fn_observed(Matrix rho, const HamiltonianFn& hfn,
                                  const std::vector<std::pair<Matrix, double>>& collapse,
                                  double t0, double t1, double dt_max,
                                  const DensityObserver& obs) {
  const int dim = static_cast<int>(rho.rows());
  std::vector<Matrix> ls, ldl;
  for (const auto& [op, rate] : collapse) {
    if (rate < 0.0) throw std::invalid_argument("collapse rate must be nonnegative");
    if (rate == 0.0) continue;
    ls.push_back(std::sqrt(rate) * op);
    ldl.push_back(ls.back().adjoint() * ls.back());
  }
  LindbladRhs rhs{ls, ldl};

  const int nsteps = step_count(t1 - t0, dt_max);
  const double dt = (t1 - t0) / nsteps;
  Matrix h(dim, dim), k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim),
      tmp(dim, dim);
  double t = t0;
  if (obs) obs(t, rho);
  for (int s = 0; s < nsteps; ++s) {
    hfn(t, h);
    require_hermitian(h, "evolve_lindblad");
    rhs(h, rho, k1);
    hfn(t + 0.5 * dt, h);
    require_hermitian(h, "evolve_lindblad");
    tmp = rho + (0.5 * dt) * k1;
    rhs(h, tmp, k2);
    tmp = rho + (0.5 * dt) * k2;
    rhs(h, tmp, k3);
    hfn(t + dt, h);
    require_hermitian(h, "evolve_lindblad");
    tmp = rho + dt * k3;
    rhs(h, tmp, k4);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = t0 + (s + 1) * dt;
    if (obs) obs(t, rho);
  }
  return rho;
}

Matrix evolve_density_fn(Matrix rho, const HamiltonianFn& hfn,
                         const std::vector<std::pair<Matrix, double>>& collapse,
                         double t0, double t1, double dt_max) {
  return evolve_density_fn_observed(std::move(rho), hfn, collapse, t0, t1, dt_max,
                                    nullptr);
}

QuantumState evolve_pure(const QuantumState& state, const OperatorExpr& hamiltonian,
                         double t_ns, double dt_max) {
  if (!state.is_pure()) throw std::invalid_argument("evolve_pure needs a pure state");
  if (state.dims() != hamiltonian.dims())
    throw std::invalid_argument("state/Hamiltonian dimension mismatch");
  if (t_ns == 0.0) return state;

  if (!hamiltonian.time_dependent()) {
    Matrix h = hamiltonian.to_matrix(0.0);
    require_hermitian(h, "evolve_pure");
    return QuantumState::raw_pure(state.dims(),
                                  hermitian_propagator(h, t_ns) * state.amplitudes());
  }
  HamiltonianFn hfn = [&](double t, Matrix& h) { hamiltonian.assemble(t, h); };
  Vector psi = evolve_pure_fn(state.amplitudes(), state.total_dim(), hfn, 0.0, t_ns,
                              dt_max);
  return QuantumState::raw_pure(state.dims(), std::move(psi));
}

QuantumState evolve_lindblad(const QuantumState& state, const OperatorExpr& hamiltonian,
                             const LindbladModel& noise, double t_ns, double dt_max) {
  if (state.dims() != hamiltonian.dims())
    throw std::invalid_argument("state/Hamiltonian dimension mismatch");
  std::vector<std::pair<Matrix, double>> collapse;
  for (const auto& [op, rate] : noise.terms()) {
    if (op.dims() != state.dims())
      throw std::invalid_argument("collapse operator dimension mismatch");
    collapse.emplace_back(op.to_matrix(0.0), rate);
  }
  HamiltonianFn hfn = [&](double t, Matrix& h) { hamiltonian.assemble(t, h); };
  Matrix rho = evolve_density_fn(state.to_density(), hfn, collapse, 0.0, t_ns, dt_max);
  return QuantumState::raw_mixed(state.dims(), std::move(rho));
}

}  // namespace qsim
