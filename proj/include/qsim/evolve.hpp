#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qsim/operators.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// Collapse operators with nonnegative rates (1/ns).
class LindbladModel {
 public:
  LindbladModel() = default;
  LindbladModel& add(OperatorExpr op, double rate);
  const std::vector<std::pair<OperatorExpr, double>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

 private:
  std::vector<std::pair<OperatorExpr, double>> terms_;
};

inline constexpr double kDefaultDtMax = 0.05;  // ns

/// Closed-system evolution under H for t_ns. Time-independent
/// Hamiltonians go through an exact eigendecomposition propagator;
/// time-dependent ones through fixed-step 4th-order Runge-Kutta.
QuantumState evolve_pure(const QuantumState& state, const OperatorExpr& hamiltonian,
                         double t_ns, double dt_max = kDefaultDtMax);

/// Lindblad master equation; always returns a mixed state.
QuantumState evolve_lindblad(const QuantumState& state, const OperatorExpr& hamiltonian,
                             const LindbladModel& noise, double t_ns,
                             double dt_max = kDefaultDtMax);

/// Callback filling a preallocated H(t); the fast path for pulse
/// Hamiltonians assembled outside OperatorExpr.
using HamiltonianFn = std::function<void(double t, Matrix& h)>;

Vector evolve_pure_fn(Vector psi, int dim, const HamiltonianFn& hfn, double t0,
                      double t1, double dt_max);

/// Propagator for the window [t0, t1]: solves dU/dt = -i H(t) U from identity.
Matrix evolve_unitary_fn(int dim, const HamiltonianFn& hfn, double t0, double t1,
                         double dt_max);

Matrix evolve_density_fn(Matrix rho, const HamiltonianFn& hfn,
                         const std::vector<std::pair<Matrix, double>>& collapse,
                         double t0, double t1, double dt_max);

/// Observer variant: obs(t, rho) is called at t0, after every accepted
/// step, and at t1. Used for recording population time series.
using DensityObserver = std::function<void(double t, const Matrix& rho)>;
Matrix evolve_density_fn_observed(Matrix rho, const HamiltonianFn& hfn,
                                  const std::vector<std::pair<Matrix, double>>& collapse,
                                  double t0, double t1, double dt_max,
                                  const DensityObserver& obs);

/// exp(-i H t) for Hermitian H, by eigendecomposition.
Matrix hermitian_propagator(const Matrix& h, double t);

void require_hermitian(const Matrix& h, const char* what);

}  // namespace qsim
