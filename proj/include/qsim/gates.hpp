#pragma once

#include "qsim/rng.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// State overlap measure: |<a|b>|^2 for pure/pure, <psi|rho|psi> for
/// pure/mixed, tr(rho_a rho_b) for mixed/mixed. Result clipped to [0,1].
double fidelity(const QuantumState& a, const QuantumState& b);

/// Applies a unitary acting on the joint space of `sites` (in the given
/// order) to the full register. Rejects non-unitary input.
QuantumState apply_unitary(const QuantumState& state, const Matrix& u,
                           const std::vector<int>& sites);

/// Embeds a unitary on `sites` into the full register as a dense matrix.
Matrix embed_unitary(const Matrix& u, const std::vector<int>& sites,
                     const std::vector<int>& dims);

bool is_unitary(const Matrix& u, double tol = 1e-10);

// Single-qubit rotations; phi is the equatorial axis angle, so
// half_pi_pulse(0) is X/2 and half_pi_pulse(pi/2) is Y/2.
Matrix half_pi_pulse(double phi);
Matrix pi_pulse(double phi);
Matrix rz(double theta);
Matrix pauli_x();
Matrix haar_su2(Rng& rng);

/// Promotes a qubit-space (2^n) unitary to qudit dims, acting as
/// identity on the extra levels.
Matrix embed_qubit_unitary(const Matrix& u, const std::vector<int>& dims);

}  // namespace qsim
