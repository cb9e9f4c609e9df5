#pragma once

#include <optional>
#include <string>
#include <vector>

namespace device {

struct QubitParams {
  double omega_ghz = 0.0;    // idle 0-1 frequency
  double eta_mhz = 0.0;      // anharmonicity, negative
  double t1_us = 0.0;        // energy relaxation time
  double t2star_ns = 0.0;    // Ramsey decoherence time
  double f_g = 1.0;          // readout fidelity prepared in |g>
  double f_e = 1.0;          // readout fidelity prepared in |e>
  int levels = 3;

  // Readout-chain numbers carried along from the device description but
  // not used by any simulation path.
  std::optional<double> omega_rr_ghz;
  std::optional<double> two_chi_mhz;
  std::optional<double> tau_rr_ns;
  std::optional<double> f_sqg;

  double gamma1_per_ns() const;       // 1/T1
  double gamma_phi_per_ns() const;    // 1/T2* - 1/(2 T1)
};

class DeviceModel {
 public:
  DeviceModel() = default;
  DeviceModel(std::vector<QubitParams> qubits,
              std::vector<std::vector<double>> coupling_mhz);

  static DeviceModel load(const std::string& path);
  void save(const std::string& path) const;
  static DeviceModel from_json_text(const std::string& text);
  std::string to_json_text() const;

  int num_qubits() const { return static_cast<int>(qubits_.size()); }
  const QubitParams& qubit(int k) const { return qubits_.at(k); }
  const std::vector<QubitParams>& qubits() const { return qubits_; }
  double coupling_mhz(int i, int j) const { return coupling_mhz_.at(i).at(j); }
  const std::vector<std::vector<double>>& coupling_matrix_mhz() const {
    return coupling_mhz_;
  }

  void validate() const;

 private:
  std::vector<QubitParams> qubits_;
  std::vector<std::vector<double>> coupling_mhz_;  // symmetric, zero diagonal
};

}  // namespace device
