#include "device/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace device {

using nlohmann::json;

double QubitParams::gamma1_per_ns() const { return 1.0 / (t1_us * 1e3); }

double QubitParams::gamma_phi_per_ns() const {
  return 1.0 / t2star_ns - 0.5 * gamma1_per_ns();
}

DeviceModel::DeviceModel(std::vector<QubitParams> qubits,
                         std::vector<std::vector<double>> coupling_mhz)
    : qubits_(std::move(qubits)), coupling_mhz_(std::move(coupling_mhz)) {
  validate();
}

void DeviceModel::validate() const {
  const int n = num_qubits();
  if (coupling_mhz_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("coupling matrix size does not match qubit count");
  for (int i = 0; i < n; ++i) {
    const QubitParams& q = qubits_[i];
    if (q.t1_us <= 0.0 || q.t2star_ns <= 0.0)
      throw std::invalid_argument("coherence times must be positive");
    if (q.t2star_ns > 2.0 * q.t1_us * 1e3)
      throw std::invalid_argument("T2* exceeds 2*T1");
    if (q.eta_mhz >= 0.0)
      throw std::invalid_argument("anharmonicity must be negative");
    if (q.f_g < 0.0 || q.f_g > 1.0 || q.f_e < 0.0 || q.f_e > 1.0)
      throw std::invalid_argument("readout fidelities must lie in [0,1]");
    if (q.levels < 2) throw std::invalid_argument("levels must be >= 2");
    if (coupling_mhz_[i].size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("coupling matrix is not square");
    if (coupling_mhz_[i][i] != 0.0)
      throw std::invalid_argument("coupling matrix diagonal must be zero");
    for (int j = 0; j < n; ++j)
      if (std::abs(coupling_mhz_[i][j] - coupling_mhz_[j][i]) > 1e-12)
        throw std::invalid_argument("coupling matrix must be symmetric");
  }
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) ok = true;
    if (!ok)
      throw std::invalid_argument("unknown key '" + it.key() + "' in " + where);
  }
}

}  // namespace

DeviceModel DeviceModel::from_json_text(const std::string& text) {
  json root = json::parse(text);
  reject_unknown_keys(root, {"qubits", "couplings"}, "device file");
  std::vector<QubitParams> qubits;
  for (const json& jq : root.at("qubits")) {
    reject_unknown_keys(jq,
                        {"omega_ghz", "eta_mhz", "t1_us", "t2star_ns", "f_g", "f_e",
                         "levels", "omega_rr_ghz", "two_chi_mhz", "tau_rr_ns", "f_sqg"},
                        "qubits[]");
    QubitParams q;
    q.omega_ghz = jq.at("omega_ghz").get<double>();
    q.eta_mhz = jq.at("eta_mhz").get<double>();
    q.t1_us = jq.at("t1_us").get<double>();
    q.t2star_ns = jq.at("t2star_ns").get<double>();
    q.f_g = jq.at("f_g").get<double>();
    q.f_e = jq.at("f_e").get<double>();
    q.levels = jq.value("levels", 3);
    if (jq.contains("omega_rr_ghz")) q.omega_rr_ghz = jq["omega_rr_ghz"].get<double>();
    if (jq.contains("two_chi_mhz")) q.two_chi_mhz = jq["two_chi_mhz"].get<double>();
    if (jq.contains("tau_rr_ns")) q.tau_rr_ns = jq["tau_rr_ns"].get<double>();
    if (jq.contains("f_sqg")) q.f_sqg = jq["f_sqg"].get<double>();
    qubits.push_back(q);
  }
  const int n = static_cast<int>(qubits.size());
  std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
  if (root.contains("couplings")) {
    for (const json& jc : root["couplings"]) {
      reject_unknown_keys(jc, {"i", "j", "g_mhz"}, "couplings[]");
      int i = jc.at("i").get<int>();
      int j = jc.at("j").get<int>();
      if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::invalid_argument("coupling references invalid qubit pair");
      g[i][j] = g[j][i] = jc.at("g_mhz").get<double>();
    }
  }
  return DeviceModel(std::move(qubits), std::move(g));
}

std::string DeviceModel::to_json_text() const {
  json root;
  root["qubits"] = json::array();
  for (const QubitParams& q : qubits_) {
    json jq;
    jq["omega_ghz"] = q.omega_ghz;
    jq["eta_mhz"] = q.eta_mhz;
    jq["t1_us"] = q.t1_us;
    jq["t2star_ns"] = q.t2star_ns;
    jq["f_g"] = q.f_g;
    jq["f_e"] = q.f_e;
    jq["levels"] = q.levels;
    if (q.omega_rr_ghz) jq["omega_rr_ghz"] = *q.omega_rr_ghz;
    if (q.two_chi_mhz) jq["two_chi_mhz"] = *q.two_chi_mhz;
    if (q.tau_rr_ns) jq["tau_rr_ns"] = *q.tau_rr_ns;
    if (q.f_sqg) jq["f_sqg"] = *q.f_sqg;
    root["qubits"].push_back(jq);
  }
  root["couplings"] = json::array();
  for (int i = 0; i < num_qubits(); ++i)
    for (int j = i + 1; j < num_qubits(); ++j)
      if (coupling_mhz_[i][j] != 0.0)
        root["couplings"].push_back({{"i", i}, {"j", j}, {"g_mhz", coupling_mhz_[i][j]}});
  return root.dump(2) + "\n";
}

DeviceModel DeviceModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open device file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

void DeviceModel::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write device file: " + path);
  out << to_json_text();
}

}  // namespace device
