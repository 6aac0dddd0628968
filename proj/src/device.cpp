#include "ripsim/device.hpp"

#include <cmath>

#include "ripsim/errors.hpp"

namespace ripsim {

void QubitParams::validate() const {
  if (!(omega > 0.0)) {
    throw ConfigError("qubit '" + label + "': frequency must be positive", "freq_ghz");
  }
  if (!(t1 > 0.0)) {
    throw ConfigError("qubit '" + label + "': t1 must be positive", "t1_us");
  }
  if (!(t2_star > 0.0)) {
    throw ConfigError("qubit '" + label + "': t2_star must be positive", "t2star_us");
  }
  if (!(t_echo > 0.0)) {
    throw ConfigError("qubit '" + label + "': t_echo must be positive", "techo_us");
  }
  // physical bound T2* <= 2 T1, with 1% slack for measurement jitter
  if (t2_star > 2.0 * t1 * 1.01) {
    throw ConfigError("qubit '" + label + "': t2_star exceeds 2*t1", "t2star_us");
  }
  if (g == 0.0 && !chi_override) {
    throw ConfigError("qubit '" + label + "': needs g_mhz or chi_mhz", "g_mhz");
  }
}

void CavityParams::validate() const {
  if (!(omega_r > 0.0)) {
    throw ConfigError("cavity frequency must be positive", "freq_ghz");
  }
  if (kappa < 0.0) {
    throw ConfigError("cavity decay rate must be non-negative", "kappa_khz");
  }
}

void DeviceConfig::validate() const {
  if (qubits.size() < 2 || qubits.size() > 4) {
    throw ConfigError("device needs 2..4 qubits, got " + std::to_string(qubits.size()),
                      "qubit");
  }
  cavity.validate();
  for (const auto& q : qubits) q.validate();
}

}  // namespace ripsim
