#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ripsim {

// one transmon coupled to the shared bus cavity; all frequencies angular (rad/s)
struct QubitParams {
  std::string label;
  double omega = 0.0;   // bare qubit frequency
  double delta = 0.0;   // anharmonicity, signed (negative for transmons)
  double g = 0.0;       // qubit-bus coupling; 0 means unknown (derive from chi_override)
  std::optional<double> chi_override;  // measured dispersive shift, signed
  double t1 = 0.0;      // energy decay time (s)
  double t2_star = 0.0; // Ramsey coherence time (s)
  double t_echo = 0.0;  // echo coherence time (s)

  void validate() const;
};

struct CavityParams {
  double omega_r = 0.0;  // bus cavity frequency (rad/s)
  double kappa = 0.0;    // decay rate (rad/s)

  void validate() const;
};

struct DeviceConfig {
  std::vector<QubitParams> qubits;  // N = 2..4
  CavityParams cavity;

  int n() const { return static_cast<int>(qubits.size()); }
  void validate() const;
};

}  // namespace ripsim
