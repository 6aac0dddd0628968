#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace ripsim {

enum class EnvelopeKind { adiabatic_cosine, constant, piecewise_samples };

// complex drive envelope eps(t) = eps_I(t) + i eps_Q(t), in rad/s
struct PulseEnvelope {
  EnvelopeKind kind = EnvelopeKind::constant;
  std::complex<double> amplitude{0.0, 0.0};  // eps_A
  double width = 0.0;                        // tau (s)
  std::vector<std::pair<double, std::complex<double>>> samples;  // piecewise only

  // eps(t); adiabatic_cosine rises from exactly 0, peaks at 2*eps_A mid-pulse
  std::complex<double> sample(double t) const;
  double duration() const;

  static PulseEnvelope adiabatic(std::complex<double> eps_a, double tau);
  static PulseEnvelope constant_tone(std::complex<double> eps0, double tau);
  static PulseEnvelope piecewise(std::vector<std::pair<double, std::complex<double>>> pts);
};

struct DriveSpec {
  double detuning = 0.0;  // omega_d minus the dressed all-ground cavity (rad/s)
  PulseEnvelope envelope;
  std::optional<double> carrier;  // omega_d when the absolute frequency matters
};

}  // namespace ripsim
