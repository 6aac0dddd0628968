#include "ripsim/pulses.hpp"

#include <algorithm>
#include <cmath>

#include "ripsim/errors.hpp"

namespace ripsim {

namespace {
constexpr double pi = 3.14159265358979323846;
}

double PulseEnvelope::duration() const {
  if (kind == EnvelopeKind::piecewise_samples) {
    return samples.empty() ? 0.0 : samples.back().first;
  }
  return width;
}

std::complex<double> PulseEnvelope::sample(double t) const {
  const double dur = duration();
  const double slack = 1e-12 * std::max(dur, 1e-9);
  if (t < -slack || t > dur + slack) {
    throw OutOfRange("envelope sampled outside [0, duration]");
  }
  t = std::clamp(t, 0.0, dur);
  switch (kind) {
    case EnvelopeKind::constant:
      return amplitude;
    case EnvelopeKind::adiabatic_cosine:
      return amplitude * (1.0 + std::cos(pi * std::cos(pi * t / width)));
    case EnvelopeKind::piecewise_samples: {
      if (samples.empty()) return {0.0, 0.0};
      if (t <= samples.front().first) return samples.front().second;
      if (t >= samples.back().first) return samples.back().second;
      auto hi = std::upper_bound(samples.begin(), samples.end(), t,
                                 [](double x, const auto& s) { return x < s.first; });
      auto lo = hi - 1;
      const double span = hi->first - lo->first;
      if (span <= 0.0) return lo->second;
      const double f = (t - lo->first) / span;
      return lo->second + f * (hi->second - lo->second);
    }
  }
  return {0.0, 0.0};
}

PulseEnvelope PulseEnvelope::adiabatic(std::complex<double> eps_a, double tau) {
  PulseEnvelope e;
  e.kind = EnvelopeKind::adiabatic_cosine;
  e.amplitude = eps_a;
  e.width = tau;
  return e;
}

PulseEnvelope PulseEnvelope::constant_tone(std::complex<double> eps0, double tau) {
  PulseEnvelope e;
  e.kind = EnvelopeKind::constant;
  e.amplitude = eps0;
  e.width = tau;
  return e;
}

PulseEnvelope PulseEnvelope::piecewise(
    std::vector<std::pair<double, std::complex<double>>> pts) {
  PulseEnvelope e;
  e.kind = EnvelopeKind::piecewise_samples;
  e.samples = std::move(pts);
  e.width = e.samples.empty() ? 0.0 : e.samples.back().first;
  return e;
}

}  // namespace ripsim
