#include "ripsim/effective_model.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "ripsim/errors.hpp"
#include "ripsim/units.hpp"

namespace ripsim {

namespace {

// cavity pull of qubit level k
double chi_level(const QubitParams& q, double omega_r, int k) {
  const double d0 = q.omega + k * q.delta - omega_r;
  const double d1 = q.omega + (k - 1) * q.delta - omega_r;
  return q.g * q.g * (q.delta - q.omega + omega_r) / (d0 * d1);
}

double dressed_level(const QubitParams& q, double omega_r, int k) {
  if (k == 0) return 0.0;
  return k * q.omega + 0.5 * q.delta * k * (k - 1) +
         k * q.g * q.g / (q.omega + (k - 1) * q.delta - omega_r);
}

// ground-referenced dispersive shift: 2 g^2 delta / (D (D + delta)), D = omega - omega_r
double chi_shift(const QubitParams& q, double omega_r) {
  const double d = q.omega - omega_r;
  return 2.0 * q.g * q.g * q.delta / (d * (d + q.delta));
}

// always-on ZZ between a qubit pair, complete to fourth order in the couplings:
// exchange through the straddling two-photon path plus the two-excitation
// virtual transitions into the second excited levels
double zeta_pair(const QubitParams& qi, const QubitParams& qj, double omega_r) {
  const double di = qi.omega - omega_r;
  const double dj = qj.omega - omega_r;
  const double wij = qi.omega - qj.omega;
  const double gg = qi.g * qi.g * qj.g * qj.g;
  return 0.5 * gg *
         ((di + dj) / (di * di * dj * dj) + 1.0 / (di * di * (wij - qj.delta)) -
          1.0 / (dj * dj * (wij + qi.delta)));
}

}  // namespace

double j_exchange(const DeviceConfig& config, int i, int j, int l, int m) {
  const auto& qi = config.qubits[static_cast<std::size_t>(i)];
  const auto& qj = config.qubits[static_cast<std::size_t>(j)];
  const double omega_r = config.cavity.omega_r;
  const double di = qi.omega + l * qi.delta - omega_r;
  const double dj = qj.omega + m * qj.delta - omega_r;
  return qi.g * qj.g * (di + dj) / (2.0 * di * dj);
}

double EffectiveModel::chi_sector(unsigned label) const {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    if (label >> i & 1u) s += chi[static_cast<std::size_t>(i)];
  }
  return s;
}

double EffectiveModel::zz_energy(unsigned label) const {
  double e = 0.0;
  for (int i = 0; i < n; ++i) {
    const int si = (label >> i & 1u) ? -1 : 1;
    for (int j = i + 1; j < n; ++j) {
      const int sj = (label >> j & 1u) ? -1 : 1;
      e += zeta(i, j) * si * sj;
    }
  }
  return e;
}

double EffectiveModel::max_abs_chi() const {
  double m = 0.0;
  for (double c : chi) m = std::max(m, std::abs(c));
  return m;
}

double EffectiveModel::mean_chi(bool* spread_exceeded) const {
  double mean = 0.0;
  for (double c : chi) mean += c;
  mean /= static_cast<double>(n);
  if (spread_exceeded) {
    *spread_exceeded = false;
    for (double c : chi) {
      if (std::abs(c - mean) > 0.2 * std::abs(mean)) *spread_exceeded = true;
    }
  }
  return mean;
}

EffectiveModel compute_couplings(const DeviceConfig& input, const CouplingOptions& opts) {
  input.validate();

  EffectiveModel model;
  model.device = input;
  model.n = input.n();
  model.omega_r = input.cavity.omega_r;
  model.kappa = input.cavity.kappa;
  const double omega_r = model.omega_r;

  // back-solve g from the measured shift when it is not given
  for (auto& q : model.device.qubits) {
    if (q.g == 0.0 && q.chi_override) {
      const double d = q.omega - omega_r;
      const double g2 = *q.chi_override * d * (d + q.delta) / (2.0 * q.delta);
      if (!(g2 > 0.0)) {
        throw ConfigError("qubit '" + q.label +
                              "': chi_mhz sign is inconsistent with the detuning",
                          "chi_mhz");
      }
      q.g = std::sqrt(g2);
    }
  }

  for (const auto& q : model.device.qubits) {
    if (std::abs(q.omega - omega_r) <= opts.dispersive_min_ratio * std::abs(q.g)) {
      throw DispersiveRegimeViolation("qubit '" + q.label +
                                      "' is too close to the bus for the dispersive model");
    }
  }

  const int n = model.n;
  model.chi_levels.resize(static_cast<std::size_t>(n));
  model.dressed.resize(static_cast<std::size_t>(n));
  model.chi.resize(static_cast<std::size_t>(n));
  model.xi.assign(static_cast<std::size_t>(n), 0.0);
  model.zeta2.assign(static_cast<std::size_t>(n) * n, 0.0);

  for (int i = 0; i < n; ++i) {
    const auto& q = model.device.qubits[static_cast<std::size_t>(i)];
    for (int k = 0; k < 3; ++k) {
      model.chi_levels[i][static_cast<std::size_t>(k)] = chi_level(q, omega_r, k);
      model.dressed[i][static_cast<std::size_t>(k)] = dressed_level(q, omega_r, k);
    }
    double diff = chi_shift(q, omega_r);
    if (q.chi_override) {
      // pin the ground-referenced shift to the measured value and rescale the ladder
      const double scale = (diff != 0.0) ? *q.chi_override / diff : 0.0;
      for (auto& c : model.chi_levels[static_cast<std::size_t>(i)]) c *= scale;
      diff = *q.chi_override;
    }
    model.chi[static_cast<std::size_t>(i)] = diff;
  }

  double max_j = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& qi = model.device.qubits[static_cast<std::size_t>(i)];
      const auto& qj = model.device.qubits[static_cast<std::size_t>(j)];
      const double z = zeta_pair(qi, qj, omega_r);
      model.zeta2[static_cast<std::size_t>(i) * n + j] = z;
      model.zeta2[static_cast<std::size_t>(j) * n + i] = z;
      for (auto [l, m] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}}) {
        max_j = std::max(max_j, std::abs(j_exchange(model.device, i, j, l, m)));
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double sep = std::abs(model.dressed[static_cast<std::size_t>(i)][1] -
                                  model.dressed[static_cast<std::size_t>(j)][1]);
      if (sep <= opts.degeneracy_ratio * max_j) {
        throw DegenerateQubits("qubits '" + model.device.qubits[i].label + "' and '" +
                               model.device.qubits[j].label +
                               "' have near-degenerate dressed frequencies");
      }
    }
  }

  // weight-1 coefficients: dressed splitting plus exchange-level repulsion
  for (int i = 0; i < n; ++i) {
    double x = -0.5 * model.dressed[static_cast<std::size_t>(i)][1];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double j00 = j_exchange(model.device, i, j, 0, 0);
      const double gap = model.dressed[static_cast<std::size_t>(i)][1] -
                         model.dressed[static_cast<std::size_t>(j)][1];
      x += 0.25 * (j00 * j00 / gap + model.zeta(i, j));
    }
    model.xi[static_cast<std::size_t>(i)] = x;
  }

  return model;
}

std::vector<double> effective_diagonal_hamiltonian(const EffectiveModel& model,
                                                   int photon_sector) {
  if (photon_sector != 0 && photon_sector != 1) {
    throw OutOfRange("photon sector must be 0 or 1");
  }
  const int n = model.n;
  const std::size_t dim = 1u << n;
  std::vector<double> diag(dim, 0.0);
  for (unsigned s = 0; s < dim; ++s) {
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
      const int sign = (s >> i & 1u) ? -1 : 1;
      const double xi_p =
          model.xi[static_cast<std::size_t>(i)] +
          photon_sector * 0.5 * (model.chi_levels[static_cast<std::size_t>(i)][0] -
                                 model.chi_levels[static_cast<std::size_t>(i)][1]);
      e += xi_p * sign;
    }
    e += model.zz_energy(s);
    diag[s] = e;
  }
  return diag;
}

double pauli_z_coefficient(const std::vector<double>& diag, unsigned mask) {
  double acc = 0.0;
  for (unsigned s = 0; s < diag.size(); ++s) {
    acc += z_string_sign(mask, s) * diag[s];
  }
  return acc / static_cast<double>(diag.size());
}

}  // namespace ripsim
