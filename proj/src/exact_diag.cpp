#include "ripsim/exact_diag.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "ripsim/errors.hpp"

namespace ripsim {

namespace {

// basis index: transmon levels as the leading digits, photon number as the last
int flat_index(const std::vector<int>& levels, int photons, int n_lev, int n_ph) {
  int idx = 0;
  for (int l : levels) idx = idx * n_lev + l;
  return idx * (n_ph + 1) + photons;
}

}  // namespace

double ExactSpectrum::energy(const std::vector<int>& levels, int photons) const {
  if (static_cast<int>(levels.size()) != n_qubits) {
    throw OutOfRange("level list does not match qubit count");
  }
  for (int l : levels) {
    if (l < 0 || l >= max_transmon_level) {
      throw TruncationTooSmall("requested transmon level " + std::to_string(l) +
                               " outside truncation " + std::to_string(max_transmon_level));
    }
  }
  if (photons < 0 || photons > max_photons) {
    throw TruncationTooSmall("requested photon number " + std::to_string(photons) +
                             " outside truncation " + std::to_string(max_photons));
  }
  const std::size_t idx = static_cast<std::size_t>(
      flat_index(levels, photons, max_transmon_level, max_photons));
  return entries[idx].energy;
}

double ExactSpectrum::sector_energy(unsigned label, int photons) const {
  std::vector<int> levels(static_cast<std::size_t>(n_qubits), 0);
  for (int i = 0; i < n_qubits; ++i) levels[static_cast<std::size_t>(i)] = label >> i & 1u;
  return energy(levels, photons);
}

ExactSpectrum exact_dressed_energies(const DeviceConfig& config, int max_transmon_level,
                                     int max_photons) {
  config.validate();
  if (max_transmon_level < 3) {
    throw TruncationTooSmall("need at least 3 transmon levels");
  }
  if (max_photons < 2) {
    throw TruncationTooSmall("need at least 2 photons");
  }

  const int n = config.n();
  const int n_lev = max_transmon_level;
  const int n_ph = max_photons;
  std::size_t dim = static_cast<std::size_t>(n_ph + 1);
  for (int i = 0; i < n; ++i) dim *= static_cast<std::size_t>(n_lev);

  // enumerate bare states once; digit decomposition matches flat_index
  std::vector<std::vector<int>> levels_of(dim);
  std::vector<int> photons_of(dim);
  std::vector<double> bare_energy(dim, 0.0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    photons_of[idx] = static_cast<int>(rest % static_cast<std::size_t>(n_ph + 1));
    rest /= static_cast<std::size_t>(n_ph + 1);
    std::vector<int> lv(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
      lv[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(n_lev));
      rest /= static_cast<std::size_t>(n_lev);
    }
    levels_of[idx] = std::move(lv);
    double e = config.cavity.omega_r * photons_of[idx];
    for (int i = 0; i < n; ++i) {
      const auto& q = config.qubits[static_cast<std::size_t>(i)];
      const int k = levels_of[idx][static_cast<std::size_t>(i)];
      e += q.omega * k + 0.5 * q.delta * k * (k - 1);
    }
    bare_energy[idx] = e;
  }

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    h(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) = bare_energy[idx];
    // excitation-conserving exchange: qubit i lowers, photon raises
    const int p = photons_of[idx];
    if (p + 1 > n_ph) continue;
    for (int i = 0; i < n; ++i) {
      const int k = levels_of[idx][static_cast<std::size_t>(i)];
      if (k == 0) continue;
      std::vector<int> lv = levels_of[idx];
      lv[static_cast<std::size_t>(i)] = k - 1;
      const std::size_t jdx =
          static_cast<std::size_t>(flat_index(lv, p + 1, n_lev, n_ph));
      const double amp = config.qubits[static_cast<std::size_t>(i)].g *
                         std::sqrt(static_cast<double>(k)) *
                         std::sqrt(static_cast<double>(p + 1));
      h(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(jdx)) += amp;
      h(static_cast<Eigen::Index>(jdx), static_cast<Eigen::Index>(idx)) += amp;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();

  ExactSpectrum out;
  out.n_qubits = n;
  out.max_transmon_level = n_lev;
  out.max_photons = n_ph;
  out.entries.resize(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    // eigenvector with maximal weight on this bare state; scanning in eigenvalue
    // order breaks overlap ties deterministically toward the lowest eigenvalue
    Eigen::Index best = 0;
    double best_w = -1.0;
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(dim); ++k) {
      const double w = evecs(static_cast<Eigen::Index>(idx), k) *
                       evecs(static_cast<Eigen::Index>(idx), k);
      if (w > best_w) {
        best_w = w;
        best = k;
      }
    }
    out.entries[idx] = DressedLevelEntry{levels_of[idx], photons_of[idx], evals(best)};
  }
  return out;
}

}  // namespace ripsim
