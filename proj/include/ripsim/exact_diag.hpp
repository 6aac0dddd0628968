#pragma once

#include <vector>

#include "ripsim/device.hpp"

namespace ripsim {

// eigenvalue of the truncated full Hamiltonian, tagged with the bare basis
// state it overlaps most with
struct DressedLevelEntry {
  std::vector<int> levels;  // transmon excitation per qubit
  int photons = 0;
  double energy = 0.0;  // rad/s
};

struct ExactSpectrum {
  int n_qubits = 0;
  int max_transmon_level = 0;  // number of retained levels per transmon
  int max_photons = 0;
  std::vector<DressedLevelEntry> entries;  // deterministic label order

  // energy of the level labelled by the given transmon excitations and photon count
  double energy(const std::vector<int>& levels, int photons) const;

  // energy of a computational sector (bit i of label = excitation of qubit i)
  double sector_energy(unsigned label, int photons) const;
};

// diagonalize the full transmons-plus-cavity Hamiltonian in a truncated bare
// product basis and label every eigenvalue by maximal overlap
ExactSpectrum exact_dressed_energies(const DeviceConfig& config, int max_transmon_level,
                                     int max_photons);

}  // namespace ripsim
