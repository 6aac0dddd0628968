#pragma once

#include <array>
#include <vector>

#include "ripsim/device.hpp"

namespace ripsim {

struct CouplingOptions {
  // require |omega_i - omega_r| > dispersive_min_ratio * |g_i|
  double dispersive_min_ratio = 10.0;
  // require dressed frequencies pairwise separated by degeneracy_ratio * max|J|
  double degeneracy_ratio = 100.0;
};

// static effective description of the coupled register: exchange couplings,
// Stark shift ladders, dressed frequencies and the diagonal interaction
// coefficients of the qubit subspace
struct EffectiveModel {
  DeviceConfig device;  // validated input, g back-solved where needed

  // per qubit, per level k in {0,1,2}
  std::vector<std::array<double, 3>> chi_levels;  // cavity pull chi_{k_i} (rad/s)
  std::vector<std::array<double, 3>> dressed;     // dressed energy of level k (rad/s)

  // ground-referenced dispersive shift chi_{1_i} - chi_{0_i}; this is the
  // measurable pull of the bus per excited qubit and what the drive dynamics use
  std::vector<double> chi;

  std::vector<double> xi;     // weight-1 diagonal coefficients (rad/s)
  std::vector<double> zeta2;  // weight-2 coefficients, n*n symmetric row-major
  double zeta3 = 0.0;         // identically zero at this order
  double zeta4 = 0.0;

  int n = 0;
  double omega_r = 0.0;
  double kappa = 0.0;

  double zeta(int i, int j) const { return zeta2[static_cast<std::size_t>(i) * n + j]; }

  // Stark shift of a computational sector relative to the all-ground sector
  double chi_sector(unsigned label) const;

  // diagonal energy of the always-on ZZ couplings in a sector (sign +1 for |0>)
  double zz_energy(unsigned label) const;

  double max_abs_chi() const;
  // mean of the per-qubit shifts; spread_exceeded set when any qubit deviates
  // from the mean by more than 20%
  double mean_chi(bool* spread_exceeded = nullptr) const;
};

// exchange coupling J_ij^{(lm)} for the process (l+1,m) <-> (l,m+1) on qubits i,j
double j_exchange(const DeviceConfig& config, int i, int j, int l, int m);

EffectiveModel compute_couplings(const DeviceConfig& config, const CouplingOptions& opts = {});

// assemble the 2^n diagonal from the weight-1/2 coefficients for a photon sector
std::vector<double> effective_diagonal_hamiltonian(const EffectiveModel& model,
                                                   int photon_sector);

// Walsh coefficient of a diagonal operator on a Z string: Tr[D sigma_mask] / 2^n
double pauli_z_coefficient(const std::vector<double>& diag, unsigned mask);

// parity sign of a sector on a Z string: +1 when the masked bits have even weight
inline int z_string_sign(unsigned mask, unsigned label) {
  return (__builtin_popcount(mask & label) & 1) ? -1 : 1;
}

}  // namespace ripsim
