#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "ripsim/effective_model.hpp"
#include "ripsim/pulses.hpp"

namespace ripsim {

// per-branch cavity coherent amplitudes. A branch is identified by its initial
// computational sector; refocusing pulses permute the physical label it
// currently occupies while the amplitude is carried across unchanged.
struct SectorTrajectory {
  int n_qubits = 0;
  std::vector<unsigned> branches;            // initial sector ids
  std::vector<unsigned> labels;              // current physical label per branch
  std::vector<std::complex<double>> alpha;   // coherent amplitude per branch
  double elapsed = 0.0;                      // wall time including pi-pulse slots

  static SectorTrajectory all_sectors(int n_qubits);
  static SectorTrajectory for_branches(int n_qubits, std::vector<unsigned> ids);

  int index_of(unsigned branch) const;  // -1 when absent
  // flip the tracked physical labels of the masked qubits
  void apply_mask(unsigned mask);
};

// accumulated pairwise phases mu_{A,B} between branches: real part is the
// relative phase, imaginary part the accumulated coherence loss
struct PhaseLedger {
  std::vector<unsigned> branches;
  std::vector<std::complex<double>> mu;  // row-major over branch indices

  static PhaseLedger zero_for(const SectorTrajectory& traj);

  std::complex<double>& at(int a, int b) { return mu[static_cast<std::size_t>(a) * branches.size() + b]; }
  std::complex<double> at(int a, int b) const { return mu[static_cast<std::size_t>(a) * branches.size() + b]; }
  std::complex<double> of(unsigned branch_a, unsigned branch_b) const;

  // Walsh coefficient of the accumulated real phases on a Z string; requires
  // the ledger to cover all 2^n sectors
  double pauli_phase(unsigned mask, int n_qubits) const;
};

// per-qubit pure-dephasing rates 1/T2 (zeros = decoherence off)
using DephasingRates = std::vector<double>;

struct PropagateOptions {
  const DephasingRates* dephasing = nullptr;
  // called once per accepted step with the time inside the window
  std::function<void(double)> on_step;
};

// upper bound on the closed-form step for a drive window
double stable_step(const EffectiveModel& model, const DriveSpec& drive, double duration);

// advance amplitudes and the phase ledger through one drive window using the
// closed-form integrating-factor step (exact for constant and linear
// envelopes; quadratic sub-step sampling otherwise)
void propagate(const EffectiveModel& model, const DriveSpec& drive, double duration,
               double dt, SectorTrajectory& traj, PhaseLedger& ledger,
               const PropagateOptions& opts = {});

// idle evolution: no drive, amplitudes decay with kappa only, static phases
// and decoherence keep accruing (used for pi-pulse slots)
void idle(const EffectiveModel& model, double duration, SectorTrajectory& traj,
          PhaseLedger& ledger, const DephasingRates* dephasing, bool static_phases);

// steady-state amplitude of a sector under a constant tone
std::complex<double> steady_alpha(const EffectiveModel& model, std::complex<double> eps0,
                                  double detuning, unsigned label);

// mean photon number for fixed sector weights (must be normalized)
double photon_number(const SectorTrajectory& traj, const std::vector<double>& weights);

// mean photon number for the equal superposition of two branches, weighted by
// the accumulated relative phase
double ramsey_photon_number(const SectorTrajectory& traj, const PhaseLedger& ledger,
                            unsigned branch_a, unsigned branch_b);

struct SteadyStateRates {
  double zz = 0.0;    // rad/s
  double zzz = 0.0;
  double zzzz = 0.0;
  bool chi_spread_exceeded = false;  // per-qubit shifts deviate >20% from mean
};

// closed-form phase accumulation rates of the weight-2/3/4 Z strings for a
// four-qubit register under a constant tone, evaluated at the mean shift
SteadyStateRates steady_state_rates(const EffectiveModel& model, std::complex<double> eps0,
                                    double detuning);

// drive-induced coherence decay rate of the fastest-decaying sector pair
double dephasing_rate(const EffectiveModel& model, std::complex<double> eps0,
                      double detuning);

}  // namespace ripsim
