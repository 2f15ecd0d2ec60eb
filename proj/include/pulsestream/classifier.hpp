#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "pulsestream/fock.hpp"
#include "pulsestream/states.hpp"

namespace pulsestream {

enum class Brightness { Dark, Bright, Intermediate };

std::string_view to_string(Brightness label);

inline constexpr double kDefaultTolerance = 1e-10;

// beta is the coupling to the field operator: ||E psi|| / ||psi|| for Fock
// states, |sum_m e^{i(theta_m + phi_m)}| / sqrt(M) for coherent states (the
// field eigenvalue per unit |alpha|). beta_max is the largest value reachable
// within the state's family. Labels use bands relative to beta_max:
//   Dark          beta < tol * beta_max
//   Bright        beta > (1 - tol) * beta_max
//   Intermediate  otherwise
struct Classification {
  double beta = 0.0;
  Brightness label = Brightness::Intermediate;
  double beta_max = 0.0;
  double tol = kDefaultTolerance;
};

Brightness label_for(double beta, double beta_max, double tol);

// beta_max = sqrt(M <N>), the coupling of the fully symmetric N-photon state
// (sqrt(M) for one photon, sqrt(2N) for the two-mode bright family). It
// bounds beta for every state because E^dagger E <= M * N.
Classification classify_fock(const StateVector& state,
                             const ModePhases& detection_phases,
                             double tol = kDefaultTolerance);

// Analytic: coherent states are eigenstates of E, no truncation involved.
// alpha == 0 throws DegenerateInputError (the vacuum is trivially dark).
Classification classify_coherent(const CoherentSpec& spec,
                                 const ModePhases& detection_phases,
                                 double tol = kDefaultTolerance);

enum class StateFamily { SinglePhoton, Coherent };

std::string_view to_string(StateFamily family);

struct ScanPoint {
  double phase;
  Classification classification;
};

// Locked phase step Phi = 2 pi k / grid_points, k = 0..grid_points-1, state
// built from ModePhases::locked(M, Phi), detected at zero phases.
// grid_points must be >= 2M; choosing a multiple of M puts every dark phase
// 2 pi K / M on the grid.
std::vector<ScanPoint> scan_phase(std::size_t modes, StateFamily family,
                                  std::size_t grid_points,
                                  double tol = kDefaultTolerance);

}  // namespace pulsestream
