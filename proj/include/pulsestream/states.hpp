#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "pulsestream/fock.hpp"

namespace pulsestream {

// Multimode coherent state |e^{i theta_1} alpha, ..., e^{i theta_M} alpha>.
// cutoff_prob bounds the Poisson tail discarded by the Fock truncation; the
// truncation is rejected if it would need more than max_photons photons or
// more than max_terms basis kets.
struct CoherentSpec {
  Complex alpha;
  ModePhases phases;
  double cutoff_prob = 1e-12;
  unsigned max_photons = 64;
  std::size_t max_terms = 5'000'000;
};

// P(N > n) for N ~ Poisson(mean), summed directly over the tail.
double poisson_tail(double mean, unsigned n);

// Smallest total-photon cutoff whose discarded Poisson(M |alpha|^2) tail is
// below spec.cutoff_prob. Throws CutoffError if it exceeds the spec limits.
unsigned coherent_photon_cutoff(const CoherentSpec& spec);

// (1/sqrt(M)) sum_m e^{-i theta_m} |m>; M >= 2.
StateVector single_photon_state(const ModePhases& phases);

// Per-mode complex amplitudes e^{i theta_m} alpha.
std::vector<Complex> coherent_mode_amplitudes(const CoherentSpec& spec);

StateVector coherent_state(const CoherentSpec& spec);

// Two-mode N-photon states with relative phase label phi_tilde. With field
// phases (0, phi_tilde) the field operator annihilates the dark state and
// maps the bright one to sqrt(2N) times the (N-1)-photon bright state.
StateVector two_mode_bright(int photons, double phi_tilde);
StateVector two_mode_dark(int photons, double phi_tilde);

enum class Branch { Bright, Dark };

// Expansion of |alpha, alpha> (bright) or |alpha, -alpha> (dark) over the
// two-mode N-photon bright/dark states at phi_tilde = 0, N = 0..n_max:
//   bright: e^{-|alpha|^2} (sqrt(2) alpha)^N / sqrt(N!)
//   dark:   e^{-|alpha|^2} (-sqrt(2) alpha)^N / sqrt(N!)
// If tail_tolerance is set and the Poisson(2|alpha|^2) weight beyond n_max
// exceeds it, throws CutoffError with the required n_max.
std::vector<Complex> coherent_bright_dark_expansion(
    Complex alpha, int n_max, Branch branch,
    std::optional<double> tail_tolerance = std::nullopt);

}  // namespace pulsestream
