#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace pulsestream {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Photons per mode. Length is the mode count M.
using Occupation = std::vector<unsigned>;

unsigned total_photons(const Occupation& occ);

// Per-mode phases, stored reduced to [0, 2pi).
class ModePhases {
 public:
  explicit ModePhases(std::vector<double> theta);

  static ModePhases zeros(std::size_t modes);

  // theta_m = m * step for m = 0..modes-1; mode 0 is the reference (theta = 0).
  static ModePhases locked(std::size_t modes, double step);

  std::size_t modes() const noexcept { return theta_.size(); }
  double operator[](std::size_t m) const { return theta_[m]; }
  std::span<const double> values() const noexcept { return theta_; }

  // e^{i theta_m}
  Complex phasor(std::size_t m) const;

 private:
  std::vector<double> theta_;
};

double reduce_phase(double theta);

// Pure state in a truncated multimode Fock space, stored sparsely as
// occupation tuple -> amplitude. Terms with |amplitude| below the prune
// threshold are dropped on construction, so a zero vector has no terms.
// Values are immutable once built; every operation returns a new state.
class StateVector {
 public:
  using Terms = std::map<Occupation, Complex>;

  static constexpr double kDefaultPrune = 1e-15;

  StateVector(std::size_t modes, unsigned cutoff, Terms terms = {},
              double prune = kDefaultPrune);

  static StateVector from_terms(
      std::size_t modes, unsigned cutoff,
      std::initializer_list<std::pair<Occupation, Complex>> terms);
  static StateVector vacuum(std::size_t modes, unsigned cutoff = 0);
  static StateVector basis(Occupation occ, unsigned cutoff);

  std::size_t modes() const noexcept { return modes_; }
  unsigned cutoff() const noexcept { return cutoff_; }
  double prune_threshold() const noexcept { return prune_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Complex amplitude(const Occupation& occ) const;
  double norm() const;
  double norm_squared() const;
  StateVector normalized() const;

  // True when every stored term carries exactly `n` photons.
  bool in_photon_sector(unsigned n) const;
  double mean_photon_number() const;

  friend StateVector operator+(const StateVector& a, const StateVector& b);
  friend StateVector operator-(const StateVector& a, const StateVector& b);
  friend StateVector operator*(Complex c, const StateVector& s);

 private:
  std::size_t modes_;
  unsigned cutoff_;
  double prune_;
  Terms terms_;
};

// a_mode, 0-based mode index.
StateVector annihilate(const StateVector& state, std::size_t mode);

// a_mode^dagger. Terms pushed above the cutoff are truncated away.
StateVector create(const StateVector& state, std::size_t mode);

// E = sum_m e^{i theta_m} a_m, with the overall field constant set to 1.
StateVector apply_field(const StateVector& state, const ModePhases& phases);

Complex inner_product(const StateVector& a, const StateVector& b);

// |a> (x) |b>, modes of `a` first.
StateVector tensor_product(const StateVector& a, const StateVector& b);

}  // namespace pulsestream
