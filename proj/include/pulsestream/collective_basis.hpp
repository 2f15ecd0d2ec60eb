#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pulsestream/fock.hpp"

namespace pulsestream {

enum class BasisKind { Hadamard, Dft };

std::string_view to_string(BasisKind kind);

// Unitary change of basis c_j = sum_m O[j][m] a_m between mode operators and
// collective operators. Row 0 is the uniform (symmetric) row that supports
// the bright state; the remaining rows support dark states.
//
// Hadamard: Sylvester order, O[j][m] = (-1)^{popcount(j & m)} / sqrt(M), only
// for M a power of two. Row 1 alternates sign from mode to mode.
// Dft: O[j][m] = exp(2 pi i j m / M) / sqrt(M), any M >= 1. Row K is the one
// picked out by the locked phase step 2 pi K / M.
class CollectiveBasis {
 public:
  static CollectiveBasis build(std::size_t modes, BasisKind kind);

  std::size_t modes() const noexcept { return modes_; }
  BasisKind kind() const noexcept { return kind_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return matrix_[row * modes_ + col];
  }

  // max |(O O^dagger - I)_{jk}|
  double unitarity_defect() const;

  // O v
  std::vector<Complex> apply(std::span<const Complex> v) const;
  // O^dagger v
  std::vector<Complex> apply_adjoint(std::span<const Complex> v) const;

 private:
  CollectiveBasis(std::size_t modes, BasisKind kind,
                  std::vector<Complex> matrix)
      : modes_(modes), kind_(kind), matrix_(std::move(matrix)) {}

  std::size_t modes_;
  BasisKind kind_;
  std::vector<Complex> matrix_;
};

// Coefficients of a single-photon state on the collective kets
// |j'> = c_j^dagger |0>, with c_j dressed by the reference phases:
// c_j = sum_m O[j][m] e^{i phi_m} a_m. So coefficient j is
// sum_m O[j][m] e^{i phi_m} psi_m. Throws SectorError unless every term
// carries exactly one photon.
std::vector<Complex> to_collective(const StateVector& state,
                                   const CollectiveBasis& basis,
                                   const ModePhases& reference_phases);

// Inverse of to_collective; returns a single-photon state.
StateVector from_collective(std::span<const Complex> coefficients,
                            const CollectiveBasis& basis,
                            const ModePhases& reference_phases);

}  // namespace pulsestream
