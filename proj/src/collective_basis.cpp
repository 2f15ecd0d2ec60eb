#include "pulsestream/collective_basis.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "pulsestream/error.hpp"

namespace pulsestream {

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Hadamard:
      return "hadamard";
    case BasisKind::Dft:
      return "dft";
  }
  return "unknown";
}

CollectiveBasis CollectiveBasis::build(std::size_t modes, BasisKind kind) {
  if (modes == 0) {
    throw RangeError("collective basis needs at least one mode");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(modes));
  std::vector<Complex> matrix(modes * modes);

  switch (kind) {
    case BasisKind::Hadamard: {
      if (!std::has_single_bit(modes)) {
        throw UnsupportedBasisError(
            "no Sylvester-Hadamard basis for M = " + std::to_string(modes) +
            " (M must be a power of two); use the DFT basis instead");
      }
      for (std::size_t j = 0; j < modes; ++j) {
        for (std::size_t m = 0; m < modes; ++m) {
          const bool odd = std::popcount(j & m) % 2 == 1;
          matrix[j * modes + m] = odd ? -scale : scale;
        }
      }
      break;
    }
    case BasisKind::Dft: {
      for (std::size_t j = 0; j < modes; ++j) {
        for (std::size_t m = 0; m < modes; ++m) {
          // Reduce j*m mod M first so the angle stays exact for large M.
          const std::size_t k = (j * m) % modes;
          const double angle =
              kTwoPi * static_cast<double>(k) / static_cast<double>(modes);
          matrix[j * modes + m] = std::polar(scale, angle);
        }
      }
      break;
    }
  }
  return CollectiveBasis(modes, kind, std::move(matrix));
}

double CollectiveBasis::unitarity_defect() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < modes_; ++j) {
    for (std::size_t k = 0; k < modes_; ++k) {
      Complex s{};
      for (std::size_t m = 0; m < modes_; ++m) {
        s += (*this)(j, m) * std::conj((*this)(k, m));
      }
      if (j == k) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

std::vector<Complex> CollectiveBasis::apply(std::span<const Complex> v) const {
  if (v.size() != modes_) {
    throw DimensionError("vector length does not match basis size");
  }
  std::vector<Complex> out(modes_);
  for (std::size_t j = 0; j < modes_; ++j) {
    Complex s{};
    for (std::size_t m = 0; m < modes_; ++m) s += (*this)(j, m) * v[m];
    out[j] = s;
  }
  return out;
}

std::vector<Complex> CollectiveBasis::apply_adjoint(
    std::span<const Complex> v) const {
  if (v.size() != modes_) {
    throw DimensionError("vector length does not match basis size");
  }
  std::vector<Complex> out(modes_);
  for (std::size_t m = 0; m < modes_; ++m) {
    Complex s{};
    for (std::size_t j = 0; j < modes_; ++j) {
      s += std::conj((*this)(j, m)) * v[j];
    }
    out[m] = s;
  }
  return out;
}

std::vector<Complex> to_collective(const StateVector& state,
                                   const CollectiveBasis& basis,
                                   const ModePhases& reference_phases) {
  const std::size_t modes = state.modes();
  if (basis.modes() != modes || reference_phases.modes() != modes) {
    throw DimensionError("state, basis and reference phases disagree on M");
  }
  if (!state.in_photon_sector(1)) {
    throw SectorError(
        "collective decomposition is only defined for single-photon states");
  }
  std::vector<Complex> dressed(modes);
  for (const auto& [occ, amp] : state.terms()) {
    for (std::size_t m = 0; m < modes; ++m) {
      if (occ[m] == 1) {
        dressed[m] = reference_phases.phasor(m) * amp;
        break;
      }
    }
  }
  return basis.apply(dressed);
}

StateVector from_collective(std::span<const Complex> coefficients,
                            const CollectiveBasis& basis,
                            const ModePhases& reference_phases) {
  const std::size_t modes = basis.modes();
  if (coefficients.size() != modes || reference_phases.modes() != modes) {
    throw DimensionError("coefficients, basis and reference phases disagree");
  }
  const std::vector<Complex> dressed = basis.apply_adjoint(coefficients);
  StateVector::Terms terms;
  for (std::size_t m = 0; m < modes; ++m) {
    Occupation occ(modes, 0u);
    occ[m] = 1;
    terms.emplace(std::move(occ),
                  std::conj(reference_phases.phasor(m)) * dressed[m]);
  }
  return StateVector(modes, 1, std::move(terms));
}

}  // namespace pulsestream
