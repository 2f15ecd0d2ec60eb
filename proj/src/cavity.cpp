#include "pulsestream/cavity.hpp"

#include <cmath>
#include <numbers>

#include "pulsestream/dark_combinatorics.hpp"
#include "pulsestream/error.hpp"

namespace pulsestream {

void CavityDesign::validate() const {
  const bool positive = lambda0 > 0.0 && dlambda_g > 0.0 && length > 0.0 &&
                        pulse_duration > 0.0 && rep_period > 0.0;
  const bool finite = std::isfinite(lambda0) && std::isfinite(dlambda_g) &&
                      std::isfinite(length) && std::isfinite(n_index) &&
                      std::isfinite(pulse_duration) &&
                      std::isfinite(rep_period);
  if (!positive || !finite) {
    throw ConfigurationError(
        "cavity lengths and times must be positive and finite");
  }
  if (n_index < 1.0) {
    throw ConfigurationError("refractive index must be >= 1");
  }
  if (dlambda_g >= lambda0) {
    throw ConfigurationError("gain bandwidth must be below the centre wavelength");
  }
}

double free_spectral_range(const CavityDesign& design) {
  design.validate();
  return std::numbers::pi * kSpeedOfLight / (design.n_index * design.length);
}

double gain_bandwidth(const CavityDesign& design) {
  design.validate();
  return 2.0 * std::numbers::pi * kSpeedOfLight * design.dlambda_g /
         (design.lambda0 * design.lambda0);
}

std::int64_t mode_count(const CavityDesign& design) {
  const double modes =
      std::floor(gain_bandwidth(design) / free_spectral_range(design));
  if (modes < 2.0) {
    throw ConfigurationError("cavity supports fewer than two modes");
  }
  return static_cast<std::int64_t>(modes);
}

RatioReport ratio_report(const CavityDesign& design) {
  design.validate();
  if (design.pulse_duration >= design.rep_period) {
    throw ConfigurationError(
        "pulse duration must be shorter than the repetition period");
  }
  RatioReport r;
  r.delta_omega = free_spectral_range(design);
  r.delta_omega_g = gain_bandwidth(design);
  r.modes = mode_count(design);
  r.theory_ratio = bright_to_dark_ratio(r.modes);
  r.measured_ratio = design.pulse_duration / design.rep_period;
  r.orders_match = std::abs(std::log10(r.theory_ratio / r.measured_ratio)) < 1.0;
  return r;
}

}  // namespace pulsestream
