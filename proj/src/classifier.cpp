#include "pulsestream/classifier.hpp"

#include <cmath>
#include <string>

#include "pulsestream/error.hpp"

namespace pulsestream {

namespace {

void check_tolerance(double tol) {
  if (!(tol > 0.0 && tol < 0.5)) {
    throw RangeError("classifier tolerance must lie in (0, 0.5), got " +
                     std::to_string(tol));
  }
}

}  // namespace

std::string_view to_string(Brightness label) {
  switch (label) {
    case Brightness::Dark:
      return "Dark";
    case Brightness::Bright:
      return "Bright";
    case Brightness::Intermediate:
      return "Intermediate";
  }
  return "unknown";
}

std::string_view to_string(StateFamily family) {
  switch (family) {
    case StateFamily::SinglePhoton:
      return "single_photon";
    case StateFamily::Coherent:
      return "coherent";
  }
  return "unknown";
}

Brightness label_for(double beta, double beta_max, double tol) {
  if (beta < tol * beta_max) return Brightness::Dark;
  if (beta > (1.0 - tol) * beta_max) return Brightness::Bright;
  return Brightness::Intermediate;
}

Classification classify_fock(const StateVector& state,
                             const ModePhases& detection_phases, double tol) {
  check_tolerance(tol);
  const double norm = state.norm();
  if (norm == 0.0) {
    throw DegenerateInputError("cannot classify the zero vector");
  }
  const double photons = state.mean_photon_number();
  if (photons == 0.0) {
    throw DegenerateInputError("the vacuum carries no photons to classify");
  }
  Classification c;
  c.tol = tol;
  c.beta = apply_field(state, detection_phases).norm() / norm;
  c.beta_max = std::sqrt(static_cast<double>(state.modes()) * photons);
  c.label = label_for(c.beta, c.beta_max, tol);
  return c;
}

Classification classify_coherent(const CoherentSpec& spec,
                                 const ModePhases& detection_phases,
                                 double tol) {
  check_tolerance(tol);
  const std::size_t modes = spec.phases.modes();
  if (detection_phases.modes() != modes) {
    throw DimensionError("detection phases do not match the mode count");
  }
  if (spec.alpha == Complex{}) {
    throw DegenerateInputError(
        "alpha = 0 is the vacuum, which is trivially dark");
  }
  Complex sum{};
  for (std::size_t m = 0; m < modes; ++m) {
    sum += std::polar(1.0, spec.phases[m] + detection_phases[m]);
  }
  Classification c;
  c.tol = tol;
  c.beta = std::abs(sum) / std::sqrt(static_cast<double>(modes));
  c.beta_max = std::sqrt(static_cast<double>(modes));
  c.label = label_for(c.beta, c.beta_max, tol);
  return c;
}

std::vector<ScanPoint> scan_phase(std::size_t modes, StateFamily family,
                                  std::size_t grid_points, double tol) {
  if (modes < 2) {
    throw RangeError("phase scan needs at least two modes");
  }
  if (grid_points < 2 * modes) {
    throw RangeError("phase grid needs at least 2M = " +
                     std::to_string(2 * modes) + " points");
  }
  const ModePhases detection = ModePhases::zeros(modes);
  std::vector<ScanPoint> out;
  out.reserve(grid_points);
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double phase =
        kTwoPi * static_cast<double>(k) / static_cast<double>(grid_points);
    const ModePhases locked = ModePhases::locked(modes, phase);
    Classification c;
    if (family == StateFamily::SinglePhoton) {
      c = classify_fock(single_photon_state(locked), detection, tol);
    } else {
      c = classify_coherent(CoherentSpec{Complex{1.0}, locked}, detection, tol);
    }
    out.push_back({phase, c});
  }
  return out;
}

}  // namespace pulsestream
