#pragma once

#include <cstdint>

namespace pulsestream {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact

// Unit conversions applied once at the CLI boundary; the library is SI only.
namespace units {
inline constexpr double nm_to_m(double nm) { return nm * 1e-9; }
inline constexpr double m_to_nm(double m) { return m * 1e9; }
inline constexpr double mm_to_m(double mm) { return mm * 1e-3; }
inline constexpr double m_to_mm(double m) { return m * 1e3; }
inline constexpr double ns_to_s(double ns) { return ns * 1e-9; }
inline constexpr double s_to_ns(double s) { return s * 1e9; }
inline constexpr double ms_to_s(double ms) { return ms * 1e-3; }
inline constexpr double s_to_ms(double s) { return s * 1e3; }
}  // namespace units

// Plane-mirror cavity around a gain medium. SI units throughout.
struct CavityDesign {
  double lambda0 = 0.0;         // centre wavelength, m
  double dlambda_g = 0.0;       // gain bandwidth, m
  double length = 0.0;          // cavity length L, m
  double n_index = 1.0;         // refractive index
  double pulse_duration = 0.0;  // s
  double rep_period = 0.0;      // s

  // Throws ConfigurationError on non-positive lengths/times, n < 1 or
  // dlambda_g >= lambda0.
  void validate() const;
};

// pi c / (n L), rad/s
double free_spectral_range(const CavityDesign& design);

// 2 pi c dlambda_g / lambda0^2, rad/s
double gain_bandwidth(const CavityDesign& design);

// floor(gain_bandwidth / free_spectral_range): modes fully inside the gain
// band. Fewer than two modes throws ConfigurationError.
std::int64_t mode_count(const CavityDesign& design);

// Order-of-magnitude figures quoted in the literature for the Ti:Sapphire
// example (780 nm, 30 nm, 250 mm), reported next to our own arithmetic.
inline constexpr double kPublishedGainBandwidth = 6e13;
inline constexpr double kPublishedModeCount = 4e4;
inline constexpr double kPublishedRatio = 2.5e-5;

struct RatioReport {
  double delta_omega = 0.0;
  double delta_omega_g = 0.0;
  std::int64_t modes = 0;
  double theory_ratio = 0.0;    // bright / dark = 1 / (M - 1)
  double measured_ratio = 0.0;  // pulse_duration / rep_period
  bool orders_match = false;    // |log10(theory / measured)| < 1
};

RatioReport ratio_report(const CavityDesign& design);

}  // namespace pulsestream
