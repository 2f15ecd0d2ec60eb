#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pulsestream/fock.hpp"

namespace pulsestream {

// Mode-locked field A(t) = sum_{m=-n_side}^{n_side} E0 e^{i m (dw t + phi)}.
// The sum has mode_total() = 2 n_side + 1 terms; the closed form is written
// with M = 2 n_side, i.e. sin((M + 1) x) / sin(x). omega0 is the carrier and
// never enters the envelope.
struct LaserField {
  int n_side = 1;
  double e0 = 1.0;
  double delta_omega = kTwoPi;
  double phi = 0.0;
  double omega0 = 0.0;

  int mode_total() const { return 2 * n_side + 1; }
  int closed_form_m() const { return 2 * n_side; }
  double period() const { return kTwoPi / delta_omega; }
  // Shift from lab time t to the pulse-centred time t' = t + phi / dw.
  double time_offset() const { return phi / delta_omega; }

  void validate() const;
};

// E0 sin((M+1) dw t'/2) / sin(dw t'/2), evaluated after reducing dw t'/2 to
// the nearest multiple of pi so that pulse peaks stay well conditioned. Where
// |sin(dw t'/2)| < 1e-12 the limit E0 (M+1) (-1)^{nM} is returned.
double amplitude_closed(const LaserField& field, double t_prime);

// Direct mode summation at t'.
Complex amplitude_direct(const LaserField& field, double t_prime);

struct PulseSeries {
  LaserField field;
  std::size_t samples_per_period = 0;
  std::size_t periods = 0;
  bool locked = true;
  std::uint64_t seed = 0;
  std::vector<double> t_prime;
  std::vector<double> intensity;
  std::vector<std::string> warnings;

  double time_step() const {
    return field.period() / static_cast<double>(samples_per_period);
  }
};

// Uniform grid in lab time t_k = k tau / samples_per_period over `periods`
// periods, I = A(t_k + phi/dw)^2. Sampling below 4 (M+1) points per period is
// flagged in `warnings`, not rejected.
PulseSeries intensity_series(const LaserField& field,
                             std::size_t samples_per_period,
                             std::size_t periods);

// Same grid, but every mode gets an independent phase drawn uniformly from
// [0, 2 pi) by a seeded mt19937_64 (one draw per mode, in mode order).
PulseSeries unlocked_intensity(const LaserField& field, std::uint64_t seed,
                               std::size_t samples_per_period,
                               std::size_t periods);

struct PulseMetrics {
  double fwhm = 0.0;
  double period = 0.0;
  double duty_ratio = 0.0;
  double peak = 0.0;
  double mean_intensity = 0.0;
};

// FWHM of the main lobe around the largest sample of the first period, from
// linearly interpolated half-maximum crossings (the period wraps around).
// Throws ResolutionError if fewer than three samples sit above half maximum.
PulseMetrics pulse_metrics(const PulseSeries& series);

// CSV: '#'-prefixed header lines with the field and grid, a
// "t_prime,intensity" column header, one row per sample, then the metrics as
// '#' footer lines when given. Numbers use 12 significant digits.
void write_series_csv(std::ostream& os, const PulseSeries& series,
                      const PulseMetrics* metrics = nullptr);

nlohmann::json series_header_json(const PulseSeries& series);
nlohmann::json series_json(const PulseSeries& series);
nlohmann::json metrics_json(const PulseMetrics& metrics);

}  // namespace pulsestream
