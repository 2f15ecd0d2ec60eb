#include "pulsestream/pulse_train.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "pulsestream/error.hpp"
#include "pulsestream/format.hpp"

namespace pulsestream {

void LaserField::validate() const {
  if (n_side < 1) {
    throw RangeError("n_side must be >= 1 (one mode does not interfere)");
  }
  if (!(delta_omega > 0.0) || !std::isfinite(delta_omega)) {
    throw RangeError("delta_omega must be positive and finite");
  }
  if (!std::isfinite(e0) || !std::isfinite(phi) || !std::isfinite(omega0)) {
    throw RangeError("field parameters must be finite");
  }
}

double amplitude_closed(const LaserField& field, double t_prime) {
  const double x = 0.5 * field.delta_omega * t_prime;
  const double n = std::nearbyint(x / std::numbers::pi);
  const double d = x - n * std::numbers::pi;
  const int m = field.closed_form_m();
  // sin((M+1)(n pi + d)) / sin(n pi + d) = (-1)^{nM} sin((M+1) d) / sin(d)
  const bool odd = std::fmod(std::abs(n) * m, 2.0) == 1.0;
  const double sign = odd ? -1.0 : 1.0;
  const double s = std::sin(d);
  if (std::abs(s) < 1e-12) {
    return sign * field.e0 * (m + 1);
  }
  return sign * field.e0 * std::sin((m + 1) * d) / s;
}

Complex amplitude_direct(const LaserField& field, double t_prime) {
  const double w = field.delta_omega * t_prime;
  Complex sum{};
  for (int m = -field.n_side; m <= field.n_side; ++m) {
    sum += std::polar(field.e0, m * w);
  }
  return sum;
}

namespace {

void check_grid(const LaserField& field, std::size_t samples_per_period,
                std::size_t periods) {
  field.validate();
  if (samples_per_period < 2) {
    throw RangeError("need at least two samples per period");
  }
  if (periods < 1) {
    throw RangeError("need at least one period");
  }
}

PulseSeries empty_series(const LaserField& field,
                         std::size_t samples_per_period, std::size_t periods) {
  PulseSeries s;
  s.field = field;
  s.samples_per_period = samples_per_period;
  s.periods = periods;
  const std::size_t needed = 4 * static_cast<std::size_t>(field.mode_total());
  if (samples_per_period < needed) {
    s.warnings.push_back("under-resolved: " +
                         std::to_string(samples_per_period) +
                         " samples per period, main lobe needs >= " +
                         std::to_string(needed));
  }
  const std::size_t total = samples_per_period * periods;
  s.t_prime.reserve(total);
  s.intensity.reserve(total);
  return s;
}

}  // namespace

PulseSeries intensity_series(const LaserField& field,
                             std::size_t samples_per_period,
                             std::size_t periods) {
  check_grid(field, samples_per_period, periods);
  PulseSeries s = empty_series(field, samples_per_period, periods);
  const double dt = s.time_step();
  const double offset = field.time_offset();
  for (std::size_t k = 0; k < samples_per_period * periods; ++k) {
    const double t_prime = static_cast<double>(k) * dt + offset;
    const double a = amplitude_closed(field, t_prime);
    s.t_prime.push_back(t_prime);
    s.intensity.push_back(a * a);
  }
  return s;
}

PulseSeries unlocked_intensity(const LaserField& field, std::uint64_t seed,
                               std::size_t samples_per_period,
                               std::size_t periods) {
  check_grid(field, samples_per_period, periods);
  PulseSeries s = empty_series(field, samples_per_period, periods);
  s.locked = false;
  s.seed = seed;

  std::mt19937_64 rng(seed);
  std::vector<double> phases(static_cast<std::size_t>(field.mode_total()));
  for (double& p : phases) {
    // 53 random mantissa bits; the stdlib distributions are not portable.
    p = kTwoPi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }

  const double dt = s.time_step();
  for (std::size_t k = 0; k < samples_per_period * periods; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double w = field.delta_omega * t;
    Complex sum{};
    for (int m = -field.n_side; m <= field.n_side; ++m) {
      sum += std::polar(field.e0, m * w + phases[m + field.n_side]);
    }
    s.t_prime.push_back(t);
    s.intensity.push_back(std::norm(sum));
  }
  return s;
}

PulseMetrics pulse_metrics(const PulseSeries& series) {
  const std::size_t n = series.samples_per_period;
  if (n < 2 || series.intensity.size() < n) {
    throw ResolutionError("series does not cover a full period");
  }
  const auto first = series.intensity.begin();
  const std::size_t peak_index =
      static_cast<std::size_t>(std::max_element(first, first + n) - first);
  const double peak = series.intensity[peak_index];
  const double half = 0.5 * peak;
  auto at = [&](std::ptrdiff_t k) {
    const auto len = static_cast<std::ptrdiff_t>(n);
    return series.intensity[static_cast<std::size_t>(
        ((static_cast<std::ptrdiff_t>(peak_index) + k) % len + len) % len)];
  };

  // Distance in samples from the peak to the half-max crossing on one side.
  auto crossing = [&](int dir) -> double {
    for (std::size_t k = 1; k < n; ++k) {
      const double inner = at(dir * static_cast<std::ptrdiff_t>(k - 1));
      const double outer = at(dir * static_cast<std::ptrdiff_t>(k));
      if (outer < half) {
        return static_cast<double>(k - 1) + (inner - half) / (inner - outer);
      }
    }
    throw ResolutionError("no half-maximum crossing within one period");
  };
  const double right = crossing(+1);
  const double left = crossing(-1);
  const double above = std::floor(right) + std::floor(left) + 1.0;
  if (above < 3.0) {
    throw ResolutionError(
        "main lobe spans fewer than three samples above half maximum");
  }

  PulseMetrics m;
  m.period = series.field.period();
  m.fwhm = (left + right) * series.time_step();
  m.duty_ratio = m.fwhm / m.period;
  m.peak = peak;
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += series.intensity[k];
  m.mean_intensity = sum / static_cast<double>(n);
  return m;
}

nlohmann::json series_header_json(const PulseSeries& s) {
  nlohmann::json h;
  h["locked"] = s.locked;
  h["n_side"] = s.field.n_side;
  h["mode_total"] = s.field.mode_total();
  h["delta_omega"] = round_to_output(s.field.delta_omega);
  h["phi"] = round_to_output(s.field.phi);
  h["e0"] = round_to_output(s.field.e0);
  h["omega0"] = round_to_output(s.field.omega0);
  h["samples_per_period"] = s.samples_per_period;
  h["periods"] = s.periods;
  h["time_step"] = round_to_output(s.time_step());
  if (!s.locked) h["seed"] = s.seed;
  h["warnings"] = s.warnings;
  return h;
}

nlohmann::json series_json(const PulseSeries& s) {
  nlohmann::json t = nlohmann::json::array();
  nlohmann::json i = nlohmann::json::array();
  for (std::size_t k = 0; k < s.intensity.size(); ++k) {
    t.push_back(round_to_output(s.t_prime[k]));
    i.push_back(round_to_output(s.intensity[k]));
  }
  return {{"header", series_header_json(s)}, {"t_prime", t}, {"intensity", i}};
}

nlohmann::json metrics_json(const PulseMetrics& m) {
  return {{"fwhm", round_to_output(m.fwhm)},
          {"period", round_to_output(m.period)},
          {"duty_ratio", round_to_output(m.duty_ratio)},
          {"peak", round_to_output(m.peak)},
          {"mean_intensity", round_to_output(m.mean_intensity)}};
}

void write_series_csv(std::ostream& os, const PulseSeries& s,
                      const PulseMetrics* metrics) {
  os << "# locked=" << (s.locked ? "true" : "false") << '\n'
     << "# n_side=" << s.field.n_side << '\n'
     << "# mode_total=" << s.field.mode_total() << '\n'
     << "# delta_omega=" << format_number(s.field.delta_omega) << '\n'
     << "# phi=" << format_number(s.field.phi) << '\n'
     << "# e0=" << format_number(s.field.e0) << '\n'
     << "# omega0=" << format_number(s.field.omega0) << '\n'
     << "# samples_per_period=" << s.samples_per_period << '\n'
     << "# periods=" << s.periods << '\n'
     << "# time_step=" << format_number(s.time_step()) << '\n';
  if (!s.locked) os << "# seed=" << s.seed << '\n';
  for (const auto& w : s.warnings) os << "# warning=" << w << '\n';
  os << "t_prime,intensity\n";
  for (std::size_t k = 0; k < s.intensity.size(); ++k) {
    os << format_number(s.t_prime[k]) << ',' << format_number(s.intensity[k])
       << '\n';
  }
  if (metrics) {
    os << "# fwhm=" << format_number(metrics->fwhm) << '\n'
       << "# period=" << format_number(metrics->period) << '\n'
       << "# duty_ratio=" << format_number(metrics->duty_ratio) << '\n'
       << "# peak=" << format_number(metrics->peak) << '\n'
       << "# mean_intensity=" << format_number(metrics->mean_intensity)
       << '\n';
  }
}

}  // namespace pulsestream
