#include "pulsestream/states.hpp"

#include <cmath>
#include <string>

#include "pulsestream/error.hpp"

namespace pulsestream {

namespace {

double log_poisson_term(double mean, unsigned n) {
  return -mean + n * std::log(mean) - std::lgamma(n + 1.0);
}

// C(n + k, k) in floating point; only used for a size guard.
double multiset_count(unsigned photons, std::size_t modes) {
  return std::exp(std::lgamma(photons + modes + 1.0) -
                  std::lgamma(photons + 1.0) - std::lgamma(modes + 1.0));
}

void expand_product(const std::vector<std::vector<Complex>>& factors,
                    std::size_t mode, unsigned budget, Occupation& occ,
                    Complex partial, StateVector::Terms& out) {
  if (mode == factors.size()) {
    out.emplace(occ, partial);
    return;
  }
  for (unsigned n = 0; n <= budget; ++n) {
    occ[mode] = n;
    expand_product(factors, mode + 1, budget - n, occ,
                   partial * factors[mode][n], out);
  }
  occ[mode] = 0;
}

StateVector two_mode_state(int photons, double phi_tilde, bool dark) {
  if (photons < 0) {
    throw RangeError("photon number must be non-negative, got " +
                     std::to_string(photons));
  }
  const unsigned total = static_cast<unsigned>(photons);
  const double log_prefactor =
      0.5 * (std::lgamma(total + 1.0) - total * std::log(2.0));
  const Complex global =
      dark ? Complex{1.0} : std::polar(1.0, -phi_tilde * total);
  StateVector::Terms terms;
  for (unsigned n = 0; n <= total; ++n) {
    const double magnitude =
        std::exp(log_prefactor - 0.5 * (std::lgamma(n + 1.0) +
                                        std::lgamma(total - n + 1.0)));
    const double sign = (dark && n % 2 == 1) ? -1.0 : 1.0;
    terms.emplace(Occupation{n, total - n},
                  global * sign * std::polar(magnitude, phi_tilde * n));
  }
  return StateVector(2, std::max(total, 1u), std::move(terms));
}

}  // namespace

double poisson_tail(double mean, unsigned n) {
  if (mean < 0.0 || !std::isfinite(mean)) {
    throw RangeError("Poisson mean must be finite and non-negative");
  }
  if (mean == 0.0) return 0.0;
  double tail = 0.0;
  for (unsigned k = n + 1;; ++k) {
    const double term = std::exp(log_poisson_term(mean, k));
    tail += term;
    if (k > mean && term < tail * 1e-17) break;
    if (k > n + 10000) break;
  }
  return tail;
}

unsigned coherent_photon_cutoff(const CoherentSpec& spec) {
  if (!(spec.cutoff_prob > 0.0 && spec.cutoff_prob < 1.0)) {
    throw RangeError("cutoff_prob must lie in (0, 1)");
  }
  const double mean =
      static_cast<double>(spec.phases.modes()) * std::norm(spec.alpha);
  unsigned n = 0;
  while (poisson_tail(mean, n) >= spec.cutoff_prob) ++n;
  if (n > spec.max_photons) {
    throw CutoffError("coherent truncation needs " + std::to_string(n) +
                          " photons, above the limit of " +
                          std::to_string(spec.max_photons),
                      n);
  }
  if (multiset_count(n, spec.phases.modes()) >
      static_cast<double>(spec.max_terms)) {
    throw CutoffError("coherent truncation at " + std::to_string(n) +
                          " photons over " +
                          std::to_string(spec.phases.modes()) +
                          " modes exceeds the term budget",
                      n);
  }
  return n;
}

StateVector single_photon_state(const ModePhases& phases) {
  const std::size_t modes = phases.modes();
  if (modes < 2) {
    throw DegenerateInputError(
        "single-photon interference needs at least two modes");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(modes));
  StateVector::Terms terms;
  for (std::size_t m = 0; m < modes; ++m) {
    Occupation occ(modes, 0u);
    occ[m] = 1;
    terms.emplace(std::move(occ), scale * std::conj(phases.phasor(m)));
  }
  return StateVector(modes, 1, std::move(terms));
}

std::vector<Complex> coherent_mode_amplitudes(const CoherentSpec& spec) {
  std::vector<Complex> out(spec.phases.modes());
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] = spec.phases.phasor(m) * spec.alpha;
  }
  return out;
}

StateVector coherent_state(const CoherentSpec& spec) {
  if (!std::isfinite(spec.alpha.real()) || !std::isfinite(spec.alpha.imag())) {
    throw RangeError("coherent amplitude must be finite");
  }
  const unsigned cutoff = coherent_photon_cutoff(spec);
  const std::size_t modes = spec.phases.modes();
  const std::vector<Complex> amps = coherent_mode_amplitudes(spec);
  const double envelope = std::exp(-0.5 * std::norm(spec.alpha));

  // factors[m][n] = e^{-|alpha|^2/2} beta_m^n / sqrt(n!)
  std::vector<std::vector<Complex>> factors(modes,
                                            std::vector<Complex>(cutoff + 1));
  for (std::size_t m = 0; m < modes; ++m) {
    factors[m][0] = envelope;
    for (unsigned n = 1; n <= cutoff; ++n) {
      factors[m][n] = factors[m][n - 1] * amps[m] / std::sqrt(double(n));
    }
  }
  StateVector::Terms terms;
  Occupation occ(modes, 0u);
  expand_product(factors, 0, cutoff, occ, Complex{1.0}, terms);
  return StateVector(modes, cutoff, std::move(terms));
}

StateVector two_mode_bright(int photons, double phi_tilde) {
  return two_mode_state(photons, phi_tilde, false);
}

StateVector two_mode_dark(int photons, double phi_tilde) {
  return two_mode_state(photons, phi_tilde, true);
}

std::vector<Complex> coherent_bright_dark_expansion(
    Complex alpha, int n_max, Branch branch,
    std::optional<double> tail_tolerance) {
  if (n_max < 0) {
    throw RangeError("n_max must be non-negative");
  }
  if (tail_tolerance) {
    const double mean = 2.0 * std::norm(alpha);
    unsigned required = 0;
    while (poisson_tail(mean, required) >= *tail_tolerance) ++required;
    if (required > static_cast<unsigned>(n_max)) {
      throw CutoffError("expansion needs n_max >= " + std::to_string(required),
                        required);
    }
  }
  const Complex step =
      (branch == Branch::Bright ? 1.0 : -1.0) * std::sqrt(2.0) * alpha;
  std::vector<Complex> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = std::exp(-std::norm(alpha));
  for (int n = 1; n <= n_max; ++n) {
    out[n] = out[n - 1] * step / std::sqrt(static_cast<double>(n));
  }
  return out;
}

}  // namespace pulsestream
