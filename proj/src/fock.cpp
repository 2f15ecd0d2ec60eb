#include "pulsestream/fock.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pulsestream/error.hpp"

namespace pulsestream {

unsigned total_photons(const Occupation& occ) {
  return std::accumulate(occ.begin(), occ.end(), 0u);
}

double reduce_phase(double theta) {
  if (!std::isfinite(theta)) {
    throw RangeError("phase must be finite");
  }
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // r + 2pi can round up to exactly 2pi for tiny negative inputs.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

ModePhases::ModePhases(std::vector<double> theta) : theta_(std::move(theta)) {
  if (theta_.empty()) {
    throw RangeError("ModePhases needs at least one mode");
  }
  for (double& t : theta_) t = reduce_phase(t);
}

ModePhases ModePhases::zeros(std::size_t modes) {
  return ModePhases(std::vector<double>(modes, 0.0));
}

ModePhases ModePhases::locked(std::size_t modes, double step) {
  std::vector<double> theta(modes);
  for (std::size_t m = 0; m < modes; ++m) {
    theta[m] = static_cast<double>(m) * step;
  }
  return ModePhases(std::move(theta));
}

Complex ModePhases::phasor(std::size_t m) const {
  return std::polar(1.0, theta_.at(m));
}

namespace {

void prune_terms(StateVector::Terms& terms, double threshold) {
  std::erase_if(terms, [threshold](const auto& kv) {
    return std::abs(kv.second) < threshold;
  });
}

void require_same_modes(const StateVector& a, const StateVector& b) {
  if (a.modes() != b.modes()) {
    throw DimensionError("mode count mismatch: " + std::to_string(a.modes()) +
                         " vs " + std::to_string(b.modes()));
  }
}

void require_mode(const StateVector& s, std::size_t mode) {
  if (mode >= s.modes()) {
    throw RangeError("mode index " + std::to_string(mode) +
                     " out of range for " + std::to_string(s.modes()) +
                     " modes");
  }
}

}  // namespace

StateVector::StateVector(std::size_t modes, unsigned cutoff, Terms terms,
                         double prune)
    : modes_(modes), cutoff_(cutoff), prune_(prune), terms_(std::move(terms)) {
  if (modes_ == 0) {
    throw RangeError("a state needs at least one mode");
  }
  for (const auto& [occ, amp] : terms_) {
    if (occ.size() != modes_) {
      throw DimensionError("occupation tuple has " +
                           std::to_string(occ.size()) + " entries, expected " +
                           std::to_string(modes_));
    }
    if (total_photons(occ) > cutoff_) {
      throw RangeError("occupation exceeds photon cutoff " +
                       std::to_string(cutoff_));
    }
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
      throw RangeError("amplitude must be finite");
    }
  }
  prune_terms(terms_, prune_);
}

StateVector StateVector::from_terms(
    std::size_t modes, unsigned cutoff,
    std::initializer_list<std::pair<Occupation, Complex>> terms) {
  Terms map;
  for (const auto& [occ, amp] : terms) map[occ] += amp;
  return StateVector(modes, cutoff, std::move(map));
}

StateVector StateVector::vacuum(std::size_t modes, unsigned cutoff) {
  return StateVector(modes, cutoff, {{Occupation(modes, 0u), Complex{1.0}}});
}

StateVector StateVector::basis(Occupation occ, unsigned cutoff) {
  const std::size_t modes = occ.size();
  return StateVector(modes, cutoff, {{std::move(occ), Complex{1.0}}});
}

Complex StateVector::amplitude(const Occupation& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Complex{} : it->second;
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& [occ, amp] : terms_) s += std::norm(amp);
  return s;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw DegenerateInputError("cannot normalize the zero vector");
  }
  return Complex{1.0 / n} * *this;
}

bool StateVector::in_photon_sector(unsigned n) const {
  for (const auto& [occ, amp] : terms_) {
    if (total_photons(occ) != n) return false;
  }
  return true;
}

double StateVector::mean_photon_number() const {
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& [occ, amp] : terms_) {
    const double p = std::norm(amp);
    weighted += p * total_photons(occ);
    total += p;
  }
  if (total == 0.0) {
    throw DegenerateInputError("photon number of the zero vector");
  }
  return weighted / total;
}

StateVector operator+(const StateVector& a, const StateVector& b) {
  require_same_modes(a, b);
  StateVector::Terms terms = a.terms_;
  for (const auto& [occ, amp] : b.terms_) terms[occ] += amp;
  return StateVector(a.modes_, std::max(a.cutoff_, b.cutoff_), std::move(terms),
                     std::max(a.prune_, b.prune_));
}

StateVector operator-(const StateVector& a, const StateVector& b) {
  return a + Complex{-1.0} * b;
}

StateVector operator*(Complex c, const StateVector& s) {
  StateVector::Terms terms;
  for (const auto& [occ, amp] : s.terms_) terms.emplace(occ, c * amp);
  return StateVector(s.modes_, s.cutoff_, std::move(terms), s.prune_);
}

StateVector annihilate(const StateVector& state, std::size_t mode) {
  require_mode(state, mode);
  StateVector::Terms out;
  for (const auto& [occ, amp] : state.terms()) {
    const unsigned n = occ[mode];
    if (n == 0) continue;
    Occupation lowered = occ;
    --lowered[mode];
    out[std::move(lowered)] += std::sqrt(static_cast<double>(n)) * amp;
  }
  return StateVector(state.modes(), state.cutoff(), std::move(out),
                     state.prune_threshold());
}

StateVector create(const StateVector& state, std::size_t mode) {
  require_mode(state, mode);
  StateVector::Terms out;
  for (const auto& [occ, amp] : state.terms()) {
    if (total_photons(occ) + 1 > state.cutoff()) continue;
    Occupation raised = occ;
    const unsigned n = raised[mode]++;
    out[std::move(raised)] += std::sqrt(static_cast<double>(n + 1)) * amp;
  }
  return StateVector(state.modes(), state.cutoff(), std::move(out),
                     state.prune_threshold());
}

StateVector apply_field(const StateVector& state, const ModePhases& phases) {
  if (phases.modes() != state.modes()) {
    throw DimensionError("field has " + std::to_string(phases.modes()) +
                         " modes but state has " +
                         std::to_string(state.modes()));
  }
  std::vector<Complex> phasors(state.modes());
  for (std::size_t m = 0; m < state.modes(); ++m) {
    phasors[m] = phases.phasor(m);
  }
  StateVector::Terms out;
  for (const auto& [occ, amp] : state.terms()) {
    Occupation lowered = occ;
    for (std::size_t m = 0; m < occ.size(); ++m) {
      const unsigned n = occ[m];
      if (n == 0) continue;
      --lowered[m];
      out[lowered] += phasors[m] * std::sqrt(static_cast<double>(n)) * amp;
      ++lowered[m];
    }
  }
  return StateVector(state.modes(), state.cutoff(), std::move(out),
                     state.prune_threshold());
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_modes(a, b);
  const auto& small = a.size() <= b.size() ? a.terms() : b.terms();
  const auto& large = a.size() <= b.size() ? b.terms() : a.terms();
  const bool a_is_small = a.size() <= b.size();
  Complex sum{};
  for (const auto& [occ, amp] : small) {
    auto it = large.find(occ);
    if (it == large.end()) continue;
    sum += a_is_small ? std::conj(amp) * it->second
                      : std::conj(it->second) * amp;
  }
  return sum;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  StateVector::Terms out;
  for (const auto& [occ_a, amp_a] : a.terms()) {
    for (const auto& [occ_b, amp_b] : b.terms()) {
      Occupation joined = occ_a;
      joined.insert(joined.end(), occ_b.begin(), occ_b.end());
      out.emplace(std::move(joined), amp_a * amp_b);
    }
  }
  return StateVector(a.modes() + b.modes(), a.cutoff() + b.cutoff(),
                     std::move(out),
                     std::max(a.prune_threshold(), b.prune_threshold()));
}

}  // namespace pulsestream
