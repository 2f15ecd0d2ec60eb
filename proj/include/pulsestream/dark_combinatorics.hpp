#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pulsestream/fock.hpp"

namespace pulsestream {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxEnumerationModes = 24;

// Exact binomial coefficient C(n, k).
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Number of balanced +-1 weight vectors of even length M modulo a global
// sign: M! / (2 ((M/2)!)^2) = C(M, M/2) / 2. Odd M throws UnsupportedError;
// enumerate_sign_states answers that case exactly (zero vectors).
BigInt count_pi_phase_dark(std::size_t modes);

// A +-1 weight vector stored as a bitmask of the negative entries. Mode 0 is
// always +1, which fixes the global sign.
struct SignPattern {
  std::size_t modes = 0;
  std::uint32_t negatives = 0;

  int sign(std::size_t m) const { return (negatives >> m) & 1u ? -1 : 1; }
  std::vector<int> signs() const;
  // theta_m in {0, pi}
  ModePhases phases() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

// Every zero-sum +-1 vector of length M, one per global-sign pair, found by
// brute force over all 2^(M-1) masks with mode 0 pinned to +1. The mask range
// is split across worker threads; output is in increasing mask order.
// M > kMaxEnumerationModes throws ResourceError.
std::vector<SignPattern> enumerate_sign_states(std::size_t modes,
                                               unsigned threads = 0);

// 2 pi K / M for K = 1..M-1.
std::vector<double> locked_dark_phases(std::size_t modes);

// One bright state against M - 1 locked dark states: 1 / (M - 1).
double bright_to_dark_ratio(std::int64_t modes);

struct DarkCensus {
  std::size_t modes = 0;
  std::optional<BigInt> analytic_count;        // unset for odd M
  std::optional<std::size_t> enumerated_count;  // unset unless enumerated
  std::size_t locked_dark_count = 0;
  std::size_t bright_count = 1;
  double ratio = 0.0;                           // bright / locked dark
};

DarkCensus dark_census(std::size_t modes, bool enumerate);

}  // namespace pulsestream
