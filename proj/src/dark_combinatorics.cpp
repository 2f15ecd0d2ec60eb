#include "pulsestream/dark_combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "pulsestream/error.hpp"

namespace pulsestream {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  // r stays an integer after every step: r = C(n - k + i, i).
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt count_pi_phase_dark(std::size_t modes) {
  if (modes < 2) {
    throw RangeError("dark-state count needs M >= 2");
  }
  if (modes % 2 != 0) {
    throw UnsupportedError(
        "closed-form count only holds for even M; odd M has no balanced "
        "+-1 vector, use enumerate_sign_states for the exact (empty) answer");
  }
  return binomial(modes, modes / 2) / 2;
}

std::vector<int> SignPattern::signs() const {
  std::vector<int> out(modes);
  for (std::size_t m = 0; m < modes; ++m) out[m] = sign(m);
  return out;
}

ModePhases SignPattern::phases() const {
  std::vector<double> theta(modes);
  for (std::size_t m = 0; m < modes; ++m) {
    theta[m] = sign(m) < 0 ? kTwoPi / 2.0 : 0.0;
  }
  return ModePhases(std::move(theta));
}

std::vector<SignPattern> enumerate_sign_states(std::size_t modes,
                                               unsigned threads) {
  if (modes == 0) {
    throw RangeError("enumeration needs at least one mode");
  }
  if (modes > kMaxEnumerationModes) {
    throw ResourceError("exhaustive enumeration is capped at M = " +
                        std::to_string(kMaxEnumerationModes) + " (2^M masks)");
  }
  // Bit m of a mask marks mode m as -1. Mode 0 stays +1, so masks are the
  // even numbers below 2^M.
  const std::uint64_t free_masks = std::uint64_t{1} << (modes - 1);
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, free_masks / 4096)));

  std::vector<std::vector<SignPattern>> parts(threads);
  auto worker = [&](unsigned t) {
    const std::uint64_t begin = free_masks * t / threads;
    const std::uint64_t end = free_masks * (t + 1) / threads;
    auto& out = parts[t];
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto mask = static_cast<std::uint32_t>(i << 1);
      const int negatives = std::popcount(mask);
      const int sum = static_cast<int>(modes) - 2 * negatives;
      if (sum == 0) out.push_back({modes, mask});
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
  }
  std::vector<SignPattern> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

std::vector<double> locked_dark_phases(std::size_t modes) {
  if (modes < 2) {
    throw RangeError("locked dark phases need M >= 2");
  }
  std::vector<double> out;
  out.reserve(modes - 1);
  for (std::size_t k = 1; k < modes; ++k) {
    out.push_back(kTwoPi * static_cast<double>(k) /
                  static_cast<double>(modes));
  }
  return out;
}

double bright_to_dark_ratio(std::int64_t modes) {
  if (modes < 2) {
    throw RangeError("bright-to-dark ratio needs M >= 2");
  }
  return 1.0 / static_cast<double>(modes - 1);
}

DarkCensus dark_census(std::size_t modes, bool enumerate) {
  DarkCensus c;
  c.modes = modes;
  if (modes % 2 == 0) c.analytic_count = count_pi_phase_dark(modes);
  if (enumerate) c.enumerated_count = enumerate_sign_states(modes).size();
  c.locked_dark_count = locked_dark_phases(modes).size();
  c.bright_count = 1;
  c.ratio = bright_to_dark_ratio(static_cast<std::int64_t>(modes));
  return c;
}

}  // namespace pulsestream
