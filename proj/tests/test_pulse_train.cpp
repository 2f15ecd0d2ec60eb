#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "pulsestream/error.hpp"
#include "pulsestream/pulse_train.hpp"

using namespace pulsestream;

namespace {

LaserField field_with(int n_side, double delta_omega = kTwoPi, double e0 = 1.0) {
  LaserField f;
  f.n_side = n_side;
  f.delta_omega = delta_omega;
  f.e0 = e0;
  return f;
}

// Half-width at half maximum of (sin((M+1)x) / ((M+1) sin x))^2 in x, by
// bisection on the first lobe.
double half_width_x(int mode_total) {
  auto g = [&](double x) {
    const double r = std::sin(mode_total * x) / (mode_total * std::sin(x));
    return r * r - 0.5;
  };
  double lo = 1e-9, hi = std::numbers::pi / mode_total;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("closed form at special points") {
  for (int n_side : {1, 3, 10}) {
    const auto f = field_with(n_side, 3.0, 1.7);
    const double peak = f.e0 * (f.closed_form_m() + 1);
    CHECK(amplitude_closed(f, 0.0) == peak);
    CHECK(amplitude_closed(f, f.period()) == doctest::Approx(peak).epsilon(1e-12));
    CHECK(amplitude_closed(f, -3 * f.period()) == doctest::Approx(peak).epsilon(1e-12));
    const double first_zero = kTwoPi / ((f.closed_form_m() + 1) * f.delta_omega);
    CHECK(std::abs(amplitude_closed(f, first_zero)) < 1e-12 * peak);
  }
}

TEST_CASE("direct sum at special points") {
  const auto f = field_with(4, 2.0, 0.5);
  CHECK(amplitude_direct(f, 0.0) == Complex{0.5 * 9});
  const auto three = field_with(1);
  // 1 + 2 cos(2 pi / 3)
  CHECK(std::abs(amplitude_direct(three, (kTwoPi / 3) / three.delta_omega)) < 1e-15);
}

TEST_CASE("closed form equals the direct sum on a fine grid") {
  for (int n_side : {1, 5, 50}) {
    const auto f = field_with(n_side, 1.3, 2.0);
    const double scale = f.e0 * f.mode_total();
    double worst = 0.0, worst_imag = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const double t = f.period() * (k / 10000.0 - 0.5);
      const Complex direct = amplitude_direct(f, t);
      worst = std::max(worst, std::abs(amplitude_closed(f, t) - direct.real()));
      worst_imag = std::max(worst_imag, std::abs(direct.imag()));
    }
    CHECK(worst <= 1e-10 * scale);
    CHECK(worst_imag <= 1e-10 * scale);
  }
}

TEST_CASE("intensity series peak, mean and periodicity") {
  for (int n_side : {1, 5, 20}) {
    const auto f = field_with(n_side, 5.0, 1.5);
    const std::size_t spp = 8 * f.mode_total();
    const auto s = intensity_series(f, spp, 3);
    REQUIRE(s.intensity.size() == 3 * spp);
    CHECK(s.warnings.empty());
    const double m1 = f.mode_total();
    CHECK(*std::max_element(s.intensity.begin(), s.intensity.end()) ==
          doctest::Approx(f.e0 * f.e0 * m1 * m1).epsilon(1e-12));

    // Riemann sum over one period / (E0^2 tau), against trapezoid quadrature
    const double integral =
        std::accumulate(s.intensity.begin(), s.intensity.begin() + spp, 0.0) *
        s.time_step();
    CHECK(integral / (f.e0 * f.e0 * f.period()) == doctest::Approx(m1).epsilon(1e-9));
    CHECK(oracle::mean_intensity_quadrature(n_side, 4096) == doctest::Approx(m1).epsilon(1e-9));

    const double peak = f.e0 * f.e0 * m1 * m1;
    for (std::size_t k = 0; k < 2 * spp; ++k) {
      CHECK(std::abs(s.intensity[k + spp] - s.intensity[k]) <= 1e-10 * peak);
    }
  }
}

TEST_CASE("a locked phase offset only shifts the train") {
  const std::size_t spp = 400;
  const std::size_t shift = 37;
  auto f = field_with(7, 2.5);
  const auto base = intensity_series(f, spp, 1);
  f.phi = kTwoPi * shift / spp;
  const auto moved = intensity_series(f, spp, 1);
  const double peak = *std::max_element(base.intensity.begin(), base.intensity.end());
  for (std::size_t k = 0; k < spp; ++k) {
    CHECK(std::abs(moved.intensity[k] - base.intensity[(k + shift) % spp]) <= 1e-10 * peak);
  }
}

TEST_CASE("carrier frequency does not enter the envelope") {
  auto f = field_with(6);
  const auto a = intensity_series(f, 128, 1);
  f.omega0 = 2.4e15;
  const auto b = intensity_series(f, 128, 1);
  CHECK(a.intensity == b.intensity);
}

TEST_CASE("pulse metrics") {
  const auto f = field_with(5, 3.0);
  const auto s = intensity_series(f, 2048, 1);
  const auto m = pulse_metrics(s);
  CHECK(m.period == doctest::Approx(kTwoPi / 3.0).epsilon(1e-12));
  CHECK(m.duty_ratio >= 0.5 / 11);
  CHECK(m.duty_ratio <= 2.0 / 11);
  CHECK(m.peak == doctest::Approx(121.0).epsilon(1e-12));
  CHECK(m.mean_intensity == doctest::Approx(11.0).epsilon(1e-9));

  // FWHM in x = dw t / 2 is twice the bisection half width
  const double expected = 2.0 * half_width_x(11) * 2.0 / f.delta_omega;
  CHECK(m.fwhm == doctest::Approx(expected).epsilon(1e-4));
}

TEST_CASE("metrics do not depend on where the peak falls in the window") {
  auto f = field_with(9);
  const auto a = pulse_metrics(intensity_series(f, 4000, 1));
  f.phi = 2.0;  // moves the peak into the interior
  const auto b = pulse_metrics(intensity_series(f, 4000, 1));
  CHECK(a.fwhm == doctest::Approx(b.fwhm).epsilon(1e-3));
}

TEST_CASE("duty ratio shrinks as modes are added") {
  double previous = 1.0;
  for (int n_side = 2; n_side <= 64; n_side *= 2) {
    const auto f = field_with(n_side);
    const auto m = pulse_metrics(intensity_series(f, 64 * f.mode_total(), 1));
    CHECK(m.duty_ratio < previous);
    CHECK(m.duty_ratio >= 0.5 / f.mode_total());
    CHECK(m.duty_ratio <= 2.0 / f.mode_total());
    previous = m.duty_ratio;
  }
}

TEST_CASE("resolution handling") {
  const auto f = field_with(5);
  const auto coarse = intensity_series(f, 16, 1);
  CHECK_FALSE(coarse.warnings.empty());
  const auto tiny = intensity_series(f, 4, 1);
  CHECK_THROWS_AS(pulse_metrics(tiny), ResolutionError);
  CHECK_NOTHROW(pulse_metrics(intensity_series(f, 4 * f.mode_total(), 1)));
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(intensity_series(field_with(0), 64, 1), RangeError);
  CHECK_THROWS_AS(intensity_series(field_with(2, -1.0), 64, 1), RangeError);
  CHECK_THROWS_AS(intensity_series(field_with(2), 64, 0), RangeError);
}

TEST_CASE("unlocked phases: deterministic, incoherent mean, no giant pulse") {
  const auto f = field_with(10);  // 21 modes
  const auto a = unlocked_intensity(f, 42, 4 * 21, 100);
  const auto b = unlocked_intensity(f, 42, 4 * 21, 100);
  CHECK(a.intensity == b.intensity);
  CHECK_FALSE(a.locked);

  const double m1 = f.mode_total();
  const double locked_peak = m1 * m1;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = unlocked_intensity(f, seed, 4 * 21, 100);
    const double mean =
        std::accumulate(s.intensity.begin(), s.intensity.end(), 0.0) / s.intensity.size();
    CHECK(mean == doctest::Approx(m1).epsilon(0.05));
    CHECK(*std::max_element(s.intensity.begin(), s.intensity.end()) < 0.5 * locked_peak);
  }
  const auto other = unlocked_intensity(f, 43, 4 * 21, 1);
  CHECK(other.intensity != std::vector<double>(a.intensity.begin(), a.intensity.begin() + 84));
}

TEST_CASE("CSV export layout") {
  const auto f = field_with(2);
  const auto s = intensity_series(f, 20, 1);
  const auto m = pulse_metrics(s);
  std::ostringstream os;
  write_series_csv(os, s, &m);
  const std::string text = os.str();
  CHECK(text.find("# n_side=2\n") != std::string::npos);
  CHECK(text.find("# delta_omega=6.28318530718\n") != std::string::npos);
  CHECK(text.find("t_prime,intensity\n0,25\n") != std::string::npos);
  CHECK(text.find("# fwhm=") != std::string::npos);
  std::size_t rows = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#' && line != "t_prime,intensity") ++rows;
  }
  CHECK(rows == 20);

  const auto j = series_json(s);
  CHECK(j["t_prime"].size() == 20);
  CHECK(j["header"]["mode_total"] == 5);
  CHECK(j["intensity"][0].get<double>() == 25.0);
}
