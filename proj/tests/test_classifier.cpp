#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pulsestream/classifier.hpp"
#include "pulsestream/collective_basis.hpp"
#include "pulsestream/error.hpp"

using namespace pulsestream;

namespace {
constexpr double kPi = kTwoPi / 2.0;
}

TEST_CASE("single-photon classification examples") {
  const auto zero4 = ModePhases::zeros(4);

  const auto bright = classify_fock(single_photon_state(ModePhases::locked(4, 0.0)), zero4);
  CHECK(bright.beta == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(bright.beta_max == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(bright.label == Brightness::Bright);

  const auto dark = classify_fock(single_photon_state(ModePhases::locked(4, kPi / 2)), zero4);
  CHECK(dark.beta < 1e-12);
  CHECK(dark.label == Brightness::Dark);

  // |sin(0.6)/sin(0.15)|/2 = 1.889218180288719... (extended precision)
  const auto mid = classify_fock(single_photon_state(ModePhases::locked(4, 0.3)), zero4);
  CHECK(mid.beta == doctest::Approx(1.8892181802887192).epsilon(1e-12));
  CHECK(mid.beta == doctest::Approx(oracle::locked_beta(4, 0.3)).epsilon(1e-12));
  CHECK(mid.label == Brightness::Intermediate);
}

TEST_CASE("coherent classification examples") {
  auto label = [](std::size_t m, double phi) {
    return classify_coherent({1.0, ModePhases::locked(m, phi)}, ModePhases::zeros(m)).label;
  };
  CHECK(label(2, kPi) == Brightness::Dark);
  CHECK(label(4, 3 * kPi / 2) == Brightness::Dark);
  CHECK(label(6, kTwoPi / 6) == Brightness::Dark);
  CHECK(label(6, 0.0) == Brightness::Bright);
}

TEST_CASE("classifier error paths") {
  const auto s = single_photon_state(ModePhases::zeros(2));
  CHECK_THROWS_AS(classify_fock(s, ModePhases::zeros(2), 0.0), RangeError);
  CHECK_THROWS_AS(classify_fock(s, ModePhases::zeros(2), 0.5), RangeError);
  CHECK_THROWS_AS(classify_fock(s - s, ModePhases::zeros(2)), DegenerateInputError);
  CHECK_THROWS_AS(classify_fock(StateVector::vacuum(2), ModePhases::zeros(2)),
                  DegenerateInputError);
  CHECK_THROWS_AS(classify_coherent({0.0, ModePhases::zeros(3)}, ModePhases::zeros(3)),
                  DegenerateInputError);
  CHECK_THROWS_AS(classify_coherent({1.0, ModePhases::zeros(3)}, ModePhases::zeros(2)),
                  DimensionError);
}

TEST_CASE("label bands") {
  CHECK(label_for(0.0, 2.0, 0.1) == Brightness::Dark);
  CHECK(label_for(0.19, 2.0, 0.1) == Brightness::Dark);
  CHECK(label_for(0.21, 2.0, 0.1) == Brightness::Intermediate);
  CHECK(label_for(1.79, 2.0, 0.1) == Brightness::Intermediate);
  CHECK(label_for(1.81, 2.0, 0.1) == Brightness::Bright);
}

TEST_CASE("multi-photon beta_max is reached by the bright family") {
  for (int n = 1; n <= 6; ++n) {
    const auto bright = classify_fock(two_mode_bright(n, 0.0), ModePhases::zeros(2));
    CHECK(bright.beta_max == doctest::Approx(std::sqrt(2.0 * n)).epsilon(1e-12));
    CHECK(bright.label == Brightness::Bright);
    const auto dark = classify_fock(two_mode_dark(n, 0.0), ModePhases::zeros(2));
    CHECK(dark.label == Brightness::Dark);
  }
}

TEST_CASE("truncated coherent Fock states classify like the analytic route") {
  for (double phi : {0.0, 0.3, kPi / 2, 2.0}) {
    const CoherentSpec spec{0.4, ModePhases::locked(4, phi)};
    const auto fock = classify_fock(coherent_state(spec), ModePhases::zeros(4));
    const auto analytic = classify_coherent(spec, ModePhases::zeros(4));
    CHECK(fock.beta / fock.beta_max ==
          doctest::Approx(analytic.beta / analytic.beta_max).epsilon(1e-9));
    CHECK(fock.label == analytic.label);
  }
}

TEST_CASE("label does not depend on a prior collective-basis round trip") {
  for (std::size_t m : {2u, 4u, 8u}) {
    const auto basis = CollectiveBasis::build(m, BasisKind::Hadamard);
    for (int k = 0; k < 4 * static_cast<int>(m); ++k) {
      const auto psi = single_photon_state(ModePhases::locked(m, kTwoPi * k / (4.0 * m)));
      const auto ref = ModePhases::zeros(m);
      const auto round = from_collective(to_collective(psi, basis, ref), basis, ref);
      CHECK(classify_fock(psi, ref).label == classify_fock(round, ref).label);
    }
  }
}

TEST_CASE("single-photon and coherent families agree on a 256-point grid") {
  for (std::size_t m : {2u, 3u, 4u, 5u, 6u, 8u}) {
    const auto sp = scan_phase(m, StateFamily::SinglePhoton, 256);
    const auto co = scan_phase(m, StateFamily::Coherent, 256);
    REQUIRE(sp.size() == 256);
    for (std::size_t k = 0; k < 256; ++k) {
      CHECK(sp[k].phase == co[k].phase);
      CHECK(std::abs(sp[k].classification.beta - co[k].classification.beta) < 1e-10);
      CHECK(sp[k].classification.label == co[k].classification.label);
      CHECK(sp[k].classification.beta ==
            doctest::Approx(oracle::locked_beta(static_cast<int>(m), sp[k].phase)).epsilon(1e-10));
    }
  }
}

TEST_CASE("scan finds M - 1 dark points and one bright point per period") {
  for (std::size_t m = 2; m <= 8; ++m) {
    for (auto family : {StateFamily::SinglePhoton, StateFamily::Coherent}) {
      const auto pts = scan_phase(m, family, 4 * m);
      int dark = 0, bright = 0;
      for (const auto& p : pts) {
        if (p.classification.label == Brightness::Dark) {
          ++dark;
          // dark exactly at multiples of 2 pi / M
          const double k = p.phase * m / kTwoPi;
          CHECK(std::abs(k - std::round(k)) < 1e-9);
        }
        if (p.classification.label == Brightness::Bright) {
          ++bright;
          CHECK(p.phase == 0.0);
        }
      }
      CHECK(dark == static_cast<int>(m) - 1);
      CHECK(bright == 1);
    }
  }
}

TEST_CASE("scan examples") {
  const auto two = scan_phase(2, StateFamily::SinglePhoton, 4);
  CHECK(two[0].classification.label == Brightness::Bright);
  CHECK(two[2].phase == doctest::Approx(kPi));
  CHECK(two[2].classification.label == Brightness::Dark);
  CHECK(two[1].classification.label == Brightness::Intermediate);

  const auto four = scan_phase(4, StateFamily::Coherent, 8);
  std::vector<double> darks;
  for (const auto& p : four) {
    if (p.classification.label == Brightness::Dark) darks.push_back(p.phase);
  }
  REQUIRE(darks.size() == 3);
  CHECK(darks[0] == doctest::Approx(kPi / 2));
  CHECK(darks[1] == doctest::Approx(kPi));
  CHECK(darks[2] == doctest::Approx(3 * kPi / 2));

  CHECK_THROWS_AS(scan_phase(4, StateFamily::Coherent, 7), RangeError);
}

TEST_CASE("beta at zero phase is sqrt(M) for both families") {
  for (std::size_t m : {2u, 3u, 4u, 8u, 16u, 32u}) {
    const auto zero = ModePhases::zeros(m);
    CHECK(std::abs(classify_fock(single_photon_state(zero), zero).beta - std::sqrt(double(m))) < 1e-12);
    CHECK(std::abs(classify_coherent({0.7, zero}, zero).beta - std::sqrt(double(m))) < 1e-12);
  }
}
