#include <cmath>
#include <limits>
#include <numbers>

#include <doctest.h>

#include "oamsense/sensitivity.hpp"

using namespace oam;

namespace {
constexpr double kPi = std::numbers::pi;

NoiseConfig with_loss(double loss) {
  NoiseConfig n;
  n.loss = loss;
  return n;
}

NoiseConfig with_dark(double rate) {
  NoiseConfig n;
  n.dark_rate = rate;
  return n;
}

NoiseConfig with_thermal(double nth, double t) {
  NoiseConfig n;
  n.n_thermal = nth;
  n.transmissivity = t;
  return n;
}
}  // namespace

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::ideal, Variant::loss, Variant::dark,
                    Variant::thermal}) {
    CHECK(parse_variant(variant_name(v)) == v);
  }
  CHECK(!parse_variant("bogus"));
}

TEST_CASE("ideal sensitivity at the optimum is the closed minimum") {
  const Scenario sc(1.0, 1, kPi / 4.0);
  const auto p = sensitivity_closed(Variant::ideal, sc);
  const double nb = sc.mean_photon_number();
  const double expected = 1.0 / (2.0 * std::sqrt(nb * (nb + 2.0)));
  CHECK(p.delta_phi == doctest::Approx(expected).epsilon(1e-14));
  CHECK(p.delta_phi == doctest::Approx(0.13786028238589162).epsilon(1e-13));
  CHECK(p.signal == doctest::Approx(1.0).epsilon(1e-14));

  // the optimum value scales as 1/ell at phi = pi/(4 ell)
  for (int ell : {2, 5, 10}) {
    const auto q =
        sensitivity_closed(Variant::ideal, Scenario(1.0, ell, kPi / (4.0 * ell)));
    CHECK(q.delta_phi == doctest::Approx(expected / ell).epsilon(1e-12));
  }
}

TEST_CASE("derivative-zero points are reported unbounded, not thrown") {
  const auto at_half_pi =
      sensitivity_closed(Variant::ideal, Scenario(1.0, 1, kPi / 2.0));
  CHECK(std::isinf(at_half_pi.delta_phi));

  const auto at_zero =
      sensitivity_closed(Variant::ideal, Scenario(1.0, 1, 0.0));
  CHECK(std::isinf(at_zero.delta_phi));

  // with loss the former optimum becomes a divergence as well
  const auto lossy = sensitivity_closed(Variant::loss,
                                        Scenario(1.0, 1, kPi / 4.0),
                                        with_loss(0.01));
  CHECK(lossy.delta_phi > 1.0);

  // vacuum input: constant signal everywhere
  const auto vac = sensitivity_closed(Variant::ideal, Scenario(0.0, 1, 0.3));
  CHECK(std::isinf(vac.delta_phi));
}

TEST_CASE("closed sensitivity equals the printed quotient away from zeros") {
  for (double r : {0.5, 1.0}) {
    for (int ell : {1, 3}) {
      for (int i = 1; i < 20; ++i) {
        const double phi = i * kPi / (2.0 * ell) / 20.0;
        if (std::abs(std::sin(4.0 * ell * phi)) < 0.05) continue;
        const Scenario sc(r, ell, phi);

        const double g1 = det_loss(sc, 0.02);
        const double g2 = det_slope_loss(sc, 0.02);
        const double raw =
            std::sqrt(1.0 - 1.0 / g1) / std::abs(g2 / std::pow(g1, 1.5));
        const auto p =
            sensitivity_closed(Variant::loss, sc, with_loss(0.02));
        CHECK(p.delta_phi == doctest::Approx(raw).epsilon(1e-11));

        const double d = 0.1;
        const double r1 = det_ideal(sc);
        const double r2 = det_slope_ideal(sc);
        const double raw_dark =
            std::sqrt(1.0 - std::exp(-4.0 * d) / r1) /
            (std::exp(-2.0 * d) * std::abs(r2 / std::pow(r1, 1.5)));
        const auto pd = sensitivity_closed(Variant::dark, sc, with_dark(d));
        CHECK(pd.delta_phi == doctest::Approx(raw_dark).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("numeric engine agrees with the closed forms") {
  const std::vector<std::pair<Variant, NoiseConfig>> cases = {
      {Variant::ideal, NoiseConfig{}},
      {Variant::loss, with_loss(0.01)},
      {Variant::dark, with_dark(0.1)},
      {Variant::thermal, with_thermal(0.1, 0.97)}};
  for (const auto& [variant, noise] : cases) {
    for (double r : {0.5, 1.0}) {
      for (int ell : {1, 5}) {
        for (int i = 1; i < 30; ++i) {
          const double phi = i * kPi / (2.0 * ell) / 30.0;
          if (std::abs(std::sin(4.0 * ell * phi)) < 0.1) continue;
          const Scenario sc(r, ell, phi);
          const double closed =
              sensitivity_closed(variant, sc, noise).delta_phi;
          const double numeric =
              sensitivity_numeric(variant, sc, noise).delta_phi;
          CHECK(std::abs(numeric - closed) / closed <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("numeric engine reports a constant signal as unbounded") {
  const auto p = sensitivity_numeric([](double) { return 0.5; }, 0.3, 1e-4);
  CHECK(std::isinf(p.delta_phi));
  CHECK(p.signal == 0.5);
  CHECK_THROWS_AS(sensitivity_numeric([](double) { return 0.5; }, 0.3, 0.0),
                  std::invalid_argument);
}

TEST_CASE("optimal sensitivity of the lossless scheme") {
  const double r_n2 = squeezing_from_mean_photons(2.0);
  const auto opt = optimal_sensitivity(Variant::ideal, r_n2, 1);
  CHECK(std::abs(opt.phi_opt - kPi / 4.0) <= 1e-6);
  CHECK(opt.delta_phi_min ==
        doctest::Approx(0.17677669529663687).epsilon(1e-12));

  for (double r : {0.1, 0.5, 1.0, 1.5}) {
    for (int ell : {1, 2, 5, 10}) {
      const auto o = optimal_sensitivity(Variant::ideal, r, ell);
      const double nb = Scenario(r, ell, 0.0).mean_photon_number();
      const double expected =
          1.0 / (2.0 * ell * std::sqrt(nb * (nb + 2.0)));
      CHECK(std::abs(o.phi_opt - kPi / (4.0 * ell)) <= 1e-6);
      CHECK(std::abs(o.delta_phi_min - expected) / expected <= 1e-9);
    }
  }
}

TEST_CASE("optimal sensitivity scales exactly as 1/ell") {
  const NoiseConfig noise = with_loss(0.01);
  const double base =
      optimal_sensitivity(Variant::loss, 1.0, 1, noise).delta_phi_min;
  CHECK(optimal_sensitivity(Variant::loss, 1.0, 2, noise).delta_phi_min ==
        base / 2.0);
  CHECK(optimal_sensitivity(Variant::loss, 1.0, 10, noise).delta_phi_min ==
        base / 10.0);
}

TEST_CASE("headline working points") {
  const NoiseConfig noise = with_loss(0.01);
  const double opt =
      optimal_sensitivity(Variant::loss, 1.0, 1, noise).delta_phi_min;
  CHECK(opt == doctest::Approx(0.19711284415560).epsilon(1e-8));
  CHECK(std::abs(opt - 0.1968) <= 1e-3);

  const double gap = hl_gap(Variant::loss, Scenario(1.0, 1, 0.0), noise);
  CHECK(std::abs(gap - 1.59e-2) <= 3e-4);
  CHECK(std::abs(hl_gap(Variant::loss, Scenario(1.0, 10, 0.0), noise) -
                 1.59e-3) <= 3e-5);

  // lossless case is below the Heisenberg line everywhere on the grid
  for (double r : {0.3, 1.0, 1.5}) {
    CHECK(hl_gap(Variant::ideal, Scenario(r, 1, 0.0)) < 0.0);
  }
}

TEST_CASE("sensitivity is positive and finite wherever the slope is nonzero") {
  const std::vector<std::pair<Variant, NoiseConfig>> cases = {
      {Variant::ideal, NoiseConfig{}},
      {Variant::loss, with_loss(0.05)},
      {Variant::dark, with_dark(0.05)},
      {Variant::thermal, with_thermal(0.2, 0.95)}};
  for (const auto& [variant, noise] : cases) {
    for (double r : {0.3, 1.0}) {
      for (int ell : {1, 4}) {
        for (int i = 1; i < 60; ++i) {
          const double phi = i * kPi / (2.0 * ell) / 60.0;
          if (std::abs(std::sin(4.0 * ell * phi)) < 1e-6) continue;
          const auto p =
              sensitivity_closed(variant, Scenario(r, ell, phi), noise);
          CHECK(p.delta_phi > 0.0);
          CHECK(std::isfinite(p.delta_phi));
        }
      }
    }
  }
}

TEST_CASE("reference limits") {
  const Scenario sc(1.0, 1, 0.0);
  const auto lim = limits(sc);
  CHECK(lim.heisenberg == doctest::Approx(0.18101541524157766).epsilon(1e-13));
  CHECK(lim.shot_noise == doctest::Approx(0.3008449893562943).epsilon(1e-13));
  CHECK(lim.min_sensitivity ==
        doctest::Approx(0.13786028238589162).epsilon(1e-13));
  CHECK(lim.min_sensitivity < lim.heisenberg);
  CHECK(lim.heisenberg < lim.shot_noise);

  const auto doubled = limits(Scenario(1.0, 2, 0.0));
  CHECK(doubled.heisenberg == doctest::Approx(lim.heisenberg / 2.0));
  CHECK(doubled.shot_noise == doctest::Approx(lim.shot_noise / 2.0));
  CHECK(doubled.min_sensitivity == doctest::Approx(lim.min_sensitivity / 2.0));

  const auto empty = limits(Scenario(0.0, 1, 0.0));
  CHECK(std::isinf(empty.heisenberg));
  CHECK(std::isinf(empty.shot_noise));
  CHECK(std::isinf(empty.min_sensitivity));

  // min < heisenberg holds everywhere; heisenberg < shot_noise only above
  // one mean photon (the two reference lines cross at N = 1)
  for (double r : {0.7, 1.0, 1.5, 2.0}) {
    for (int ell : {1, 3}) {
      const auto l = limits(Scenario(r, ell, 0.0));
      CHECK(l.min_sensitivity < l.heisenberg);
      CHECK(l.heisenberg < l.shot_noise);
    }
  }
  const auto dim = limits(Scenario(0.5, 1, 0.0));  // N = 0.543
  CHECK(dim.min_sensitivity < dim.heisenberg);
  CHECK(dim.heisenberg > dim.shot_noise);
}

TEST_CASE("optimal sensitivity degrades monotonically with noise") {
  double prev = 0.0;
  for (double loss : {0.0, 0.005, 0.01, 0.02, 0.05, 0.1}) {
    const double v =
        optimal_sensitivity(Variant::loss, 1.0, 1, with_loss(loss))
            .delta_phi_min;
    CHECK(v >= prev);
    prev = v;
  }
  prev = 0.0;
  for (double d : {0.0, 0.005, 0.01, 0.05, 0.1}) {
    const double v =
        optimal_sensitivity(Variant::dark, 1.0, 1, with_dark(d)).delta_phi_min;
    CHECK(v >= prev);
    prev = v;
  }
  prev = 0.0;
  for (double nth : {0.0, 0.05, 0.1, 0.5, 1.0}) {
    const double v = optimal_sensitivity(Variant::thermal, 1.0, 1,
                                         with_thermal(nth, 0.99))
                         .delta_phi_min;
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("a sub-Heisenberg region survives small loss") {
  const double hl = limits(Scenario(1.0, 1, 0.0)).heisenberg;
  const double at_small_loss =
      optimal_sensitivity(Variant::loss, 1.0, 1, with_loss(0.005))
          .delta_phi_min;
  CHECK(at_small_loss < hl);
}

TEST_CASE("measured dark-count and thermal optima") {
  // The dark-count sensitivity diverges at the lossless working point, so its
  // minimum sits well above the lossless optimum even at d = 0.01.
  const double dark =
      optimal_sensitivity(Variant::dark, 1.0, 1, with_dark(0.01))
          .delta_phi_min;
  CHECK(dark == doctest::Approx(0.18221450235231634).epsilon(1e-6));

  const double thermal = optimal_sensitivity(Variant::thermal, 1.0, 1,
                                             with_thermal(0.1, 0.99))
                             .delta_phi_min;
  CHECK(thermal == doctest::Approx(0.20631329982186103).epsilon(1e-6));
}
