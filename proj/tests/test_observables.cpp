#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "statfield/observables.hpp"

using namespace statfield;

TEST_CASE("means: parity, constant force, harmonic potential") {
  const GridSpec g(-12.0, 12.0, 1024);

  SUBCASE("symmetric rho with even V: x and F means vanish") {
    const FieldState st = gaussian_state(g, 0.0, 1.1, 0.0);
    SampledField V(g);
    for (int k = 0; k < g.n; ++k) V[k] = 0.5 * g.x(k) * g.x(k);
    const Means m = means(st, V);
    CHECK(std::abs(m.x_mean) < 1e-12);
    CHECK(std::abs(m.F_mean) < 1e-10);
  }

  SUBCASE("V = kx gives F = -k") {
    const double kslope = 0.7;
    const FieldState st = gaussian_state(g, 0.4, 0.9, 0.0);
    SampledField V(g);
    for (int k = 0; k < g.n; ++k) V[k] = kslope * g.x(k);
    CHECK(means(st, V).F_mean == doctest::Approx(-kslope).epsilon(1e-10));
  }

  SUBCASE("gaussian in a harmonic well: V mean = m w^2 (mu^2 + sigma^2)/2") {
    const double mu = 0.8, sigma = 1.2, mass = 1.0, omega = 1.3;
    const FieldState st = gaussian_state(g, mu, sigma, 0.0);
    SampledField V(g);
    for (int k = 0; k < g.n; ++k)
      V[k] = 0.5 * mass * omega * omega * g.x(k) * g.x(k);
    const double want = 0.5 * mass * omega * omega * (mu * mu + sigma * sigma);
    CHECK(means(st, V).V_mean == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("fisher information") {
  const GridSpec g(-12.0, 12.0, 1024);

  SUBCASE("gaussian: I = 1/sigma^2") {
    for (double sigma : {0.7, 1.0, 1.6})
      CHECK(fisher_information(gaussian_density(g, 0.2, sigma)) ==
            doctest::Approx(1.0 / (sigma * sigma)).epsilon(1e-6));
  }

  SUBCASE("rescaling rho(x) -> (1/l) rho(x/l) divides I by l^2") {
    std::mt19937_64 rng(5);
    const FieldState st = oracles::random_smooth_state(g, rng);
    const double i1 = fisher_information(st.rho);
    const double lambda = 1.7;
    const GridSpec gs(g.x_min * lambda, g.x_max * lambda, g.n);
    SampledField scaled(gs);
    for (int k = 0; k < g.n; ++k) scaled[k] = st.rho[k] / lambda;  // same sample points/λ
    CHECK(fisher_information(scaled) == doctest::Approx(i1 / (lambda * lambda)).epsilon(1e-8));
  }
}

TEST_CASE("entropies") {
  SUBCASE("discrete uniform over N: S = ln N") {
    const int n = 37;
    std::vector<double> p(static_cast<std::size_t>(n), 1.0 / n);
    CHECK(discrete_entropy(p) == doctest::Approx(std::log(n)).epsilon(1e-12));
  }
  SUBCASE("one-hot: S = 0") {
    std::vector<double> p(12, 0.0);
    p[3] = 1.0;
    CHECK(discrete_entropy(p) == 0.0);
  }
  SUBCASE("continuous gaussian: S = ln(2 pi e sigma^2)/2") {
    const GridSpec g(-14.0, 14.0, 1024);
    for (double sigma : {0.8, 1.0, 1.9}) {
      const double want = 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * sigma * sigma);
      CHECK(shannon_entropy(gaussian_density(g, 0.0, sigma)) ==
            doctest::Approx(want).epsilon(1e-8));
    }
  }
}

TEST_CASE("relative entropy under translations") {
  const GridSpec g(-14.0, 14.0, 2048);

  SUBCASE("zero shift gives zero") {
    const SampledField rho = gaussian_density(g, 0.0, 1.0);
    CHECK(relative_entropy_shift(rho, 0.0).G == 0.0);
  }

  SUBCASE("gaussian matches the closed form -dx^2/(2 sigma^2)") {
    const SampledField rho = gaussian_density(g, 0.0, 1.0);
    const RelativeEntropyShift r = relative_entropy_shift(rho, 0.01);
    CHECK(r.G == doctest::Approx(-5e-5).epsilon(0.01));
    CHECK(r.quadratic == doctest::Approx(-5e-5).epsilon(1e-4));
  }

  SUBCASE("G <= 0 with maximum at zero shift") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
      const FieldState st = oracles::random_smooth_state(g, rng);
      for (double dx : {-0.2, -0.05, 0.01, 0.1, 0.3})
        CHECK(relative_entropy_shift(st.rho, dx).G <= 0.0);
    }
  }

  SUBCASE("ratio G / (-dx^2 I/2) approaches 1 at first order in dx") {
    // needs an asymmetric density: for symmetric rho the cubic term vanishes
    SampledField rho(g);
    for (int k = 0; k < g.n; ++k) {
      const double x = g.x(k);
      rho[k] = 0.6 * oracles::gaussian_pdf(x, -0.5, 0.8) +
               0.4 * oracles::gaussian_pdf(x, 1.0, 1.3);
    }
    normalize_density(rho);
    double err_prev = 0.0;
    std::vector<double> errs;
    for (double dx : {0.04, 0.02, 0.01}) {
      const RelativeEntropyShift r = relative_entropy_shift(rho, dx);
      errs.push_back(std::abs(r.G / r.quadratic - 1.0));
    }
    // halving dx halves the error (Richardson slope ~ 1)
    const double slope1 = std::log2(errs[0] / errs[1]);
    const double slope2 = std::log2(errs[1] / errs[2]);
    CHECK(slope1 == doctest::Approx(1.0).epsilon(0.25));
    CHECK(slope2 == doctest::Approx(1.0).epsilon(0.25));
    (void)err_prev;
  }
}

TEST_CASE("composition law on tensor products") {
  const GridSpec g1(-11.0, 11.0, 384);
  const GridSpec g2(-9.0, 9.0, 320);

  SUBCASE("two gaussians: both functionals add") {
    const CompositionReport rep = entropy_composition_check(
        gaussian_density(g1, 0.3, 1.0), gaussian_density(g2, -0.2, 1.4));
    CHECK(std::abs(rep.entropy_gap) < 1e-8);
    CHECK(std::abs(rep.fisher_gap) < 1e-8);
  }

  SUBCASE("uniform factor on a unit box adds zero entropy") {
    const GridSpec unit(0.0, 1.0, 256);
    SampledField uni(unit, 1.0);
    const CompositionReport rep =
        entropy_composition_check(gaussian_density(g1, 0.0, 1.0), uni);
    CHECK(std::abs(rep.entropy_2) < 1e-12);
    CHECK(std::abs(rep.entropy_gap) < 1e-8);
  }

  SUBCASE("identical factors double") {
    const SampledField rho = gaussian_density(g1, 0.0, 0.9);
    const CompositionReport rep = entropy_composition_check(rho, rho);
    CHECK(rep.entropy_12 == doctest::Approx(2.0 * rep.entropy_1).epsilon(1e-10));
    CHECK(rep.fisher_12 == doctest::Approx(2.0 * rep.fisher_1).epsilon(1e-10));
  }
}

TEST_CASE("kinetic decomposition against the spectral value") {
  // spectral T equals <(S')^2>/2m + (s^2/8m) I[rho] on smooth states
  const GridSpec g(-14.0, 14.0, 2048);
  const double s = 0.8, m = 1.2;
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    const FieldState st = oracles::random_smooth_state(g, rng);
    const double spectral = kinetic_expectation(to_wavefunction(st, s), m);
    const KineticSplit ks = kinetic_split(st, m, s);
    CHECK(spectral == doctest::Approx(ks.total).epsilon(1e-5));
  }
}

TEST_CASE("series differentiation is 4th order") {
  std::vector<double> t, f;
  const double h = 0.05;
  for (int i = 0; i < 41; ++i) {
    t.push_back(i * h);
    f.push_back(std::sin(1.3 * i * h));
  }
  const std::vector<double> d = differentiate_series(t, f);
  for (std::size_t i = 0; i < t.size(); ++i)
    CHECK(d[i] == doctest::Approx(1.3 * std::cos(1.3 * t[i])).epsilon(3e-6));
}
