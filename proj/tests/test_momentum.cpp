#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "statfield/momentum.hpp"
#include "statfield/observables.hpp"

using namespace statfield;

TEST_CASE("fourier transform of a gaussian") {
  // |phi|^2 is gaussian in p with variance s^2/(4 sigma0^2)
  const GridSpec g(-12.0, 12.0, 1024);
  const double sigma0 = 1.0, s = 0.8;
  const WaveFunction psi = to_wavefunction(gaussian_state(g, 0.0, sigma0, 0.0), s);
  const MomentumSpectrum phi = fourier_forward(psi);

  const double var_p = s * s / (4.0 * sigma0 * sigma0);
  const double sig_p = std::sqrt(var_p);
  for (std::size_t i = 0; i < phi.p.size(); ++i) {
    const double want = oracles::gaussian_pdf(phi.p[i], 0.0, sig_p) * s;  // |phi|^2 = s w
    if (std::abs(phi.p[i]) < 6.0 * sig_p)
      CHECK(std::norm(phi.phi[i]) == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("phase shift translates the momentum density") {
  const GridSpec g(-12.0, 12.0, 1024);
  const double s = 1.0, p0 = 1.7;
  const MomentumDensity w0 =
      quantum_momentum_density(fourier_forward(to_wavefunction(gaussian_state(g, 0.0, 1.0, 0.0), s)));
  const MomentumDensity w1 =
      quantum_momentum_density(fourier_forward(to_wavefunction(gaussian_state(g, 0.0, 1.0, p0), s)));
  CHECK(w1.moments[1] - w0.moments[1] == doctest::Approx(p0).epsilon(1e-10));
  // hybrid density shifts the same way
  const MomentumDensity c0 = classical_momentum_density(gaussian_state(g, 0.0, 1.0, 0.0));
  const MomentumDensity c1 = classical_momentum_density(gaussian_state(g, 0.0, 1.0, p0));
  CHECK(c1.moments[1] - c0.moments[1] == doctest::Approx(p0).epsilon(1e-10));
}

TEST_CASE("parseval and density normalization") {
  const GridSpec g(-12.0, 12.0, 1024);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    const FieldState st = oracles::random_smooth_state(g, rng);
    const WaveFunction psi = to_wavefunction(st, 0.7);
    const MomentumSpectrum phi = fourier_forward(psi);
    double phi2 = 0.0;
    for (const auto& v : phi.phi) phi2 += std::norm(v);
    phi2 *= phi.dp / phi.s_const;
    CHECK(phi2 == doctest::Approx(psi.norm()).epsilon(1e-12));

    const MomentumDensity w = quantum_momentum_density(phi);
    CHECK(w.moments[0] == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("quantum momentum mean matches int rho S' dx and vanishes for real psi") {
  const GridSpec g(-12.0, 12.0, 1024);
  const double s = 0.6;
  std::mt19937_64 rng(7);
  const FieldState st = oracles::random_smooth_state(g, rng);
  const WaveFunction psi = to_wavefunction(st, s);
  const MomentumDensity w = quantum_momentum_density(fourier_forward(psi));

  const SampledField sp = momentum_field(st);
  CHECK(w.moments[1] == doctest::Approx(integrate_product(st.rho, sp)).epsilon(1e-8));

  FieldState real_state = st;
  real_state.s_phase = SampledField(g);
  const MomentumDensity wr =
      quantum_momentum_density(fourier_forward(to_wavefunction(real_state, s)));
  CHECK(std::abs(wr.moments[1]) < 1e-10);
}

TEST_CASE("kinetic expectation equals the p^2 moment") {
  const GridSpec g(-12.0, 12.0, 1024);
  const double s = 0.6, m = 1.4;
  std::mt19937_64 rng(17);
  const FieldState st = oracles::random_smooth_state(g, rng);
  const WaveFunction psi = to_wavefunction(st, s);
  const MomentumDensity w = quantum_momentum_density(fourier_forward(psi));
  CHECK(kinetic_expectation(psi, m) == doctest::Approx(w.moments[2] / (2.0 * m)).epsilon(1e-12));
}

TEST_CASE("classical pushforward densities") {
  const GridSpec g(-12.0, 12.0, 1024);

  SUBCASE("constant momentum field: all mass in the p0 bin") {
    const double p0 = 0.9;
    const FieldState st = gaussian_state(g, 0.0, 1.0, p0);
    const MomentumDensity w = classical_momentum_density(st, 64);
    int occupied = 0;
    for (std::size_t i = 0; i < w.w.size(); ++i)
      if (w.w[i] > 0.0) {
        ++occupied;
        CHECK(std::abs(w.p[i] - p0) <= 0.5 * w.dp + 1e-12);
      }
    CHECK(occupied == 1);
    CHECK(w.moments[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(w.moments[1] == doctest::Approx(p0).epsilon(1e-10));
  }

  SUBCASE("linear momentum field on a gaussian: pushforward is gaussian") {
    // S = a x^2/2 -> p = a x, X ~ N(0, sigma): w = N(0, a sigma)
    const double a = 0.8, sigma = 1.1;
    FieldState st;
    st.rho = gaussian_density(g, 0.0, sigma);
    st.s_phase = SampledField(g);
    for (int k = 0; k < g.n; ++k) st.s_phase[k] = 0.5 * a * g.x(k) * g.x(k);
    const MomentumDensity w = classical_momentum_density(st, 48);
    // exact moments via change of variables
    CHECK(w.moments[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(w.moments[1]) < 1e-9);
    CHECK(w.moments[2] == doctest::Approx(a * a * sigma * sigma).epsilon(1e-7));
    // binned values against the bin-averaged closed form; the deterministic
    // sampling quantizes at one x-cell of mass per bin boundary
    const double cell_mass = max_abs(st.rho) * g.dx();
    const double sp = a * sigma;
    for (std::size_t i = 0; i < w.w.size(); ++i) {
      const double z1 = (w.p[i] - 0.5 * w.dp) / (std::sqrt(2.0) * sp);
      const double z2 = (w.p[i] + 0.5 * w.dp) / (std::sqrt(2.0) * sp);
      const double want = 0.5 * (std::erf(z2) - std::erf(z1)) / w.dp;
      CHECK(std::abs(w.w[i] - want) <= 2.0 * cell_mass / w.dp + 1e-9);
    }
    // histogram mean agrees with the exact mean to bin width
    CHECK(std::abs(density_moment(w, 1) - w.moments[1]) < w.dp);
  }
}

TEST_CASE("h diagnostic of a coherent gaussian") {
  const GridSpec g(-12.0, 12.0, 1024);
  const double sigma0 = 1.0, s = 0.8, p0 = 0.6;
  const FieldState st = gaussian_state(g, 0.0, sigma0, p0);
  const HDiagnostic h = h_diagnostic(st, s);

  CHECK(std::abs(h.moments[0]) < 1e-8);
  CHECK(std::abs(h.moments[1]) < 1e-8);
  // hybrid second moment is smaller by s^2/(4 sigma0^2) = (s^2/4) I[rho]
  const double want = -s * s / (4.0 * sigma0 * sigma0);
  CHECK(h.moments[2] == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("h diagnostic with S = 0: delta at p = 0, moments 0 and 1 agree") {
  const GridSpec g(-12.0, 12.0, 1024);
  const FieldState st = gaussian_state(g, 0.0, 1.0, 0.0);
  const HDiagnostic h = h_diagnostic(st, 1.0);
  CHECK(std::abs(h.moments[0]) < 1e-8);
  CHECK(std::abs(h.moments[1]) < 1e-10);
  CHECK(h.moments[2] < 0.0);  // quantum density has width, hybrid does not
}

TEST_CASE("h moments 0 and 1 vanish for random smooth states") {
  const GridSpec g(-14.0, 14.0, 2048);
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldState st = oracles::random_smooth_state(g, rng);
    const HDiagnostic h = h_diagnostic(st, 0.9);
    CHECK(std::abs(h.moments[0]) < 1e-6);
    CHECK(std::abs(h.moments[1]) < 1e-6);
  }
}

TEST_CASE("kinetic split: gaussian cases and HO ground state") {
  const GridSpec g(-12.0, 12.0, 1024);
  const double m = 1.0;

  SUBCASE("gaussian, S = 0: T = s^2/(8 m sigma^2), all Fisher") {
    const double sigma = 1.3, s = 0.7;
    const FieldState st = gaussian_state(g, 0.0, sigma, 0.0);
    const double want = s * s / (8.0 * m * sigma * sigma);
    CHECK(kinetic_expectation(to_wavefunction(st, s), m) ==
          doctest::Approx(want).epsilon(1e-9));
    const KineticSplit ks = kinetic_split(st, m, s);
    CHECK(ks.fisher_part == doctest::Approx(want).epsilon(1e-9));
    CHECK(std::abs(ks.gradient_part) < 1e-12);
  }

  SUBCASE("plane-phase gaussian: T = p0^2/2m + s^2/(8 m sigma^2)") {
    const double sigma = 0.9, s = 0.8, p0 = 1.1;
    const FieldState st = gaussian_state(g, 0.0, sigma, p0);
    const double want = p0 * p0 / (2.0 * m) + s * s / (8.0 * m * sigma * sigma);
    CHECK(kinetic_expectation(to_wavefunction(st, s), m) ==
          doctest::Approx(want).epsilon(1e-9));
  }

  SUBCASE("harmonic ground state (hbar = m = omega = 1): T = 1/4 via the split") {
    const FieldState st = ho_ground_state(g, 1.0, 1.0, 1.0);
    const KineticSplit ks = kinetic_split(st, 1.0, 1.0);
    CHECK(ks.total == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(ks.gradient_part == doctest::Approx(0.0).epsilon(1e-12));
    // independent quadrature oracle for the Fisher term
    const double i_quad = oracles::quad(
        [](double x) {
          const double sig2 = 0.5;
          const double rho = oracles::gaussian_pdf(x, 0.0, std::sqrt(sig2));
          const double dlog = -x / sig2;
          return rho * dlog * dlog;
        },
        -10.0, 10.0);
    CHECK(ks.fisher_part == doctest::Approx(i_quad / 8.0).epsilon(1e-8));
  }
}

TEST_CASE("moment identities on random smooth states") {
  // moments 0,1 agree; moment 2 differs by exactly (s^2/4) I[rho]
  const GridSpec g(-14.0, 14.0, 2048);
  const double s = 0.8;
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const FieldState st = oracles::random_smooth_state(g, rng);
    const HDiagnostic h = h_diagnostic(st, s);
    const double fisher_term = 0.25 * s * s * fisher_information(st.rho);
    CHECK(std::abs(h.moments[2] + fisher_term) <= 1e-5 * fisher_term);
  }
}
