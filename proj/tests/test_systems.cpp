#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "peakon/systems.hpp"

using namespace peakon;

namespace {

constexpr double kPi = 3.14159265358979323846;

Field random_band_limited(const PeriodicGrid& g, std::mt19937_64& rng, int max_mode,
                          double scale = 0.05) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> bins(g.num_bins(), 0.0);
  for (int k = 1; k <= max_mode; ++k) {
    bins[k] = scale * std::complex<double>(gauss(rng), gauss(rng));
  }
  return Field::from_spectrum(g, std::move(bins));
}

void check_fields_close(const Field& got, const Field& want, double tol) {
  REQUIRE(got.grid() == want.grid());
  for (int j = 0; j < got.size(); ++j) {
    CHECK(std::abs(got.sample(j) - want.sample(j)) <= tol);
  }
}

State cos_state(const PeriodicGrid& g) {
  const Field cosx = Field::harmonic(g, 1, 1.0, 0.0);
  return State::from_data(cosx, cosx);
}

}  // namespace

TEST_CASE("momentum m = u - u_xx") {
  const PeriodicGrid g(32);
  const Field cosx = Field::harmonic(g, 1, 1.0, 0.0);
  const Field one = Field::harmonic(g, 0, 1.0, 0.0);
  const Field cos2x = Field::harmonic(g, 2, 1.0, 0.0);

  const Momentum m1 = momentum_from_state(State::from_data(cosx, one));
  check_fields_close(m1.m, 2.0 * cosx, 1e-13);
  check_fields_close(m1.n, one, 1e-13);
  const Momentum m2 = momentum_from_state(State::from_data(cos2x, cos2x));
  check_fields_close(m2.m, 5.0 * cos2x, 1e-13);

  // inverse Helmholtz recovers u, v from m, n
  check_fields_close(bessel(m2.m, -2.0), cos2x, 1e-12);
}

TEST_CASE("conservative rhs") {
  const PeriodicGrid g(32);
  const State st = cos_state(g);
  const auto [dm, dn] = conservative_rhs(momentum_from_state(st), st);

  // m = 2cos x, (u-w)(v+z) = cos 2x, so dm/dt = d/dx(2cos x cos 2x)
  const Field want = Field::harmonic(g, 1, 0.0, -1.0) + Field::harmonic(g, 3, 0.0, -3.0);
  check_fields_close(dm, want, 1e-13);
  // v = u: the two components coincide (FORQ reduction)
  check_fields_close(dn, dm, 1e-14);

  const State zero = State::zeros(g);
  const auto [zm, zn] = conservative_rhs(momentum_from_state(zero), zero);
  CHECK(zm.max_abs() < 1e-15);
  CHECK(zn.max_abs() < 1e-15);
}

TEST_CASE("reformulated rhs: analytic value and zero state") {
  const PeriodicGrid g(32);
  const State st = cos_state(g);
  const State d = reformulated_rhs(st);

  // du/dt = D^{-2}(-sin x - 3 sin 3x) = -(1/2) sin x - (3/10) sin 3x
  const Field want = Field::harmonic(g, 1, 0.0, -0.5) + Field::harmonic(g, 3, 0.0, -0.3);
  check_fields_close(d.u, want, 1e-13);

  const State dz = reformulated_rhs(State::zeros(g));
  CHECK(dz.pair_norm(0.0) < 1e-15);
}

TEST_CASE("reformulated rhs: dw/dt = d/dx(du/dt) on consistent states") {
  const PeriodicGrid g(64);
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 5; ++trial) {
    const State st = State::from_data(random_band_limited(g, rng, 10),
                                      random_band_limited(g, rng, 10));
    const State d = reformulated_rhs(st);
    const double denom = 1.0 + std::pow(st.pair_norm(3.0), 3.0);
    CHECK(sobolev_norm(d.w - derivative(d.u), 2.0) <= 1e-9 * denom);
    CHECK(sobolev_norm(d.z - derivative(d.v), 2.0) <= 1e-9 * denom);
  }
}

TEST_CASE("oracle equivalence with the conservative form") {
  const PeriodicGrid g(128);
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    const State st = State::from_data(random_band_limited(g, rng, 10),
                                      random_band_limited(g, rng, 10));
    const State d = reformulated_rhs(st);
    const auto [dm, dn] = conservative_rhs(momentum_from_state(st), st);
    const double denom = 1.0 + std::pow(st.pair_norm(3.0), 3.0);
    CHECK(sobolev_norm(d.u - bessel(dm, -2.0), 2.0) <= 1e-9 * denom);
    CHECK(sobolev_norm(d.v - bessel(dn, -2.0), 2.0) <= 1e-9 * denom);
  }
}

TEST_CASE("FORQ reduction: v-equations reproduce u-equations exactly") {
  const PeriodicGrid g(64);
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 5; ++trial) {
    const Field u = random_band_limited(g, rng, 12);
    const State st = State::from_data(u, u);
    const State d = reformulated_rhs(st);
    CHECK(sobolev_norm(d.v - d.u, 2.0) <= 1e-10);
    CHECK(sobolev_norm(d.z - d.w, 2.0) <= 1e-10);
  }
}

TEST_CASE("cubic homogeneity: rhs scales with lambda^3") {
  const PeriodicGrid g(64);
  std::mt19937_64 rng(109);
  const State st = State::from_data(random_band_limited(g, rng, 8),
                                    random_band_limited(g, rng, 8));
  for (double lam : {2.0, -1.5}) {
    const State a = reformulated_rhs(lam * st);
    const State b = std::pow(lam, 3.0) * reformulated_rhs(st);
    CHECK((a - b).pair_norm(1.0) <= 1e-12 * (1.0 + b.pair_norm(1.0)));
  }
}

TEST_CASE("mollified rhs: zero state, eps validation, constants") {
  const PeriodicGrid g(32);
  CHECK_THROWS_AS(mollified_rhs(State::zeros(g), 0.0), std::invalid_argument);
  CHECK(mollified_rhs(State::zeros(g), 0.2).pair_norm(0.0) < 1e-15);

  // constants: J_eps is the identity, so the two systems agree exactly
  const Field c = Field::harmonic(g, 0, 0.7, 0.0);
  const Field zero = Field::zeros(g);
  const State st(c, zero, c, zero);
  const State a = mollified_rhs(st, 0.3);
  const State b = reformulated_rhs(st);
  CHECK((a - b).pair_norm(0.0) <= 1e-13);
}

TEST_CASE("mollified rhs converges to the reformulated rhs as eps -> 0") {
  const PeriodicGrid g(64);
  std::mt19937_64 rng(113);
  const State st = State::from_data(random_band_limited(g, rng, 8, 0.2),
                                    random_band_limited(g, rng, 8, 0.2));
  const State ref = reformulated_rhs(st);
  double prev = std::numeric_limits<double>::infinity();
  for (double eps : {0.2, 0.1, 0.05}) {
    const State d = mollified_rhs(st, eps);
    const double gap = (d - ref).pair_norm(1.0);
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("hamiltonians") {
  const PeriodicGrid g(32);
  const State st = cos_state(g);
  CHECK(hamiltonian_h1(st) == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  CHECK(hamiltonian_h2(st) == doctest::Approx(0.5 * kPi).epsilon(1e-12));

  CHECK(hamiltonian_h1(State::zeros(g)) == doctest::Approx(0.0));
  CHECK(hamiltonian_h2(State::zeros(g)) == doctest::Approx(0.0));

  const Field cosx = Field::harmonic(g, 1, 1.0, 0.0);
  const Field zero = Field::zeros(g);
  const State mixed = State::from_data(cosx, zero);
  CHECK(std::abs(hamiltonian_h1(mixed)) < 1e-14);
  const State mixed2 = State::from_data(zero, cosx);
  CHECK(std::abs(hamiltonian_h2(mixed2)) < 1e-14);
}

TEST_CASE("mKdV hierarchy rhs") {
  const PeriodicGrid g(32);
  const Field cosx = Field::harmonic(g, 1, 1.0, 0.0);
  const HierarchyState hs{cosx, cosx};
  const HierarchyState d = mkdv_hierarchy_rhs(hs);

  // -cos''' - 6 cos^2 (cos)' = -sin x + 6 cos^2 x sin x
  const Field want = Field::from_function(
      g, [](double x) { return -std::sin(x) + 6.0 * std::cos(x) * std::cos(x) * std::sin(x); });
  check_fields_close(d.mt, want, 1e-12);
  check_fields_close(d.nt, d.mt, 1e-14);

  const HierarchyState z{Field::zeros(g), Field::zeros(g)};
  CHECK(mkdv_hierarchy_rhs(z).mt.max_abs() < 1e-15);

  // scalar mKdV reduction oracle: -m''' - 6 m^2 m'
  const PeriodicGrid g2(64);
  std::mt19937_64 rng(127);
  const Field m = random_band_limited(g2, rng, 8, 0.3);
  const HierarchyState pair{m, m};
  const Field scalar =
      -1.0 * derivative(m, 3) - 6.0 * multiply(multiply(m, m), derivative(m));
  CHECK(sobolev_norm(mkdv_hierarchy_rhs(pair).mt - scalar, 0.0) <= 1e-12);
}

TEST_CASE("peakon profile") {
  const PeriodicGrid g(256);
  CHECK_THROWS_AS(peakon_profile(0.0, 0.0, g), std::invalid_argument);

  const Field p = peakon_profile(1.0, 0.0, g);
  // peak value: c sqrt(3/2) times the periodization tail sum
  double tail = 0.0;
  for (int l = -10; l <= 10; ++l) tail += std::exp(-std::abs(2.0 * kPi * l));
  CHECK(p.sample(0) == doctest::Approx(std::sqrt(1.5) * tail).epsilon(1e-12));
  CHECK(p.sample(0) == doctest::Approx(1.2247 * 1.00374).epsilon(1e-3));

  // even about the peak
  for (int j = 1; j < g.size() / 2; ++j) {
    CHECK(p.sample(j) == doctest::Approx(p.sample(g.size() - j)).epsilon(1e-12));
  }

  // peak location at t = 1, c = 1 sits at (-1) mod 2pi
  const Field q = peakon_profile(1.0, 1.0, g);
  int jmax = 0;
  for (int j = 0; j < g.size(); ++j) {
    if (q.sample(j) > q.sample(jmax)) jmax = j;
  }
  const double want = 2.0 * kPi - 1.0;
  CHECK(std::abs(g.node(jmax) - want) <= g.dx());
}

TEST_CASE("state grid consistency is enforced") {
  const PeriodicGrid g(32), g2(64);
  const Field a = Field::zeros(g), b = Field::zeros(g2);
  CHECK_THROWS_AS(State(a, a, a, b), std::invalid_argument);
}
