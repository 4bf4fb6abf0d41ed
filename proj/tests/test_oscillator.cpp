#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpdeg/oscillator.hpp"
#include "test_support.hpp"

using namespace qpdeg;
using qpdeg::testing::Rng;

TEST_CASE("bracket small values") {
  CHECK(qp_bracket(1.0, DeformationPoint(0.3, 0.9)) == 1.0);
  CHECK(qp_bracket(2.0, DeformationPoint(0.5, 0.6)) == doctest::Approx(1.1).epsilon(1e-14));
  CHECK(qp_bracket(3.0, DeformationPoint(0.5, 0.5)) == 0.75);  // q=p limit: 3 * 0.25
  CHECK(qp_bracket(0.0, DeformationPoint(0.5, 0.6)) == 0.0);
}

TEST_CASE("bracket power-sum oracle") {
  // independent evaluation of sum_{r=0}^{2} q^r p^{2-r}
  const double q = 0.5, p = 0.6;
  double expect = 0.0;
  for (int r = 0; r <= 2; ++r) expect += std::pow(q, r) * std::pow(p, 2 - r);
  CHECK(expect == doctest::Approx(0.91).epsilon(1e-14));
  CHECK(qp_bracket(3.0, DeformationPoint(q, p)) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("bracket rejects bad inputs") {
  CHECK_THROWS_AS(qp_bracket(-1.0, DeformationPoint(0.5, 0.5)), argument_error);
  CHECK_THROWS_AS(DeformationPoint(0.0, 0.5), domain_error);
  CHECK_THROWS_AS(DeformationPoint(0.5, 1.2), domain_error);
  CHECK_THROWS_AS(DeformationPoint(-0.1, 0.5), domain_error);
}

TEST_CASE("energy examples") {
  CHECK(energy(0.0, DeformationPoint(0.37, 0.81)) == 0.5);
  CHECK(energy(4.0, DeformationPoint(1.0, 1.0)) == 4.5);

  const DeformationPoint table1_point(0.554400, 0.6);
  const double hand = 0.5 * (table1_point.q + table1_point.p + 1.0);  // E_1 = ([[2]] + 1)/2
  CHECK(energy(1.0, table1_point) == doctest::Approx(hand).epsilon(1e-15));
  CHECK(energy(1.0, table1_point) == doctest::Approx(1.0772).epsilon(1e-12));
  // (q_1, p_0) sits on the E_2 = E_1 curve to the printed precision
  CHECK(energy(1.0, table1_point) ==
        doctest::Approx(energy(2.0, table1_point)).epsilon(1e-6));
}

TEST_CASE("energy at real n stays continuous across the integer fast path") {
  const DeformationPoint pt(0.42, 0.77);
  const double at_int = energy(5.0, pt);
  CHECK(energy(5.0 + 1e-9, pt) == doctest::Approx(at_int).epsilon(1e-7));
  CHECK(energy(5.0 - 1e-9, pt) == doctest::Approx(at_int).epsilon(1e-7));
}

TEST_CASE("classical limit is exact") {
  for (int n = 0; n <= 20; ++n) {
    CHECK(energy(n, DeformationPoint(1.0, 1.0)) == n + 0.5);
  }
}

TEST_CASE("bracket symmetry under q<->p, randomized") {
  Rng rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const double q = rng.uniform(0.01, 1.0);
    const double p = rng.uniform(0.01, 1.0);
    const double x = (i % 2 == 0) ? static_cast<double>(rng.uniform_int(0, 10))
                                  : rng.uniform(0.0, 10.0);
    const double d = std::abs(detail::qp_bracket_raw(x, q, p) - detail::qp_bracket_raw(x, p, q));
    REQUIRE(d < 1e-12);
  }
}

TEST_CASE("bracket limit continuity near q = p") {
  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    const double q = rng.uniform(0.05, 0.95);
    const double x = rng.uniform(0.0, 10.0);
    const double lim = x * std::pow(q, x - 1.0);
    CHECK(std::abs(detail::qp_bracket_raw(x, q, q + 1e-8) - lim) < 1e-6);
  }
}

TEST_CASE("ground level is 1/2 at every point") {
  Rng rng(4242);
  for (int i = 0; i < 1000; ++i) {
    const DeformationPoint pt(rng.uniform(1e-3, 1.0), rng.uniform(1e-3, 1.0));
    REQUIRE(energy(0.0, pt) == 0.5);
  }
}

TEST_CASE("energy is nondecreasing in q and in p at fixed n") {
  // every power-sum term is a nonnegative monomial, so E_n grows with either
  // deformation parameter (it is not monotone in n; that is the whole point
  // of the degeneracy curves)
  Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    const int n = rng.uniform_int(0, 12);
    const double p = rng.uniform(0.05, 1.0);
    double qa = rng.uniform(0.05, 1.0);
    double qb = rng.uniform(0.05, 1.0);
    if (qa > qb) std::swap(qa, qb);
    REQUIRE(detail::energy_raw(n, qa, p) <= detail::energy_raw(n, qb, p) + 1e-15);
    REQUIRE(detail::energy_raw(n, p, qa) <= detail::energy_raw(n, p, qb) + 1e-15);
  }
}

TEST_CASE("Fock representation ladder entries") {
  const auto classical = build_fock_rep(DeformationPoint(1.0, 1.0), 3);
  CHECK(classical.a(0, 1) == 1.0);
  CHECK(classical.a(1, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(classical.a(1, 0) == 0.0);
  CHECK(classical.a_dag(1, 0) == 1.0);
  CHECK(classical.n_op(2, 2) == 2.0);

  const auto deformed = build_fock_rep(DeformationPoint(0.5, 0.6), 3);
  CHECK(deformed.a(1, 2) == doctest::Approx(std::sqrt(1.1)).epsilon(1e-15));

  CHECK_THROWS_AS(build_fock_rep(DeformationPoint(0.5, 0.6), 1), argument_error);
}

TEST_CASE("defining relation holds on the interior block") {
  const DeformationPoint pt(0.8321, 0.4567);
  const auto rep = build_fock_rep(pt, 8);
  const Matrix lhs = rep.a * rep.a_dag - (rep.a_dag * rep.a).scaled(pt.q);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      const double expect = (i == j) ? detail::powi(pt.p, i) : 0.0;
      REQUIRE(lhs(i, j) == doctest::Approx(expect).epsilon(1e-13));
    }
  }
}

TEST_CASE("verify_algebra residuals") {
  CHECK(verify_algebra(build_fock_rep(DeformationPoint(1.0, 1.0), 6)).max() < 1e-12);
  CHECK(verify_algebra(build_fock_rep(DeformationPoint(0.554400, 0.6), 8)).max() < 1e-12);
}

TEST_CASE("verify_algebra flags a corrupted entry without throwing") {
  auto rep = build_fock_rep(DeformationPoint(0.7, 0.9), 6);
  rep.a(0, 1) += 1e-3;
  const auto residuals = verify_algebra(rep);
  CHECK(residuals.max() > 1e-6);
}

TEST_CASE("algebra residuals on random points") {
  Rng rng(31337);
  for (int i = 0; i < 100; ++i) {
    const DeformationPoint pt(rng.uniform(0.05, 1.0), rng.uniform(0.05, 1.0));
    REQUIRE(verify_algebra(build_fock_rep(pt, 8)).max() < 1e-12);
  }
}
