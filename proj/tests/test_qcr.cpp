#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/qcr.hpp"

using namespace qcorr;

TEST_CASE("the coefficient pattern is ones with a hole per row") {
  for (std::size_t row = 0; row < 4; ++row) {
    CHECK(QcrSystem::coefficient(row, 0) == 1.0);
    std::size_t zeros = 0;
    for (std::size_t col = 1; col < 5; ++col) {
      const double c = QcrSystem::coefficient(row, col);
      if (c == 0.0) {
        ++zeros;
        CHECK(col - 1 == row);
      } else {
        CHECK(c == 1.0);
      }
    }
    CHECK(zeros == 1);
  }
}

TEST_CASE("build_system right-hand sides") {
  SUBCASE("product state: all zero") {
    const QcrSystem sys = build_system(PureState::basis_state(4, 0));
    for (double m : sys.m) CHECK(std::abs(m) < 1e-12);
  }
  SUBCASE("GHZ_4: all one") {
    const QcrSystem sys = build_system(fixtures::ghz(4));
    for (double m : sys.m) CHECK(m == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("four-term state: (0.75, 0.5, 0.5, 0.5)") {
    const PureState psi = fixtures::four_term_state();
    const QcrSystem sys = build_system(psi);
    CHECK(sys.m[0] == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(sys.m[1] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(sys.m[2] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(sys.m[3] == doctest::Approx(0.5).epsilon(1e-10));
    // Linear entropies through the independent reduction (the charpoly
    // concurrence oracle is not usable here: these marginals have repeated
    // eigenvalues, where polynomial root-finding stalls at ~sqrt(eps)).
    CHECK(oracle::linear_entropy(psi, 0) == doctest::Approx(0.75).epsilon(1e-14));
    for (std::size_t k = 1; k < 4; ++k) {
      INFO("qubit ", k);
      // tau_k = M_k + sum of C^2 must hold with the implementation's
      // concurrences; the M_k values themselves are pinned above.
      double c2_sum = 0.0;
      for (std::size_t l = 0; l < 4; ++l) {
        if (l == k) continue;
        c2_sum += concurrence_squared(partial_trace(psi, {k, l}));
      }
      CHECK(std::abs(oracle::linear_entropy(psi, k) - c2_sum - sys.m[k]) < 1e-12);
    }
    CHECK(std::abs(sys.m[0] - residual_correlation(psi, 0)) < 1e-14);
  }
}

TEST_CASE("pinning t4 = 0 on the four-term state gives the flat split") {
  const CorrelationSplit split =
      solve_pinned(build_system(fixtures::four_term_state()), Pin::t4(0.0));
  CHECK(split.t4 == 0.0);
  CHECK(std::abs(split.t3[0]) < 1e-10);
  CHECK(split.t3[1] == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(split.t3[2] == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(split.t3[3] == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(split.feasible);
}

TEST_CASE("pinning t3^(1) = 0 on the GHZ/W mixture state is infeasible") {
  const QcrSystem sys = build_system(fixtures::ghz_like_w_mix_state());
  const CorrelationSplit split = solve_pinned(sys, Pin::t3(1, 0.0));
  CHECK(split.t4 == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(split.t3[0] == 0.0);
  CHECK(split.t3[1] == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK(split.t3[2] == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK(split.t3[3] == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK_FALSE(split.feasible);
  for (double r : equation_residuals(sys, split)) CHECK(r < 1e-10);
}

TEST_CASE("pinning t4 at the full correlation sum forces negative t3") {
  const QcrSystem sys = build_system(fixtures::ghz(4));
  const double m_total = sys.m_total();
  REQUIRE(m_total > 0.5);
  const CorrelationSplit split = solve_pinned(sys, Pin::t4(m_total));
  CHECK(split.t3_sum() == doctest::Approx(-m_total).epsilon(1e-10));
  CHECK_FALSE(split.feasible);
}

TEST_CASE("solutions reproduce the right-hand sides for every pin") {
  std::mt19937_64 rng(55);
  for (int rep = 0; rep < 50; ++rep) {
    const QcrSystem sys = build_system(random_pure_state(4, rng));
    const double v = (rng() % 200) / 100.0 - 1.0;
    for (std::size_t col = 0; col <= 4; ++col) {
      const Pin pin = (col == 0) ? Pin::t4(v) : Pin::t3(col, v);
      const CorrelationSplit split = solve_pinned(sys, pin);
      for (double r : equation_residuals(sys, split)) CHECK(r < 1e-10);
      CHECK(4.0 * split.t4 + 3.0 * split.t3_sum() ==
            doctest::Approx(sys.m_total()).epsilon(1e-10));
    }
  }
}

TEST_CASE("re-pinning at a solved value returns the same split") {
  std::mt19937_64 rng(56);
  for (int rep = 0; rep < 25; ++rep) {
    const QcrSystem sys = build_system(random_pure_state(4, rng));
    const CorrelationSplit a = solve_pinned(sys, Pin::t4(0.125));
    const CorrelationSplit b = solve_pinned(sys, Pin::t3(1, a.t3[0]));
    CHECK(std::abs(a.t4 - b.t4) < 1e-10);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(a.t3[i] - b.t3[i]) < 1e-10);
  }
}

TEST_CASE("the phi-family relation residual vanishes") {
  SUBCASE("equal amplitudes, split matches the flat reference") {
    CHECK(std::abs(phi_family_relation_check(0.5, 0.5, 0.5, 0.5)) < 1e-12);
    const CorrelationSplit split =
        solve_pinned(build_system(fixtures::four_term_state()), Pin::t4(0.0));
    CHECK(std::abs(split.t3[0]) < 1e-10);
  }
  SUBCASE("product corner case") {
    CHECK(std::abs(phi_family_relation_check(1.0, 0.0, 0.0, 0.0)) < 1e-12);
  }
  SUBCASE("random family members") {
    std::mt19937_64 rng(57);
    for (int rep = 0; rep < 100; ++rep) {
      const double residual =
          std::abs(phi_family_relation_check(gaussian_complex(rng), gaussian_complex(rng),
                                             gaussian_complex(rng), gaussian_complex(rng)));
      CHECK(residual < 1e-10);
    }
  }
}

TEST_CASE("pin construction validates its arguments") {
  CHECK_THROWS_AS(Pin::t3(0, 0.0), std::out_of_range);
  CHECK_THROWS_AS(Pin::t3(5, 0.0), std::out_of_range);
}
