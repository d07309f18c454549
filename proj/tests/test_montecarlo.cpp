#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oddab/heuristics.hpp"
#include "oddab/montecarlo.hpp"
#include "oddab/selmer.hpp"

using namespace oddab;
using namespace oddab::montecarlo;

TEST_CASE("identical seed and parameters give identical reports") {
  auto a = simulate_H1(8, 20000, 42);
  auto b = simulate_H1(8, 20000, 42);
  CHECK(a.p_hat == b.p_hat);
  // worker count must not change the outcome
  auto c = simulate_H1(8, 20000, 42, false, 2);
  CHECK(a.p_hat == c.p_hat);
  auto d = simulate_H1(8, 20000, 43);
  CHECK(a.p_hat != d.p_hat);  // different stream
}

TEST_CASE("subspace-miss sampler lands on the closed form") {
  auto r8 = simulate_H1(8, 1000000, 12345);
  CHECK(std::abs(r8.z_score) < 3);
  CHECK(r8.target == mpq_class(7, 9));
  auto r2 = simulate_H1(2, 100000, 99);
  CHECK(std::abs(r2.p_hat - 1.0 / 3.0) < 3 * r2.std_error + 3e-3);
}

TEST_CASE("exhaustive mode is exact and matches the subspace enumeration") {
  for (unsigned long q : {2ul, 4ul, 8ul, 16ul}) {
    auto r = simulate_H1(q, 0, 0, true);
    CHECK(r.exhaustive);
    mpq_class expect(q - 1);
    expect /= (q + 1);
    CHECK(r.target == expect);
  }
  // cross-check with the structural enumeration: among the mixed-type
  // subspaces of the septic component, the ones missing V_inf number q - 1
  // of q + 1
  OddAbelianGroup z7({7});
  BilinearGSpace v = build_V(z7);
  ComponentSpace comp = restrict_component(v, character_classes(z7)[1]);
  unsigned mixed = 0, missing = 0;
  for (const auto& s : enumerate_invariant_max_isotropic(comp)) {
    IsotropyCase c = classify_case(comp, s);
    if (c == IsotropyCase::B_ii || c == IsotropyCase::B_ii_prime ||
        c == IsotropyCase::B_iii) {
      ++mixed;
      if (c == IsotropyCase::B_iii) ++missing;
    }
  }
  CHECK(mixed == 9);
  CHECK(missing == 7);
}

TEST_CASE("line-containment sampler lands on the closed form") {
  auto r = simulate_H2prime(4, 1, 1000000, 777);
  CHECK(std::abs(r.z_score) < 3);
  CHECK(r.target == mpq_class(1, 5));

  // rho = 0: containment in the zero space never happens
  auto r0 = simulate_H2prime(4, 0, 10000, 5);
  CHECK(r0.p_hat == 0.0);

  for (unsigned rho : {0u, 1u, 2u, 3u}) {
    auto rx = simulate_H2prime(4, rho, 0, 0, true);
    CHECK(rx.target == heuristics::prob_sgnrk_chi(4, rho));
  }
}

TEST_CASE("signature histogram against the binomial law") {
  auto r7 = simulate_sgnrk_distribution(7, 100000, 2024);
  REQUIRE(r7.histogram.size() == 2);  // m = 1: two-point distribution
  CHECK(r7.histogram[0].first == 4);
  CHECK(r7.histogram[1].first == 7);
  CHECK(r7.max_abs_z < 3);
  double total = r7.histogram[0].second + r7.histogram[1].second;
  CHECK(total == doctest::Approx(1.0));

  auto r31 = simulate_sgnrk_distribution(31, 20000, 77);
  REQUIRE(r31.histogram.size() == 4);  // m = 3: four masses
  double sum = 0;
  for (auto& [s, mass] : r31.histogram) sum += mass;
  CHECK(sum == doctest::Approx(1.0));
  CHECK(r31.max_abs_z < 4);

  CHECK_THROWS(simulate_sgnrk_distribution(5, 100, 1));  // order of 2 is even
  CHECK_THROWS(simulate_sgnrk_distribution(7, 0, 1));    // empty histogram
}

TEST_CASE("the line shortcut agrees with the explicit orthocomplement model") {
  // V_chi = F_q^2 with coordinates (archimedean, 2-adic); a line (x : y)
  // pairs with the orthocomplement line {(u, v) : x u + y v = 0} = (y : x)
  // in the dual part, and the assembled subspace misses the archimedean
  // block exactly when neither line is a coordinate line.
  for (unsigned f : {1u, 2u, 3u, 4u}) {
    oddab::Gf2 fq(f);
    std::uint64_t q = std::uint64_t{1} << f;
    unsigned misses = 0, lines = 0;
    auto run_line = [&](std::uint64_t x, std::uint64_t y) {
      ++lines;
      // orthocomplement representative
      std::uint64_t u = y, v = x;
      CHECK(fq.add(fq.mul(x, u), fq.mul(y, v)) == 0);
      // archimedean coordinates of the two lines are x and u
      bool meets_vinf = (y == 0) || (v == 0);
      bool shortcut_success = (x != 0 && y != 0);
      CHECK(shortcut_success == !meets_vinf);
      if (!meets_vinf) ++misses;
    };
    for (std::uint64_t y = 0; y < q; ++y) run_line(1, y);
    run_line(0, 1);
    CHECK(lines == q + 1);
    CHECK(misses == q - 1);
  }
}

TEST_CASE("uniform below is unbiased enough and in range") {
  Xoshiro rng(7);
  std::vector<unsigned> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.below(7)];
  for (unsigned c : counts) {
    CHECK(c > 9400);
    CHECK(c < 10600);
  }
}
