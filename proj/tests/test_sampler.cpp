#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "oddab/sampler.hpp"

using namespace oddab::sampler;
using oddab::montecarlo::Xoshiro;

TEST_CASE("admissibility of conductors") {
  CHECK(admissible(7, 3));
  CHECK(admissible(9, 3));
  CHECK(admissible(63, 3));
  CHECK(admissible(91, 3));
  CHECK_FALSE(admissible(1, 3));
  CHECK_FALSE(admissible(3, 3));    // needs the square
  CHECK_FALSE(admissible(27, 3));   // cube of ell
  CHECK_FALSE(admissible(49, 3));   // 7^2 not squarefree
  CHECK_FALSE(admissible(5, 3));    // 5 = 2 mod 3
  CHECK(admissible(29, 7));
  CHECK(admissible(49, 7));
  CHECK_FALSE(admissible(7, 7));
}

TEST_CASE("field counts against the character-enumeration oracle") {
  CHECK(count_fields(7, 3) == 1);
  CHECK(count_fields(91, 3) == 2);   // 7 * 13
  CHECK(count_fields(9, 3) == 1);
  CHECK(count_fields(63, 3) == 2);   // 9 * 7: the oracle settles the count
  CHECK(count_fields(819, 3) == 4);  // 9 * 7 * 13
  for (std::uint64_t f : {7ull, 9ull, 13ull, 63ull, 91ull, 117ull, 819ull, 1267ull})
    CHECK(count_fields(f, 3) == count_fields_by_characters(f, 3));
  // degree 7 spot checks
  CHECK(count_fields(29, 7) == 1);
  CHECK(count_fields(49, 7) == 1);
  CHECK(count_fields(29 * 43, 7) == 6);
  CHECK(count_fields(29 * 43, 7) == count_fields_by_characters(29 * 43, 7));
}

TEST_CASE("conductor enumeration matches a direct filter") {
  auto list = enumerate_conductors(3, 500);
  std::map<std::uint64_t, std::uint64_t> by_f;
  for (const auto& d : list) by_f[d.f] = d.field_count;
  for (std::uint64_t f = 1; f <= 500; ++f) {
    std::uint64_t expect = count_fields(f, 3);
    CHECK(by_f[f] == expect);
  }
}

TEST_CASE("global field counts at the published scales") {
  CHECK(exact_field_count(3, 10000) == 1592);          // about 0.159 X
  CHECK(exact_field_count(7, 244861 - 1) == 8000);     // the first 8000, conductor < X0
  CHECK(exact_field_count(7, 244861) == 8001);         // X0 itself is admissible
}

TEST_CASE("oracle agreement for degree seven up to 1e5") {
  for (const auto& d : enumerate_conductors(7, 100000))
    CHECK(d.field_count == count_fields_by_characters(d.f, 7));
}

TEST_CASE("rejection sampler is uniform across fields") {
  Xoshiro rng(20240803);
  const std::uint64_t X = 10000;
  const std::size_t N = 100000;
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::size_t i = 0; i < N; ++i) {
    auto fld = random_field(X, 3, rng);
    ++counts[fld.conductor];
  }
  // chi-squared against the exact per-conductor expectations
  auto list = enumerate_conductors(3, X);
  double total_fields = 0;
  for (const auto& d : list) total_fields += double(d.field_count);
  double chi2 = 0;
  std::size_t cells = 0;
  for (const auto& d : list) {
    double expect = double(N) * double(d.field_count) / total_fields;
    double got = double(counts[d.f]);
    chi2 += (got - expect) * (got - expect) / expect;
    ++cells;
  }
  double dof = double(cells - 1);
  CHECK(chi2 < dof + 5 * std::sqrt(2 * dof));
  CHECK(chi2 > dof - 5 * std::sqrt(2 * dof));
}

TEST_CASE("character index is uniform within a conductor") {
  Xoshiro rng(99);
  std::map<std::uint64_t, std::uint64_t> idx_counts;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < 200000 && hits < 3000; ++i) {
    auto fld = random_field(1000, 3, rng);
    if (fld.conductor == 819) { ++idx_counts[fld.character_index]; ++hits; }
  }
  REQUIRE(hits >= 1000);
  REQUIRE(idx_counts.size() == 4);
  for (auto& [idx, c] : idx_counts) CHECK(double(c) > 0.15 * double(hits));
}

TEST_CASE("period polynomial for the smallest conductors") {
  Cubic p7 = period_polynomial(7, 0);
  CHECK(p7.c2 == 1);
  CHECK(p7.c1 == -2);
  CHECK(p7.c0 == -1);
  CHECK(cubic_discriminant(p7) == 49);
  // oracle: the period is 2 cos(2 pi / 7)
  double eta = 2 * std::cos(2 * M_PI / 7);
  double val = eta * eta * eta + p7.c2 * eta * eta + p7.c1 * eta + p7.c0;
  CHECK(std::abs(val) < 1e-9);

  Cubic p9 = period_polynomial(9, 0);
  CHECK(p9.c2 == 0);
  CHECK(p9.c1 == -3);
  CHECK(p9.c0 == 1);
  CHECK(cubic_discriminant(p9) == 81);
  double eta9 = 2 * std::cos(2 * M_PI / 9);
  CHECK(std::abs(eta9 * eta9 * eta9 - 3 * eta9 + 1) < 1e-9);

  // two distinct fields at conductor 63
  Cubic a = period_polynomial(63, 0), b = period_polynomial(63, 1);
  CHECK((a.c2 != b.c2 || a.c1 != b.c1 || a.c0 != b.c0));
  CHECK_THROWS(period_polynomial(63, 2));
  CHECK_THROWS(period_polynomial(5, 0));  // inadmissible
}

TEST_CASE("square discriminants scale with the conductor") {
  for (const auto& d : enumerate_conductors(3, 600)) {
    for (std::uint64_t idx = 0; idx < d.field_count; ++idx) {
      Cubic p = period_polynomial(d.f, idx);
      long long disc = cubic_discriminant(p);
      REQUIRE(disc > 0);
      long long r = llround(std::sqrt(double(disc)));
      while (r * r > disc) --r;
      while (r * r < disc) ++r;
      CHECK(r * r == disc);
      CHECK(r % (long long)d.f == 0);
    }
  }
}

TEST_CASE("starting precision is a hint, not a contract") {
  Cubic base = period_polynomial(819, 0);
  Cubic again = period_polynomial(819, 0, 64);  // low start forces the retry path
  CHECK(base.c2 == again.c2);
  CHECK(base.c1 == again.c1);
  CHECK(base.c0 == again.c0);
}

TEST_CASE("largest ramified-prime count within a bound") {
  // 7 * 13 * 19 = 1729 fits in 10^4 but a fourth prime does not
  CHECK(omega_max(3, 10000) == 3);
  CHECK(omega_max(3, 100000) >= 4);  // 9 * 7 * 13 * 19 = 15561
  CHECK(omega_max(7, 1000) == 1);
}
