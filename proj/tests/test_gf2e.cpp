#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oddab/gf2e.hpp"

using oddab::Gf2;

TEST_CASE("shipped modulus table matches the embedded one and is minimal") {
  // the data file is authoritative for reproducibility; the header carries a
  // compiled-in copy
  std::ifstream in(std::string(TEST_SOURCE_DIR) + "/../core/data/modulus_table.txt");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  auto parsed = Gf2::parse_modulus_table(ss.str());
  REQUIRE(parsed.size() == Gf2::kMaxDegree);
  for (auto [f, mask] : parsed) {
    CHECK(mask == Gf2::modulus_for_degree(f));
    CHECK(Gf2::is_irreducible(mask, f));
    // lexicographic minimality among odd-constant-term candidates
    for (std::uint64_t cand = (std::uint64_t{1} << f) | 1; cand < mask; cand += 2)
      CHECK_FALSE(Gf2::is_irreducible(cand, f));
  }
  CHECK(Gf2::modulus_table_text() == ss.str());
}

TEST_CASE("field axioms hold on random elements") {
  std::mt19937_64 rng(23);
  for (unsigned f : {1u, 2u, 3u, 4u, 6u, 8u, 11u, 12u}) {
    Gf2 fq(f);
    std::uint64_t mask = (f == 64) ? ~0ull : ((std::uint64_t{1} << f) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::uint64_t a = rng() & mask, b = rng() & mask, c = rng() & mask;
      CHECK(fq.mul(a, b) == fq.mul(b, a));
      CHECK(fq.mul(fq.mul(a, b), c) == fq.mul(a, fq.mul(b, c)));
      CHECK(fq.mul(a, fq.add(b, c)) == fq.add(fq.mul(a, b), fq.mul(a, c)));
      CHECK(fq.mul(a, 1) == a);
      if (a) {
        CHECK(fq.mul(a, fq.inv(a)) == 1);
        CHECK(fq.order() % fq.element_order(a) == 0);
      }
    }
  }
}

TEST_CASE("trace is additive and takes both values") {
  for (unsigned f : {2u, 3u, 5u, 6u}) {
    Gf2 fq(f);
    std::uint64_t n = std::uint64_t{1} << f;
    unsigned ones = 0;
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b)
        CHECK(fq.trace(a ^ b) == (fq.trace(a) ^ fq.trace(b)));
      if (fq.trace(a)) ++ones;
    }
    CHECK(ones == n / 2);  // trace is onto with equal fibers
  }
}

TEST_CASE("canonical roots of unity have exact order") {
  struct Case { unsigned f; std::uint64_t d; };
  for (auto [f, d] : {Case{2, 3}, Case{3, 7}, Case{4, 5}, Case{4, 15}, Case{6, 9},
                      Case{10, 11}, Case{12, 13}}) {
    Gf2 fq(f);
    std::uint64_t w = fq.canonical_root_of_unity(d);
    CHECK(fq.element_order(w) == d);
    CHECK(fq.pow(w, d) == 1);
  }
  CHECK_THROWS(Gf2(3).canonical_root_of_unity(5));  // 5 does not divide 7
}

TEST_CASE("order of 2 modulo small odd numbers") {
  CHECK(oddab::multiplicative_order_of_2(1) == 1);
  CHECK(oddab::multiplicative_order_of_2(3) == 2);
  CHECK(oddab::multiplicative_order_of_2(7) == 3);
  CHECK(oddab::multiplicative_order_of_2(9) == 6);
  CHECK(oddab::multiplicative_order_of_2(23) == 11);
  CHECK(oddab::multiplicative_order_of_2(37) == 36);
  CHECK_THROWS(oddab::multiplicative_order_of_2(4));
}
