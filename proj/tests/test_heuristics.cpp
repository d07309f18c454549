#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oddab/heuristics.hpp"

using namespace oddab::heuristics;

namespace {
mpq_class frac(long n, long d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}
}  // namespace

TEST_CASE("finite pochhammer values and monotonicity") {
  CHECK(pochhammer(frac(4, 1), 0) == 1);
  CHECK(pochhammer(frac(4, 1), 1) == frac(3, 4));
  CHECK(pochhammer(frac(4, 1), 2) == frac(45, 64));
  mpq_class prev = 2;
  for (unsigned m = 0; m < 10; ++m) {
    mpq_class cur = pochhammer(frac(2, 1), m);
    CHECK(cur > 0);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK_THROWS(pochhammer(frac(1, 2), 3));
}

TEST_CASE("infinite pochhammer with tail bound") {
  auto v = pochhammer_inf(2.0);
  CHECK(v.value == doctest::Approx(0.2887880951).epsilon(1e-9));
  CHECK(v.tail_bound < 1e-15);
  auto w = pochhammer_inf(4.0);
  CHECK(w.value == doctest::Approx(0.6885373870).epsilon(1e-7));
}

TEST_CASE("vanishing isotropy pair probability") {
  CHECK(prob_k_plus_zero(8) == frac(7, 9));
  CHECK(prob_k_plus_zero(2) == frac(1, 3));
  // strictly increasing in q
  mpq_class prev = 0;
  for (unsigned f = 1; f <= 10; ++f) {
    mpq_class cur = prob_k_plus_zero(1ul << f);
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK_THROWS(prob_k_plus_zero(6));
}

TEST_CASE("narrow class module split for degrees 7 mod 8") {
  auto s7 = conj_3mod4(7);
  CHECK(s7.unchanged == frac(7, 9));
  CHECK(s7.grows_chi == frac(1, 9));
  CHECK(s7.grows_dual == frac(1, 9));
  CHECK(s7.unchanged + s7.grows_chi + s7.grows_dual == 1);

  auto s23 = conj_3mod4(23);
  CHECK(s23.unchanged == frac(2047, 2049));
  CHECK(s23.grows_chi == frac(1, 2049));
  CHECK(s23.unchanged + s23.grows_chi + s23.grows_dual == 1);

  CHECK_THROWS(conj_3mod4(5));   // 5 is not 7 mod 8
  CHECK_THROWS(conj_3mod4(31));  // 2 has order 5, not 15
}

TEST_CASE("unit signature vanishing probability at one character") {
  CHECK(prob_sgnrk_chi(4, 1) == frac(1, 5));
  CHECK(prob_sgnrk_chi(4, 2) == frac(5, 21));
  CHECK(prob_sgnrk_chi(16, 1) == frac(1, 17));
  CHECK(prob_sgnrk_chi(8, 0) == 0);
  // strictly increasing in rho, bounded by 1/q
  for (unsigned long q : {2ul, 4ul, 8ul, 16ul}) {
    mpq_class prev = -1;
    for (unsigned rho = 0; rho <= 8; ++rho) {
      mpq_class cur = prob_sgnrk_chi(q, rho);
      CHECK(cur > prev);
      CHECK(cur < frac(1, long(q)));
      prev = cur;
    }
  }
}

TEST_CASE("binomial signature law") {
  auto m1 = binom_sgnrk(7, 1);
  CHECK(m1.sgnrk == 7);
  CHECK(m1.prob == frac(7, 9));
  auto m0 = binom_sgnrk(7, 0);
  CHECK(m0.sgnrk == 4);
  CHECK(m0.prob == frac(2, 9));

  // degree 31: order of 2 is 5, three dual pairs
  auto dist = binom_sgnrk_distribution(31);
  REQUIRE(dist.size() == 4);
  mpq_class total = 0;
  for (const auto& bm : dist) total += bm.prob;
  CHECK(total == 1);
  CHECK(dist[0].sgnrk == 16);
  CHECK(dist[3].sgnrk == 31);

  CHECK_THROWS(binom_sgnrk(5, 0));  // order of 2 mod 5 is even
}

TEST_CASE("2-rank distribution for cubic and quintic fields") {
  CHECK(malle_rk2(3, 0) == doctest::Approx(0.853049).epsilon(1e-5));
  CHECK(malle_rk2(3, 1) == doctest::Approx(0.142175).epsilon(1e-5));
  CHECK(malle_rk2(3, 2) == doctest::Approx(0.004739).epsilon(1e-4));
  CHECK(malle_rk2(5, 0) == doctest::Approx(0.983583).epsilon(1e-5));
  CHECK(malle_rk2(5, 1) == doctest::Approx(0.016393).epsilon(1e-4));

  // the r >= 3 cubic tail stays below the published bound 0.004%
  double tail = 0;
  for (unsigned r = 3; r <= 40; ++r) tail += malle_rk2(3, r);
  CHECK(tail < 4e-5);

  // masses sum to one
  for (unsigned long ell : {3ul, 5ul}) {
    double total = 0;
    for (unsigned r = 0; r <= 40; ++r) total += malle_rk2(ell, r);
    CHECK(std::abs(total - 1.0) < 1e-10);
  }

  CHECK_THROWS(malle_rk2(7, 0));  // no accepted prediction at degree 7
}

TEST_CASE("total signature-one probability and moments") {
  double p3 = conj_sgnrk1_total(3);
  CHECK(p3 == doctest::Approx(0.029573).epsilon(1e-3));
  CHECK(1 - p3 == doctest::Approx(0.9704).epsilon(1e-3));
  double p5 = conj_sgnrk1_total(5);
  CHECK(p5 < 0.001);
  CHECK(1 - p5 == doctest::Approx(0.9990).epsilon(1e-3));

  CHECK(moments_cl2(3, 1) == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(moments_cl2(3, 2) == doctest::Approx(4.5).epsilon(1e-6));
  CHECK(moments_cl2(3, 3) == doctest::Approx(40.5).epsilon(1e-6));
}

TEST_CASE("conditional signature split when 2 is a primitive root") {
  auto [p1a, pla] = conj_sgnrk_prime(3, 1);
  CHECK(p1a == frac(1, 5));
  CHECK(pla == frac(4, 5));
  auto [p1b, plb] = conj_sgnrk_prime(5, 2);
  CHECK(p1b == frac(17, 273));
  CHECK(plb == frac(256, 273));
  auto [p1c, plc] = conj_sgnrk_prime(3, 0);
  CHECK(p1c == 0);
  CHECK(plc == 1);
  CHECK_THROWS(conj_sgnrk_prime(7, 0));  // 2 is not a primitive root mod 7
}

TEST_CASE("prediction tables carry the worked constants") {
  auto t3 = prediction_tables(3);
  bool saw_fifth = false, saw_9703 = false;
  for (const auto& table : t3)
    for (const auto& row : table.rows) {
      if (row.value == "1/5") saw_fifth = true;
      if (row.value.find("97.03") != std::string::npos) saw_9703 = true;
    }
  CHECK(saw_fifth);
  CHECK(saw_9703);

  auto t7 = prediction_tables(7);
  bool saw_79 = false, saw_flag = false;
  for (const auto& row : t7[0].rows) {
    if (row.value == "7/9") saw_79 = true;
    if (row.value == "11/8?") saw_flag = true;
  }
  CHECK(saw_79);
  CHECK(saw_flag);

  // degrees beyond the published laws surface an explicit open status
  auto t11 = prediction_tables(11);
  REQUIRE(t11.size() == 1);
  CHECK(t11[0].rows[0].value.find("open") != std::string::npos);
}
