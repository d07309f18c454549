#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oddab/characters.hpp"
#include "oddab/gmodule.hpp"
#include "oddab/group.hpp"

using namespace oddab;

namespace {

// Independent multiplicity oracle: dimension of the solution space of
// rho(g_i) X = X C_i over GF(2), divided by the degree.
unsigned hom_rank_oracle(const GModule& m, const CharacterClass& chi) {
  GModule irr = GModule::irreducible(chi);
  std::size_t dm = m.dimension(), f = irr.dimension();
  std::size_t vars = dm * f;
  std::vector<std::string> rows;
  for (std::size_t gen = 0; gen < m.group().num_generators(); ++gen) {
    const BitMatrix& A = m.generator_action(gen);
    const BitMatrix& C = irr.generator_action(gen);
    // constraint (A X - X C)[r][c] = 0
    for (std::size_t r = 0; r < dm; ++r)
      for (std::size_t c = 0; c < f; ++c) {
        std::string row(vars, '0');
        for (std::size_t k = 0; k < dm; ++k)
          if (A.get(r, k)) row[k * f + c] = row[k * f + c] == '1' ? '0' : '1';
        for (std::size_t k = 0; k < f; ++k)
          if (C.get(k, c)) row[r * f + k] = row[r * f + k] == '1' ? '0' : '1';
        rows.push_back(std::move(row));
      }
  }
  BitMatrix sys = BitMatrix::from_rows(rows);
  std::size_t sol_dim = vars - sys.rank();
  REQUIRE(sol_dim % f == 0);
  return unsigned(sol_dim / f);
}

std::vector<OddAbelianGroup> small_odd_abelian_groups(std::uint64_t max_order) {
  std::vector<OddAbelianGroup> out;
  // invariant factor chains d1 | d2 with small products cover every odd
  // abelian group of order <= 45
  for (std::uint64_t d1 = 1; d1 <= max_order; d1 += 2) {
    for (std::uint64_t d2 = d1; d1 * d2 <= max_order; d2 += 2) {
      if (d2 % d1 != 0) continue;
      if (d1 == 1 && d2 == 1) continue;
      if (d1 == 1) out.push_back(OddAbelianGroup({d2}));
      else out.push_back(OddAbelianGroup({d1, d2}));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("group validation") {
  CHECK_THROWS(OddAbelianGroup({6}));      // even
  CHECK_THROWS(OddAbelianGroup({}));       // empty
  CHECK_THROWS(OddAbelianGroup({3, 5}));   // 3 does not divide 5
  OddAbelianGroup g({3, 9});
  CHECK(g.order() == 27);
  CHECK(g.exponent() == 9);
  CHECK(g.to_string() == "Z/3 x Z/9");
}

TEST_CASE("character classes of small cyclic groups") {
  auto c3 = character_classes(OddAbelianGroup({3}));
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].is_trivial());
  CHECK(c3[0].degree() == 1);
  CHECK(c3[1].degree() == 2);

  auto c7 = character_classes(OddAbelianGroup({7}));
  REQUIRE(c7.size() == 3);
  CHECK(c7[0].is_trivial());
  CHECK(c7[1].degree() == 3);
  CHECK(c7[2].degree() == 3);

  // orbit structure of the nine characters under squaring: {0}, a 6-orbit
  // and a 2-orbit
  auto c9 = character_classes(OddAbelianGroup({9}));
  REQUIRE(c9.size() == 3);
  std::multiset<unsigned> degrees;
  std::multiset<std::uint64_t> orders;
  for (const auto& ch : c9) { degrees.insert(ch.degree()); orders.insert(ch.order()); }
  CHECK(degrees == std::multiset<unsigned>{1, 2, 6});
  CHECK(orders == std::multiset<std::uint64_t>{1, 3, 9});
}

TEST_CASE("degree sum equals group order for every odd abelian group up to 45") {
  for (const auto& g : small_odd_abelian_groups(45)) {
    std::uint64_t sum = 0;
    for (const auto& ch : character_classes(g)) sum += ch.degree();
    CHECK(sum == g.order());
  }
}

TEST_CASE("duality examples and involution") {
  auto c3 = character_classes(OddAbelianGroup({3}));
  CHECK(c3[0].is_self_dual());
  CHECK(c3[1].is_self_dual());  // f = 2 even

  auto c7 = character_classes(OddAbelianGroup({7}));
  CHECK(c7[1].dual() == c7[2]);  // the two nontrivial classes swap
  CHECK(c7[2].dual() == c7[1]);
  CHECK_FALSE(c7[1].is_self_dual());

  for (const auto& g : small_odd_abelian_groups(45))
    for (const auto& ch : character_classes(g))
      CHECK(ch.dual().dual() == ch);
}

TEST_CASE("all_self_dual matches the per-class check exhaustively") {
  CHECK(all_self_dual(OddAbelianGroup({3})));
  CHECK_FALSE(all_self_dual(OddAbelianGroup({7})));
  CHECK_FALSE(all_self_dual(OddAbelianGroup({15})));
  CHECK_FALSE(all_self_dual(OddAbelianGroup({3, 21})));  // exponent 21
  for (const auto& g : small_odd_abelian_groups(45)) {
    bool each = true;
    for (const auto& ch : character_classes(g)) each = each && ch.is_self_dual();
    CHECK(all_self_dual(g) == each);
  }
}

TEST_CASE("module validation") {
  OddAbelianGroup g({3});
  // zero matrix is not invertible
  CHECK_THROWS(GModule(g, {BitMatrix(2, 2)}));
  // wrong order: a 2x2 swap has order 2, not dividing 3
  CHECK_THROWS(GModule(g, {BitMatrix::from_rows({"01", "10"})}));
  // non-commuting matrices over Z/3 x Z/3
  OddAbelianGroup g2({3, 3});
  BitMatrix a = GModule::irreducible(character_classes(g)[1]).generator_action(0);
  CHECK(a.pow(3) == BitMatrix::identity(2));
}

TEST_CASE("multiplicity of irreducibles in the regular module is one") {
  for (const auto& g : small_odd_abelian_groups(27)) {
    GModule reg = GModule::regular(g);
    for (const auto& ch : character_classes(g)) {
      CHECK(rk_chi(reg, ch) == 1);
      CHECK(hom_rank_oracle(reg, ch) == 1);
    }
  }
}

TEST_CASE("multiplicity two for a doubled irreducible, zero elsewhere") {
  for (const auto& factors : {std::vector<std::uint64_t>{7}, {9}, {3, 3}}) {
    OddAbelianGroup g(factors);
    auto classes = character_classes(g);
    const CharacterClass& chi = classes.back();
    GModule irr = GModule::irreducible(chi);
    GModule doubled = GModule::direct_sum(irr, irr);
    for (const auto& other : classes) {
      unsigned expected = other == chi ? 2 : 0;
      CHECK(rk_chi(doubled, other) == expected);
      CHECK(hom_rank_oracle(doubled, other) == expected);
    }
  }
}

TEST_CASE("zero module has no content") {
  OddAbelianGroup g({5});
  GModule zero(g, {BitMatrix(0, 0)});
  for (const auto& ch : character_classes(g)) CHECK(rk_chi(zero, ch) == 0);
}

TEST_CASE("trace form on the element basis is the Kronecker pairing") {
  for (const auto& factors : {std::vector<std::uint64_t>{3}, {5}}) {
    OddAbelianGroup g(factors);
    std::uint64_t n = g.order();
    GModule reg = GModule::regular(g);
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = 0; j < n; ++j) {
        std::vector<std::uint64_t> x(n, 0), y(n, 0);
        x[i] = 1;
        y[j] = 1;
        // oracle: regular trace of multiplication by g_i^-1 g_j
        BitMatrix mult = reg.action(g.element(g.mul_index(g.inverse_index(i), j)));
        CHECK(trace_form(g, x, y) == mult.trace());
        CHECK(trace_form(g, x, y) == (i == j));
      }
    }
  }
}

TEST_CASE("trace of the identity element is one") {
  OddAbelianGroup g({3});
  std::vector<std::uint64_t> one(g.order(), 0);
  one[0] = 1;
  CHECK(trace_form(g, one, one) == true);
}

TEST_CASE("star involution permutes the basis by inversion") {
  OddAbelianGroup g({9});
  std::vector<std::uint64_t> x(9, 0);
  x[2] = 1;  // the element 2 of Z/9
  auto sx = star_involution(g, x);
  CHECK(sx[g.inverse_index(2)] == 1);
  CHECK(star_involution(g, sx) == x);
}

TEST_CASE("trace form is symmetric, nondegenerate and invariant up to order 45") {
  for (const auto& g : small_odd_abelian_groups(45)) {
    std::uint64_t n = g.order();
    // Gram on the element basis: identity, hence symmetric and invertible
    BitMatrix gram(n, n);
    std::vector<std::uint64_t> x(n, 0), y(n, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = 0; j < n; ++j) {
        x.assign(n, 0);
        y.assign(n, 0);
        x[i] = 1;
        y[j] = 1;
        gram.set(i, j, trace_form(g, x, y));
      }
    }
    CHECK(gram == BitMatrix::identity(n));
    // invariance under translation by any group element
    GModule reg = GModule::regular(g);
    for (std::size_t gi = 0; gi < g.num_generators(); ++gi) {
      const BitMatrix& a = reg.generator_action(gi);
      CHECK(a.transpose() * gram * a == gram);
    }
  }
}

TEST_CASE("form vanishes between components of non-dual-paired classes") {
  for (const auto& g : small_odd_abelian_groups(45)) {
    GModule reg = GModule::regular(g);
    auto classes = character_classes(g);
    std::vector<BitMatrix> comps;
    for (const auto& ch : classes) comps.push_back(isotypic_component(reg, ch, false));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        if (classes[i].dual() == classes[j]) continue;
        // Gram is the identity, so orthogonality is a plain dot product
        BitMatrix prod = comps[i] * comps[j].transpose();
        CHECK(prod.is_zero());
      }
    }
  }
}

TEST_CASE("form restricted to a nontrivial self-dual component is alternating") {
  OddAbelianGroup g({3});
  GModule reg = GModule::regular(g);
  BitMatrix comp = isotypic_component(reg, character_classes(g)[1], false);
  // all vectors v in the component satisfy b(v, v) = 0
  for (unsigned mask = 1; mask < (1u << comp.rows()); ++mask) {
    std::vector<std::uint64_t> v(g.order(), 0);
    for (unsigned i = 0; i < comp.rows(); ++i)
      if ((mask >> i) & 1)
        for (std::uint64_t c = 0; c < g.order(); ++c)
          if (comp.get(i, c)) v[c] ^= 1;
    CHECK(trace_form(g, v, v) == false);
  }
}

TEST_CASE("isotypic component dimensions") {
  OddAbelianGroup z3({3}), z7({7});
  GModule r3 = GModule::regular(z3), r7 = GModule::regular(z7);
  CHECK(isotypic_component(r3, character_classes(z3)[1], false).rows() == 2);
  CHECK(isotypic_component(r7, character_classes(z7)[1], true).rows() == 6);
  // components for distinct orbit pairs intersect trivially and sum to V
  for (const auto& g : small_odd_abelian_groups(27)) {
    GModule reg = GModule::regular(g);
    std::size_t total = 0;
    BitMatrix stacked(0, g.order());
    for (const auto& ch : character_classes(g)) {
      if (!ch.is_self_dual() && ch.dual() < ch) continue;
      BitMatrix comp = isotypic_component(reg, ch, true);
      total += comp.rows();
      stacked = BitMatrix::vstack(stacked, comp);
    }
    CHECK(total == g.order());
    CHECK(stacked.rank() == g.order());
  }
}
