#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddab/gf2e.hpp"
#include "oddab/group.hpp"

namespace oddab {

/// A character of an odd abelian group into the algebraic closure of GF(2),
/// taken up to Frobenius twist chi -> chi^2. Identified by the
/// lexicographically least exponent tuple in its twist orbit: entry i is the
/// discrete exponent of the image of generator i against a fixed compatible
/// system of roots of unity.
class CharacterClass {
public:
  CharacterClass(const OddAbelianGroup& group, std::vector<std::uint64_t> exponents);

  const OddAbelianGroup& group() const { return group_; }
  const std::vector<std::uint64_t>& exponents() const { return exps_; }

  std::uint64_t order() const { return order_; }   // d = order of the character
  unsigned degree() const { return degree_; }      // f = [GF(2)(chi) : GF(2)]
  bool is_trivial() const { return order_ == 1; }

  CharacterClass dual() const;  // class of the inverse character
  bool is_self_dual() const;

  /// Value chi(g) for a group element (as exponent tuple), inside GF(2^f).
  std::uint64_t value(const std::vector<std::uint64_t>& elem) const;
  /// Image of generator i.
  std::uint64_t generator_image(std::size_t i) const;
  /// The value field GF(2^f).
  Gf2 value_field() const { return Gf2(degree_); }

  /// Canonical id, e.g. "1" for Z/7 exponent tuple (1), "0.2" for a tuple.
  std::string id() const;

  bool operator==(const CharacterClass& o) const;
  bool operator<(const CharacterClass& o) const;  // by exponent tuple

private:
  OddAbelianGroup group_;
  std::vector<std::uint64_t> exps_;  // canonical orbit representative
  std::uint64_t order_;
  unsigned degree_;
};

/// All character classes of G, duplicate-free, sorted by exponent tuple.
/// The sum of degrees equals |G|.
std::vector<CharacterClass> character_classes(const OddAbelianGroup& g);

/// Every irreducible is self-dual iff -1 lies in the subgroup generated by 2
/// modulo the exponent of G.
bool all_self_dual(const OddAbelianGroup& g);

}  // namespace oddab
