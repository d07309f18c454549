#pragma once

#include <cstdint>
#include <vector>

#include "oddab/bitmatrix.hpp"
#include "oddab/characters.hpp"
#include "oddab/group.hpp"

namespace oddab {

/// A GF(2)[G]-module for an odd abelian G: one invertible action matrix per
/// invariant-factor generator. Matrices must commute and respect the
/// generator orders; the constructor checks both.
class GModule {
public:
  GModule(const OddAbelianGroup& group, std::vector<BitMatrix> generator_actions);

  const OddAbelianGroup& group() const { return group_; }
  std::size_t dimension() const { return dim_; }
  const BitMatrix& generator_action(std::size_t i) const { return actions_[i]; }

  /// Action of the group element with the given exponent tuple.
  BitMatrix action(const std::vector<std::uint64_t>& elem) const;

  /// The regular module GF(2)[G] (generators act as permutations of the
  /// element basis, indexed by OddAbelianGroup::element).
  static GModule regular(const OddAbelianGroup& group);

  /// The irreducible module GF(2)(chi), f-dimensional, with generator i
  /// acting as multiplication by chi(g_i) on the power basis of GF(2^f).
  static GModule irreducible(const CharacterClass& chi);

  /// Direct sum.
  static GModule direct_sum(const GModule& a, const GModule& b);

private:
  OddAbelianGroup group_;
  std::vector<BitMatrix> actions_;
  std::size_t dim_;
};

/// Multiplicity of the irreducible GF(2)(chi) in M (chi-rank). Computed from
/// the rank of the isotypic projector; a Hom-space solver in the tests serves
/// as the independent oracle.
unsigned rk_chi(const GModule& m, const CharacterClass& chi);

/// Basis (rows) of the chi-isotypic component of M, or of the combined
/// component for {chi, dual(chi)} when include_dual is set.
BitMatrix isotypic_component(const GModule& m, const CharacterClass& chi,
                             bool include_dual);

/// Matrix of the isotypic projector for chi (or the chi +/- pair) acting on M.
BitMatrix isotypic_projector(const GModule& m, const CharacterClass& chi,
                             bool include_dual);

/// Star involution on the group algebra: sends the basis element g to its
/// inverse. Input/output are coefficient vectors over the element basis.
std::vector<std::uint64_t> star_involution(const OddAbelianGroup& g,
                                           const std::vector<std::uint64_t>& coeffs);

/// Trace form b(x, y) = Tr(star(x) y) on GF(2)[G]; on the element basis the
/// Gram matrix is the identity (the regular trace of g is [g = 1] since |G|
/// is odd).
bool trace_form(const OddAbelianGroup& g, const std::vector<std::uint64_t>& x,
                const std::vector<std::uint64_t>& y);

/// Regular trace of the multiplication-by-x operator on GF(2)[G].
bool algebra_trace(const OddAbelianGroup& g, const std::vector<std::uint64_t>& x);

}  // namespace oddab
