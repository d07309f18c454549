#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddab/bitmatrix.hpp"
#include "oddab/characters.hpp"
#include "oddab/gmodule.hpp"

namespace oddab {

/// GF(2) space with commuting group action, invariant symmetric nondegenerate
/// Gram matrix, and an optional split into an archimedean block and a 2-adic
/// block (first half / second half of the coordinates when present).
struct BilinearGSpace {
  GModule module;
  BitMatrix gram;
  // When set, coordinates [0, split) form the archimedean summand and
  // [split, dim) the 2-adic summand.
  std::optional<std::size_t> split;

  std::size_t dimension() const { return module.dimension(); }
  void validate() const;  // throws unless Gram is symmetric, invertible, invariant
};

/// The doubled regular bilinear space V = GF(2)[G] (+) GF(2)[G] with the
/// trace form on each summand; Gram is the identity on the element basis.
BilinearGSpace build_V(const OddAbelianGroup& g);

/// Restriction of V to the isotypic component of {chi, dual(chi)}: basis rows
/// of the component, plus the restricted module, Gram and split data.
struct ComponentSpace {
  CharacterClass chi;
  BitMatrix basis;            // rows: component basis inside the ambient space
  BilinearGSpace space;       // restricted module + Gram (no split marker)
  BitMatrix ambient_vinf;     // ambient-coordinates basis of the V_infinity block
  BitMatrix ambient_v2;
  std::size_t ambient_dim;
};
ComponentSpace restrict_component(const BilinearGSpace& v, const CharacterClass& chi);

/// G-stable subspace in canonical row-echelon form, with cached structure.
struct InvariantSubspace {
  BitMatrix basis;                 // RREF rows, ambient coordinates
  bool is_isotropic = false;
  bool is_maximal_isotropic = false;
  bool is_g_stable = false;
  BitMatrix meet_vinf;             // intersection with the archimedean block
  BitMatrix meet_v2;
};

enum class IsotropyCase { A, B_i, B_i_prime, B_ii, B_ii_prime, B_iii };
std::string to_string(IsotropyCase c);

/// All G-invariant maximal totally isotropic subspaces of one component.
/// Candidates are GF(q)-sublines of the isotypic pieces (module closures of
/// single vectors), so the search is linear in q. Throws if the component
/// dimension exceeds 24.
std::vector<InvariantSubspace> enumerate_invariant_max_isotropic(const ComponentSpace& comp);

/// Classifies one enumerated subspace per the five non-self-dual cases or the
/// single self-dual case. Throws on non-isotropic or non-stable input.
IsotropyCase classify_case(const ComponentSpace& comp, const InvariantSubspace& s);

/// Rank relations attached to a case: differences are (chi value) - (dual value).
struct CaseRelations {
  int rho_diff;       // rho_chi - rho_dual
  int rho_plus_diff;  // rho+_chi - rho+_dual
  int k_plus_chi;
  int k_plus_dual;
};
CaseRelations ranks_from_case(IsotropyCase c);

/// Per-character rank data for one field.
struct CharRanks {
  unsigned rho = 0;                       // rk_chi Cl
  std::optional<unsigned> rho_plus;       // rk_chi Cl+
  std::optional<unsigned> rho_4;          // rk_chi Cl_4
  std::optional<unsigned> sgnrk;          // 0 or 1
};

/// Rank profile of one field: per-character data keyed by canonical character
/// id, plus optional aggregate 2-ranks.
struct RankProfile {
  OddAbelianGroup group;
  std::map<std::string, CharRanks> by_char;  // key: CharacterClass::id()
  std::optional<unsigned> rk2_cl, rk2_clplus, rk2_cl4;
  std::optional<unsigned> sgnrk_total;

  explicit RankProfile(const OddAbelianGroup& g) : group(g) {}
};

struct ProfileViolation {
  std::string rule;       // stable machine-readable tag
  std::string character;  // offending character id, or "" for aggregate rules
  std::string detail;
};

/// Structural validation of a profile. Optional fields that are absent are
/// left unchecked. Violations are data, not errors.
std::vector<ProfileViolation> validate_profile(const RankProfile& p);

/// Signature-rank bounds for a cyclic field of odd prime degree ell with the
/// given 2-rank of the class group; the congruence sgnrk = 1 (mod f) also
/// holds, f the order of 2 mod ell.
std::pair<unsigned, unsigned> sgnrk_bounds(unsigned ell, unsigned rk2_cl);

}  // namespace oddab
