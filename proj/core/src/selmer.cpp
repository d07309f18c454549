#include "oddab/selmer.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace oddab {

namespace {

// Coordinates of each row of `vectors` with respect to the RREF basis
// `basis`; rows must lie in the row space.
BitMatrix coords_in_basis(const BitMatrix& basis, const BitMatrix& vectors) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::size_t c = 0;
    while (c < basis.cols() && !basis.get(r, c)) ++c;
    pivots.push_back(c);
  }
  BitMatrix out(vectors.rows(), basis.rows());
  for (std::size_t r = 0; r < vectors.rows(); ++r)
    for (std::size_t j = 0; j < pivots.size(); ++j)
      if (pivots[j] < vectors.cols() && vectors.get(r, pivots[j])) out.set(r, j, true);
  return out;
}

// Restrict a square operator to an invariant row-space basis: returns the
// matrix acting on coordinate columns.
BitMatrix restrict_operator(const BitMatrix& op, const BitMatrix& basis) {
  BitMatrix images = basis * op.transpose();  // row i = op applied to basis row i
  BitMatrix coeff = coords_in_basis(basis, images);
  return coeff.transpose();
}

GModule restrict_module(const GModule& m, const BitMatrix& basis) {
  std::vector<BitMatrix> acts;
  for (std::size_t i = 0; i < m.group().num_generators(); ++i)
    acts.push_back(restrict_operator(m.generator_action(i), basis));
  return GModule(m.group(), std::move(acts));
}

// Enumerate all vectors of the row space of `basis` as coordinate masks,
// calling fn(packed ambient row). Skips zero.
template <typename Fn>
void for_each_nonzero_vector(const BitMatrix& basis, Fn&& fn) {
  std::size_t k = basis.rows();
  if (k > 24) throw std::domain_error("subspace too large to enumerate");
  std::vector<std::uint64_t> vec(basis.words_per_row());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::fill(vec.begin(), vec.end(), 0);
    std::uint64_t m = mask;
    while (m) {
      unsigned i = __builtin_ctzll(m);
      for (std::size_t w = 0; w < vec.size(); ++w) vec[w] ^= basis.row(i)[w];
      m &= m - 1;
    }
    fn(vec, mask);
  }
}

// Module closure of a single vector (component coordinates): the GF(q)-line
// through it. Returns canonical RREF basis.
BitMatrix line_through(const GModule& m, const std::vector<std::uint64_t>& v) {
  std::vector<std::vector<std::uint64_t>> span{v};
  std::size_t wpr = v.size();
  BitMatrix cur(1, m.dimension());
  for (std::size_t w = 0; w < wpr; ++w) cur.row(0)[w] = v[w];
  for (;;) {
    BitMatrix next = cur;
    for (std::size_t i = 0; i < m.group().num_generators(); ++i) {
      BitMatrix mapped = cur * m.generator_action(i).transpose();
      next = BitMatrix::vstack(next, mapped);
    }
    BitMatrix nb = next.row_basis();
    if (nb.rows() == cur.row_basis().rows()) return cur.row_basis();
    cur = nb;
  }
}

bool is_isotropic_subspace(const BitMatrix& basis, const BitMatrix& gram) {
  BitMatrix g = basis * gram * basis.transpose();
  return g.is_zero();
}

bool is_stable_subspace(const GModule& m, const BitMatrix& basis) {
  for (std::size_t i = 0; i < m.group().num_generators(); ++i) {
    BitMatrix mapped = (basis * m.generator_action(i).transpose()).row_basis();
    BitMatrix joint = BitMatrix::vstack(basis, mapped);
    if (joint.rank() != basis.rank()) return false;
  }
  return true;
}

}  // namespace

void BilinearGSpace::validate() const {
  if (gram.rows() != dimension() || gram.cols() != dimension())
    throw std::invalid_argument("Gram matrix size mismatch");
  if (!(gram == gram.transpose())) throw std::invalid_argument("Gram not symmetric");
  if (!gram.is_invertible()) throw std::invalid_argument("Gram degenerate");
  for (std::size_t i = 0; i < module.group().num_generators(); ++i) {
    const BitMatrix& a = module.generator_action(i);
    if (!(a.transpose() * gram * a == gram))
      throw std::invalid_argument("Gram not invariant under the group action");
  }
}

BilinearGSpace build_V(const OddAbelianGroup& g) {
  GModule reg = GModule::regular(g);
  GModule doubled = GModule::direct_sum(reg, reg);
  BilinearGSpace v{std::move(doubled), BitMatrix::identity(2 * g.order()), g.order()};
  v.validate();
  return v;
}

ComponentSpace restrict_component(const BilinearGSpace& v, const CharacterClass& chi) {
  BitMatrix basis = isotypic_component(v.module, chi, /*include_dual=*/true);
  BilinearGSpace restricted{restrict_module(v.module, basis),
                            basis * v.gram * basis.transpose(), std::nullopt};
  restricted.validate();
  std::size_t n = v.dimension();
  std::size_t split = v.split.value_or(n / 2);
  BitMatrix vinf(split, n), v2(n - split, n);
  for (std::size_t i = 0; i < split; ++i) vinf.set(i, i, true);
  for (std::size_t i = split; i < n; ++i) v2.set(i - split, i, true);
  return ComponentSpace{chi, std::move(basis), std::move(restricted),
                        std::move(vinf), std::move(v2), n};
}

std::string to_string(IsotropyCase c) {
  switch (c) {
    case IsotropyCase::A: return "A";
    case IsotropyCase::B_i: return "B(i)";
    case IsotropyCase::B_i_prime: return "B(i')";
    case IsotropyCase::B_ii: return "B(ii)";
    case IsotropyCase::B_ii_prime: return "B(ii')";
    case IsotropyCase::B_iii: return "B(iii)";
  }
  return "?";
}

std::vector<InvariantSubspace> enumerate_invariant_max_isotropic(const ComponentSpace& comp) {
  const std::size_t dim = comp.space.dimension();
  if (dim > 24) throw std::domain_error("component dimension exceeds enumeration bound 24");
  if (dim % 2 != 0) throw std::invalid_argument("component dimension must be even");
  const GModule& mod = comp.space.module;
  const BitMatrix& gram = comp.space.gram;
  const CharacterClass chi = comp.chi;
  const CharacterClass dual = chi.dual();
  const bool self_dual = dual == chi;

  // Candidate G-stable half-dimension subspaces, in component coordinates.
  std::vector<BitMatrix> candidates;
  if (self_dual) {
    // GF(q)-lines of the whole component, which partition its nonzero vectors.
    std::vector<bool> seen(std::size_t{1} << dim, false);
    BitMatrix eye = BitMatrix::identity(dim);
    for_each_nonzero_vector(eye, [&](const std::vector<std::uint64_t>& v, std::uint64_t mask) {
      if (seen[mask]) return;
      BitMatrix line = line_through(mod, v);
      for_each_nonzero_vector(line, [&](const std::vector<std::uint64_t>& w, std::uint64_t) {
        seen[w[0] & ((std::uint64_t{1} << dim) - 1)] = true;
      });
      candidates.push_back(line);
    });
  } else {
    BitMatrix piece_chi = isotypic_component(mod, chi, false);
    BitMatrix piece_dual = isotypic_component(mod, dual, false);
    candidates.push_back(piece_chi);   // whole chi-piece, type F(chi)^2
    candidates.push_back(piece_dual);  // whole dual piece
    auto lines_of = [&](const BitMatrix& piece) {
      std::vector<BitMatrix> lines;
      std::vector<bool> seen(std::size_t{1} << piece.rows(), false);
      for_each_nonzero_vector(piece, [&](const std::vector<std::uint64_t>& v, std::uint64_t mask) {
        if (seen[mask]) return;
        BitMatrix line = line_through(mod, v);
        // mark every vector of the line by its coordinate mask in the piece
        BitMatrix coords = coords_in_basis(piece, line);
        for_each_nonzero_vector(coords, [&](const std::vector<std::uint64_t>& w, std::uint64_t) {
          seen[w[0] & ((std::uint64_t{1} << piece.rows()) - 1)] = true;
        });
        lines.push_back(line);
      });
      return lines;
    };
    for (const BitMatrix& lc : lines_of(piece_chi))
      for (const BitMatrix& ld : lines_of(piece_dual))
        candidates.push_back(BitMatrix::vstack(lc, ld).row_basis());
  }

  std::vector<InvariantSubspace> out;
  std::vector<std::string> dedup;
  for (const BitMatrix& cand : candidates) {
    if (cand.rows() != dim / 2) continue;
    if (!is_isotropic_subspace(cand, gram)) continue;
    BitMatrix ambient = (cand * comp.basis).row_basis();
    std::string key = ambient.to_string();
    if (std::find(dedup.begin(), dedup.end(), key) != dedup.end()) continue;
    dedup.push_back(key);
    InvariantSubspace s;
    s.basis = ambient;
    s.is_isotropic = true;
    s.is_maximal_isotropic = true;
    s.is_g_stable = true;
    s.meet_vinf = row_space_intersection(ambient, comp.ambient_vinf);
    s.meet_v2 = row_space_intersection(ambient, comp.ambient_v2);
    out.push_back(std::move(s));
  }
  return out;
}

IsotropyCase classify_case(const ComponentSpace& comp, const InvariantSubspace& s) {
  const CharacterClass chi = comp.chi;
  const CharacterClass dual = chi.dual();
  const bool self_dual = dual == chi;

  // Re-derive the flags rather than trusting the cache.
  BitMatrix comp_coords = coords_in_basis(comp.basis, s.basis);
  // membership check: reconstruct and compare
  if (!((comp_coords * comp.basis).row_basis() == s.basis.row_basis()))
    throw std::invalid_argument("subspace does not lie in the component");
  if (!is_isotropic_subspace(comp_coords, comp.space.gram))
    throw std::invalid_argument("subspace is not totally isotropic");
  if (!is_stable_subspace(comp.space.module, comp_coords))
    throw std::invalid_argument("subspace is not G-stable");
  if (comp_coords.rows() != comp.space.dimension() / 2)
    throw std::invalid_argument("subspace is not maximal");

  BitMatrix meet_inf = row_space_intersection(s.basis, comp.ambient_vinf);
  if (self_dual) {
    if (meet_inf.rows() != 0)
      throw std::invalid_argument("self-dual maximal isotropic subspace meeting V_infinity");
    return IsotropyCase::A;
  }

  // Module type of S itself.
  GModule sub = restrict_module(comp.space.module, comp_coords);
  unsigned mult_chi = rk_chi(sub, chi);
  unsigned mult_dual = rk_chi(sub, dual);
  if (mult_chi == 2 && mult_dual == 0) return IsotropyCase::B_i;
  if (mult_dual == 2 && mult_chi == 0) return IsotropyCase::B_i_prime;
  if (mult_chi != 1 || mult_dual != 1)
    throw std::logic_error("unexpected module type for a maximal isotropic subspace");
  if (meet_inf.rows() == 0) return IsotropyCase::B_iii;
  BitMatrix meet_coords = coords_in_basis(comp.basis, meet_inf);
  GModule meet_mod = restrict_module(comp.space.module, meet_coords);
  if (rk_chi(meet_mod, chi) == 1) return IsotropyCase::B_ii;
  if (rk_chi(meet_mod, dual) == 1) return IsotropyCase::B_ii_prime;
  throw std::logic_error("intersection with V_infinity has unexpected type");
}

CaseRelations ranks_from_case(IsotropyCase c) {
  switch (c) {
    case IsotropyCase::A:          return {0, 0, 0, 0};
    case IsotropyCase::B_i:        return {+1, 0, 0, 1};
    case IsotropyCase::B_i_prime:  return {-1, 0, 1, 0};
    case IsotropyCase::B_ii:       return {0, -1, 0, 1};
    case IsotropyCase::B_ii_prime: return {0, +1, 1, 0};
    case IsotropyCase::B_iii:      return {0, 0, 0, 0};
  }
  throw std::invalid_argument("unknown case");
}

namespace {

void check_pair(const CharacterClass& chi, const CharRanks& a, const CharRanks& b,
                std::vector<ProfileViolation>& out) {
  const std::string id = chi.id();
  auto add = [&](const std::string& rule, const std::string& detail) {
    out.push_back({rule, id, detail});
  };
  bool self_dual = chi.is_self_dual();
  long rho = a.rho, rho_d = b.rho;
  if (std::labs(rho - rho_d) > 1) add("class-rank-dual-gap", "|rho - rho_dual| > 1");

  std::optional<long> kp, kp_d, k4, k4_d;
  if (a.rho_plus) {
    if (*a.rho_plus < a.rho) add("narrow-rank-below-class-rank", "rho+ < rho");
    else kp = long(*a.rho_plus) - long(a.rho);
  }
  if (b.rho_plus) {
    if (*b.rho_plus < b.rho) add("narrow-rank-below-class-rank", "rho+ < rho (dual)");
    else kp_d = long(*b.rho_plus) - long(b.rho);
  }
  if (a.rho_4) {
    if (*a.rho_4 < a.rho) add("ray-rank-below-class-rank", "rho4 < rho");
    else k4 = long(*a.rho_4) - long(a.rho);
  }
  if (b.rho_4) {
    if (*b.rho_4 < b.rho) add("ray-rank-below-class-rank", "rho4 < rho (dual)");
    else k4_d = long(*b.rho_4) - long(b.rho);
  }

  if (self_dual) {
    if (kp && *kp != 0) add("self-dual-forces-kplus-zero", "k+ != 0 at self-dual character");
    if (k4 && *k4 != 0) add("self-dual-forces-k4-zero", "k4 != 0 at self-dual character");
  } else {
    if (kp && kp_d) {
      long s = *kp + *kp_d;
      if (s < 0 || s > 1) add("isotropy-pair-sum", "k+_chi + k+_dual outside {0,1}");
      if (rho != rho_d && s != 1) add("unequal-ranks-force-kplus-one", "rho != rho_dual needs k+ sum 1");
      if (rho == rho_d + 1 && !(*kp == 0 && *kp_d == 1)) add("case-i-kplus-pattern", "(k+,k+dual) != (0,1)");
      if (rho + 1 == rho_d && !(*kp == 1 && *kp_d == 0)) add("case-i-kplus-pattern", "(k+,k+dual) != (1,0)");
    }
    if (k4 && k4_d) {
      long s4 = *k4 + *k4_d;
      if (s4 < 0 || s4 > 1) add("isotropy-pair-sum-ray", "k4_chi + k4_dual outside {0,1}");
      if (kp && kp_d && s4 != *kp + *kp_d)
        add("kplus-k4-pair-mismatch", "k+_chi + k+_dual != k4_chi + k4_dual");
    }
    if (a.rho_plus && b.rho_plus &&
        std::labs(long(*a.rho_plus) - long(*b.rho_plus)) > 1)
      add("narrow-rank-dual-gap", "|rho+ - rho+_dual| > 1");
    if (a.rho_4 && b.rho_4 && std::labs(long(*a.rho_4) - long(*b.rho_4)) > 1)
      add("ray-rank-dual-gap", "|rho4 - rho4_dual| > 1");
  }

  // unit signature structure at chi
  auto check_sgn = [&](const CharRanks& r, const char* which) {
    if (!r.sgnrk) return;
    if (*r.sgnrk > 1) { add("signature-rank-range", std::string("sgnrk outside {0,1} ") + which); return; }
    if (r.rho_plus) {
      long k = long(*r.rho_plus) - long(r.rho);
      if (k == 1 && *r.sgnrk != 0) add("kplus-one-forces-sgnrk-zero", which);
      if (k == 0 && r.rho == 0 && *r.sgnrk != 1) add("odd-part-forces-sgnrk-one", which);
    }
  };
  check_sgn(a, "chi");
  if (!self_dual) check_sgn(b, "dual");
}

}  // namespace

std::vector<ProfileViolation> validate_profile(const RankProfile& p) {
  std::vector<ProfileViolation> out;
  auto classes = character_classes(p.group);

  auto ranks_of = [&](const CharacterClass& c) {
    auto it = p.by_char.find(c.id());
    return it == p.by_char.end() ? std::optional<CharRanks>{} : std::optional<CharRanks>{it->second};
  };

  for (const CharacterClass& chi : classes) {
    auto mine = ranks_of(chi);
    if (!mine) continue;
    if (chi.is_trivial()) {
      if (mine->rho != 0 || (mine->rho_plus && *mine->rho_plus != 0) ||
          (mine->rho_4 && *mine->rho_4 != 0))
        out.push_back({"trivial-character-ranks", chi.id(), "invariants of the 2-groups are trivial"});
      if (mine->sgnrk && *mine->sgnrk != 1)
        out.push_back({"trivial-character-signature", chi.id(), "sign of -1 generates the trivial piece"});
      continue;
    }
    CharacterClass dual = chi.dual();
    if (!chi.is_self_dual() && dual < chi) continue;  // visit each pair once
    auto theirs = chi.is_self_dual() ? mine : ranks_of(dual);
    if (!theirs) continue;
    check_pair(chi, *mine, *theirs, out);
  }

  // aggregate checks
  if (p.rk2_cl && p.rk2_clplus && *p.rk2_clplus < *p.rk2_cl)
    out.push_back({"narrow-rank-below-class-rank", "", "rk2 Cl+ < rk2 Cl"});
  if (p.rk2_cl4 && p.rk2_clplus && *p.rk2_cl4 != *p.rk2_clplus)
    out.push_back({"ray-equals-narrow-total", "", "totally real fields have k4 = k+"});
  // degree divisibility for cyclic prime-degree fields
  if (p.group.num_generators() == 1) {
    std::uint64_t ell = p.group.order();
    bool prime = ell > 1;
    for (std::uint64_t d = 2; d * d <= ell; ++d)
      if (ell % d == 0) { prime = false; break; }
    if (prime && ell > 2) {
      unsigned f = multiplicative_order_of_2(ell);
      auto check_div = [&](const std::optional<unsigned>& v, const char* name) {
        if (v && *v % f != 0)
          out.push_back({"degree-divisibility", "", std::string(name) + " not divisible by f"});
      };
      check_div(p.rk2_cl, "rk2 Cl");
      check_div(p.rk2_clplus, "rk2 Cl+");
      check_div(p.rk2_cl4, "rk2 Cl4");
      if (p.sgnrk_total) {
        if (*p.sgnrk_total % f != 1 % f)
          out.push_back({"signature-congruence", "", "sgnrk != 1 mod f"});
        if (p.rk2_cl) {
          auto [lo, hi] = sgnrk_bounds(unsigned(ell), *p.rk2_cl);
          if (*p.sgnrk_total < lo || *p.sgnrk_total > hi)
            out.push_back({"signature-bounds", "", "sgnrk outside the degree bounds"});
        }
      }
    }
  }
  return out;
}

std::pair<unsigned, unsigned> sgnrk_bounds(unsigned ell, unsigned rk2_cl) {
  unsigned f = multiplicative_order_of_2(ell);
  long lo;
  if (f % 2 == 1) lo = long(ell + 1) / 2 - long(rk2_cl);
  else lo = long(ell) - long(rk2_cl);
  if (lo < 1) lo = 1;
  return {unsigned(lo), ell};
}

}  // namespace oddab
