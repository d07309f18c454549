#include "oddab/gmodule.hpp"

#include <stdexcept>

namespace oddab {

GModule::GModule(const OddAbelianGroup& group, std::vector<BitMatrix> generator_actions)
    : group_(group), actions_(std::move(generator_actions)) {
  if (actions_.size() != group.num_generators())
    throw std::invalid_argument("one action matrix per invariant factor required");
  dim_ = actions_.empty() ? 0 : actions_[0].rows();
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    const BitMatrix& a = actions_[i];
    if (a.rows() != dim_ || a.cols() != dim_)
      throw std::invalid_argument("action matrices must be square of equal size");
    if (!a.is_invertible())
      throw std::invalid_argument("action matrix is not invertible");
    if (!(a.pow(group.invariant_factors()[i]) == BitMatrix::identity(dim_)))
      throw std::invalid_argument("action matrix order does not divide the invariant factor");
    for (std::size_t j = 0; j < i; ++j)
      if (!(a * actions_[j] == actions_[j] * a))
        throw std::invalid_argument("action matrices must commute");
  }
}

BitMatrix GModule::action(const std::vector<std::uint64_t>& elem) const {
  BitMatrix acc = BitMatrix::identity(dim_);
  for (std::size_t i = 0; i < actions_.size(); ++i)
    if (elem[i] % group_.invariant_factors()[i] != 0)
      acc = acc * actions_[i].pow(elem[i] % group_.invariant_factors()[i]);
  return acc;
}

GModule GModule::regular(const OddAbelianGroup& group) {
  std::size_t n = group.order();
  std::vector<BitMatrix> acts;
  for (std::size_t i = 0; i < group.num_generators(); ++i) {
    std::vector<std::uint64_t> gen(group.num_generators(), 0);
    gen[i] = 1;
    std::uint64_t gi = group.index_of(gen);
    BitMatrix p(n, n);
    for (std::uint64_t e = 0; e < n; ++e) p.set(group.mul_index(gi, e), e, true);
    acts.push_back(std::move(p));
  }
  return GModule(group, std::move(acts));
}

GModule GModule::irreducible(const CharacterClass& chi) {
  unsigned f = chi.degree();
  Gf2 fq(f);
  std::vector<BitMatrix> acts;
  for (std::size_t i = 0; i < chi.group().num_generators(); ++i) {
    std::uint64_t img = chi.generator_image(i);
    BitMatrix m(f, f);
    // column j = img * x^j on the power basis
    for (unsigned j = 0; j < f; ++j) {
      std::uint64_t v = fq.mul(img, std::uint64_t{1} << j);
      for (unsigned r = 0; r < f; ++r)
        if ((v >> r) & 1) m.set(r, j, true);
    }
    acts.push_back(std::move(m));
  }
  return GModule(chi.group(), std::move(acts));
}

GModule GModule::direct_sum(const GModule& a, const GModule& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("direct sum over different groups");
  std::size_t n = a.dimension() + b.dimension();
  std::vector<BitMatrix> acts;
  for (std::size_t i = 0; i < a.group().num_generators(); ++i) {
    BitMatrix m(n, n);
    for (std::size_t r = 0; r < a.dimension(); ++r)
      for (std::size_t c = 0; c < a.dimension(); ++c)
        if (a.generator_action(i).get(r, c)) m.set(r, c, true);
    for (std::size_t r = 0; r < b.dimension(); ++r)
      for (std::size_t c = 0; c < b.dimension(); ++c)
        if (b.generator_action(i).get(r, c)) m.set(a.dimension() + r, a.dimension() + c, true);
    acts.push_back(std::move(m));
  }
  return GModule(a.group(), std::move(acts));
}

BitMatrix isotypic_projector(const GModule& m, const CharacterClass& chi, bool include_dual) {
  // Central idempotent of the chi-orbit: coefficient of g is Tr(chi(g^-1)),
  // the trace landing in GF(2); |G| odd makes 1/|G| = 1.
  const OddAbelianGroup& g = m.group();
  Gf2 fq(chi.degree());
  CharacterClass dual = chi.dual();
  Gf2 fq_dual(dual.degree());
  bool add_dual = include_dual && !(dual == chi);
  BitMatrix proj(m.dimension(), m.dimension());
  for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
    auto inv = g.element(g.inverse_index(idx));
    bool coeff = fq.trace(chi.value(inv));
    if (add_dual) coeff ^= fq_dual.trace(dual.value(inv));
    if (coeff) proj = proj + m.action(g.element(idx));
  }
  return proj;
}

unsigned rk_chi(const GModule& m, const CharacterClass& chi) {
  BitMatrix proj = isotypic_projector(m, chi, /*include_dual=*/false);
  std::size_t r = proj.rank();
  if (r % chi.degree() != 0)
    throw std::logic_error("projector rank not divisible by the character degree");
  return unsigned(r / chi.degree());
}

BitMatrix isotypic_component(const GModule& m, const CharacterClass& chi, bool include_dual) {
  BitMatrix proj = isotypic_projector(m, chi, include_dual);
  // Image of the projector = row space of its transpose (columns span image).
  return proj.transpose().row_basis();
}

std::vector<std::uint64_t> star_involution(const OddAbelianGroup& g,
                                           const std::vector<std::uint64_t>& coeffs) {
  if (coeffs.size() != g.order()) throw std::invalid_argument("coefficient vector size");
  std::vector<std::uint64_t> out(coeffs.size(), 0);
  for (std::uint64_t i = 0; i < g.order(); ++i) out[g.inverse_index(i)] = coeffs[i];
  return out;
}

bool algebra_trace(const OddAbelianGroup& g, const std::vector<std::uint64_t>& x) {
  // Tr(mult by g) = n [g = 1]; n odd, so only the identity coefficient counts.
  return x[g.index_of(std::vector<std::uint64_t>(g.num_generators(), 0))] & 1;
}

bool trace_form(const OddAbelianGroup& g, const std::vector<std::uint64_t>& x,
                const std::vector<std::uint64_t>& y) {
  if (x.size() != g.order() || y.size() != g.order())
    throw std::invalid_argument("coefficient vector size");
  // identity coefficient of star(x)*y is sum_g x_g y_g: the Gram matrix on
  // the element basis is the identity.
  bool acc = false;
  for (std::uint64_t i = 0; i < g.order(); ++i) acc ^= (x[i] & y[i] & 1) != 0;
  return acc;
}

}  // namespace oddab
