#include "oddab/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddab {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) { std::uint64_t t = a % b; a = b; b = t; }
  return a;
}
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / gcd_u64(a, b) * b; }

std::uint64_t char_order(const OddAbelianGroup& g, const std::vector<std::uint64_t>& e) {
  std::uint64_t d = 1;
  const auto& fac = g.invariant_factors();
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t di = fac[i];
    d = lcm_u64(d, di / gcd_u64(e[i] % di, di));  // gcd(0, d) = d
  }
  return d;
}

std::vector<std::uint64_t> canonicalize(const OddAbelianGroup& g,
                                        std::vector<std::uint64_t> e) {
  const auto& fac = g.invariant_factors();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] %= fac[i];
  std::uint64_t d = char_order(g, e);
  unsigned f = multiplicative_order_of_2(d);
  std::vector<std::uint64_t> best = e, cur = e;
  for (unsigned j = 1; j < f; ++j) {
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = (cur[i] * 2) % fac[i];
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

CharacterClass::CharacterClass(const OddAbelianGroup& group,
                               std::vector<std::uint64_t> exponents)
    : group_(group) {
  if (exponents.size() != group.num_generators())
    throw std::invalid_argument("exponent tuple does not match group shape");
  exps_ = canonicalize(group, std::move(exponents));
  order_ = char_order(group_, exps_);
  degree_ = multiplicative_order_of_2(order_);
}

CharacterClass CharacterClass::dual() const {
  std::vector<std::uint64_t> neg(exps_.size());
  const auto& fac = group_.invariant_factors();
  for (std::size_t i = 0; i < exps_.size(); ++i) neg[i] = (fac[i] - exps_[i]) % fac[i];
  return CharacterClass(group_, std::move(neg));
}

bool CharacterClass::is_self_dual() const { return dual().exps_ == exps_; }

std::uint64_t CharacterClass::generator_image(std::size_t i) const {
  Gf2 fq(degree_);
  std::uint64_t zeta = fq.canonical_root_of_unity(order_);
  const auto& fac = group_.invariant_factors();
  std::uint64_t di = fac[i], ei = exps_[i] % di;
  if (ei == 0) return 1;
  std::uint64_t g = gcd_u64(ei, di);
  std::uint64_t img_ord = di / g;        // order of the image
  std::uint64_t t = (order_ / img_ord) * (ei / g) % order_;
  return fq.pow(zeta, t);
}

std::uint64_t CharacterClass::value(const std::vector<std::uint64_t>& elem) const {
  Gf2 fq(degree_);
  std::uint64_t zeta = fq.canonical_root_of_unity(order_);
  const auto& fac = group_.invariant_factors();
  if (elem.size() != fac.size()) throw std::invalid_argument("element tuple size");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < fac.size(); ++i) {
    std::uint64_t di = fac[i], ei = exps_[i] % di;
    if (ei == 0) continue;
    std::uint64_t g = gcd_u64(ei, di);
    std::uint64_t t = (order_ / (di / g)) * (ei / g) % order_;
    total = (total + (unsigned __int128)t * (elem[i] % di)) % order_;
  }
  return fq.pow(zeta, total);
}

std::string CharacterClass::id() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << '.';
    os << exps_[i];
  }
  return os.str();
}

bool CharacterClass::operator==(const CharacterClass& o) const {
  return group_ == o.group_ && exps_ == o.exps_;
}
bool CharacterClass::operator<(const CharacterClass& o) const { return exps_ < o.exps_; }

std::vector<CharacterClass> character_classes(const OddAbelianGroup& g) {
  std::vector<std::vector<std::uint64_t>> reps;
  for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
    auto canon = canonicalize(g, g.element(idx));
    reps.push_back(canon);
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<CharacterClass> out;
  out.reserve(reps.size());
  std::uint64_t degree_sum = 0;
  for (auto& r : reps) {
    out.emplace_back(g, std::move(r));
    degree_sum += out.back().degree();
  }
  if (degree_sum != g.order())
    throw std::logic_error("character degree sum does not match group order");
  return out;
}

bool all_self_dual(const OddAbelianGroup& g) {
  std::uint64_t m = g.exponent();
  if (m == 1) return true;
  std::uint64_t pow2 = 2 % m;
  for (;;) {
    if (pow2 == m - 1) return true;
    if (pow2 == 1) return false;
    pow2 = (pow2 * 2) % m;
  }
}

}  // namespace oddab
