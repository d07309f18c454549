#include "oddab/group.hpp"

#include <sstream>
#include <stdexcept>

namespace oddab {

OddAbelianGroup::OddAbelianGroup(std::vector<std::uint64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  if (factors_.empty()) throw std::invalid_argument("empty invariant factor list");
  order_ = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t d = factors_[i];
    if (d < 1) throw std::invalid_argument("invariant factor must be >= 1");
    if (d % 2 == 0) throw std::invalid_argument("group order must be odd");
    if (i + 1 < factors_.size() && factors_[i + 1] % d != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
    order_ *= d;
  }
}

std::vector<std::uint64_t> OddAbelianGroup::element(std::uint64_t index) const {
  std::vector<std::uint64_t> e(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    e[i] = index % factors_[i];
    index /= factors_[i];
  }
  return e;
}

std::uint64_t OddAbelianGroup::index_of(const std::vector<std::uint64_t>& exps) const {
  if (exps.size() != factors_.size()) throw std::invalid_argument("exponent tuple size");
  std::uint64_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx += (exps[i] % factors_[i]) * stride;
    stride *= factors_[i];
  }
  return idx;
}

std::uint64_t OddAbelianGroup::inverse_index(std::uint64_t index) const {
  auto e = element(index);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (factors_[i] - e[i]) % factors_[i];
  return index_of(e);
}

std::uint64_t OddAbelianGroup::mul_index(std::uint64_t a, std::uint64_t b) const {
  auto x = element(a), y = element(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % factors_[i];
  return index_of(x);
}

std::string OddAbelianGroup::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << factors_[i];
  }
  return os.str();
}

}  // namespace oddab
