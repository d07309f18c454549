#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oddab {

/// Finite abelian group of odd order, given by invariant factors
/// d_1 | d_2 | ... | d_k with every d_i odd.
class OddAbelianGroup {
public:
  explicit OddAbelianGroup(std::vector<std::uint64_t> invariant_factors);

  const std::vector<std::uint64_t>& invariant_factors() const { return factors_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t exponent() const { return factors_.back(); }
  std::size_t num_generators() const { return factors_.size(); }

  /// Elements as exponent tuples, enumerated in mixed-radix order; the
  /// element's index doubles as its position in the regular representation.
  std::vector<std::uint64_t> element(std::uint64_t index) const;
  std::uint64_t index_of(const std::vector<std::uint64_t>& exps) const;
  std::uint64_t inverse_index(std::uint64_t index) const;
  std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const;

  std::string to_string() const;  // e.g. "Z/3 x Z/9"

  bool operator==(const OddAbelianGroup& o) const { return factors_ == o.factors_; }

private:
  std::vector<std::uint64_t> factors_;
  std::uint64_t order_;
};

}  // namespace oddab
