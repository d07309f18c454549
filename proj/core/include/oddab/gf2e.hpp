#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oddab {

/// Arithmetic in GF(2^f) for f <= 40, elements packed into a 64-bit
/// coefficient mask (bit i = coefficient of x^i). Each degree uses one fixed
/// modulus: the lexicographically least irreducible polynomial of that
/// degree, shipped in data/modulus_table.txt and embedded here.
class Gf2 {
public:
  static constexpr unsigned kMaxDegree = 40;

  explicit Gf2(unsigned degree);

  unsigned degree() const { return f_; }
  std::uint64_t modulus() const { return mod_; }
  std::uint64_t order() const { return (std::uint64_t{1} << f_) - 1; }  // |F*|

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws on zero

  /// Absolute trace to GF(2).
  bool trace(std::uint64_t a) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(std::uint64_t a) const;

  /// The canonical element of multiplicative order d (least nonzero
  /// coefficient mask whose (2^f-1)/d power has exact order d); requires
  /// d | 2^f - 1.
  std::uint64_t canonical_root_of_unity(std::uint64_t d) const;

  /// Modulus polynomial for one degree, as the packed coefficient mask.
  static std::uint64_t modulus_for_degree(unsigned f);

  /// Text of the shipped modulus table ("f:bits" per line, degree-0 bit
  /// first), identical to data/modulus_table.txt.
  static std::string modulus_table_text();

  /// Parses table text in the shipped format; returns {degree, mask} pairs.
  static std::vector<std::pair<unsigned, std::uint64_t>> parse_modulus_table(
      const std::string& text);

  /// Irreducibility over GF(2) of a packed polynomial of given degree.
  static bool is_irreducible(std::uint64_t poly, unsigned degree);

private:
  unsigned f_;
  std::uint64_t mod_;
};

/// Multiplicative order of 2 modulo odd d >= 1 (order of Frobenius); f(1) = 1.
unsigned multiplicative_order_of_2(std::uint64_t d);

/// Prime factorization by trial division (intended for <= ~2^50).
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

}  // namespace oddab
