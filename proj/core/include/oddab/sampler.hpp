#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddab/montecarlo.hpp"

namespace oddab::sampler {

/// Conductor data for cyclic fields of odd prime degree ell.
struct ConductorDatum {
  std::uint64_t f = 0;
  unsigned long ell = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> factorization;
  unsigned omega = 0;        // distinct primes
  std::uint64_t field_count = 0;
};

/// A conductor is admissible when f = f' or ell^2 f' with f' a squarefree
/// product of primes = 1 (mod ell).
bool admissible(std::uint64_t f, unsigned long ell);

/// Number of cyclic degree-ell fields of conductor exactly f (0 when f is
/// not admissible). Equals (ell-1)^(omega-1) with omega the count of
/// distinct ramified primes; the character-enumeration oracle in the tests
/// pins this down.
std::uint64_t count_fields(std::uint64_t f, unsigned long ell);

ConductorDatum conductor_datum(std::uint64_t f, unsigned long ell);

/// All admissible conductors up to X with their field counts, ascending.
std::vector<ConductorDatum> enumerate_conductors(unsigned long ell, std::uint64_t X);
/// Total number of fields of conductor <= X.
std::uint64_t exact_field_count(unsigned long ell, std::uint64_t X);

/// Largest possible number of distinct ramified primes for conductors <= X.
unsigned omega_max(unsigned long ell, std::uint64_t X);

/// Uniform draw over the fields of conductor <= X by rejection: a uniform
/// integer is kept with probability field_count / (ell-1)^(omega_max - 1),
/// then a character index is drawn uniformly.
struct SampledField {
  std::uint64_t conductor = 0;
  std::uint64_t character_index = 0;
};
SampledField random_field(std::uint64_t X, unsigned long ell, montecarlo::Xoshiro& rng);

/// Monic integer cubic x^3 + c2 x^2 + c1 x + c0.
struct Cubic {
  long long c2 = 0, c1 = 0, c0 = 0;
  std::string to_string() const;
};

/// Defining polynomial of the cyclic cubic field (ell = 3) with the given
/// conductor and character index: the minimal polynomial of the Gaussian
/// period, computed by high-precision summation with certified rounding and
/// verified irreducible with square discriminant. Rounding failures retry at
/// doubled precision; start_precision 0 means 128 bits or the
/// ODDAB_PRECISION environment override.
Cubic period_polynomial(std::uint64_t f, std::uint64_t character_index,
                        unsigned start_precision = 0);

/// Exact discriminant of a monic cubic.
long long cubic_discriminant(const Cubic& c);

/// Character-enumeration oracle: counts order-ell characters of conductor
/// exactly f (up to inversion) from the explicit structure of (Z/fZ)^x;
/// exposed so tests can cross-check count_fields.
std::uint64_t count_fields_by_characters(std::uint64_t f, unsigned long ell);

}  // namespace oddab::sampler
