#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace oddab::pell {

using Int = mpz_class;
using Rat = mpq_class;

/// Discriminant of x^3 - a x^2 + b x - 1.
Int disc_surface(const Int& a, const Int& b);

/// Reducibility of the unit cubic over the rationals (rational root test:
/// b = a or b = -a-2).
bool is_reducible(const Int& a, const Int& b);

/// Parabola parameter through (a, b): m = (a+b+3)/(a^2+3a+9), reduced.
Rat m_from_point(const Int& a, const Int& b);
/// b-coordinate of the parabola at a: m(a^2+3a+9) - (a+3).
Rat parabola_b(const Rat& m, const Int& a);

/// Coefficient package of the Fermat--Pell curve attached to m = p/q:
/// integral model q z^2 = A a^2 + B a + C with z = q y, equivalently
/// x^2 - Delta z^2 = N for x = 2Aa + B, Delta = 4Aq, N = B^2 - 4AC.
struct PellCurveModel {
  Int p, q;
  Int A, B, C;
  Int delta;  // 4Aq
  Int N;      // B^2 - 4AC
};
PellCurveModel pell_coeffs(const Rat& m);

enum class ConditionStatus { Pass, FailOnCurve, FailRange, FailSquare, FailOddDenominator };
std::string to_string(ConditionStatus s);

/// Conditions for the curve to carry infinitely many integral points:
/// (i) the supplied seed lies on the curve, (ii) 0 < m < 1/4, (iii) 1 - 4m is
/// not a rational square. The denominator must be odd for integral parabola
/// points to exist at all.
ConditionStatus check_prop_conditions(const Rat& m, const Int& seed_a);

/// Least positive solution of t^2 - D u^2 = 1 by the continued fraction of
/// sqrt(D); throws if D <= 0 or D is a perfect square.
std::pair<Int, Int> pell_fundamental(const Int& D);

/// Least power of the fundamental solution whose first component is 1 mod 2A;
/// multiplication by it preserves x mod 2A because Delta = 0 mod 2A.
struct EulerUnit {
  Int r, s;
  unsigned power;
};
EulerUnit euler_unit(const Int& delta, const Int& two_A);

/// One emitted family point.
struct FamilyPoint {
  Int a, b, z;
  Int c;  // (a^2+3a+9) z / q, so c^2 = D(a,b)
};

/// Euler-orbit stream: both sign branches of the seed under repeated
/// multiplication by the euler unit, strictly increasing a > seed_a. The seed
/// must lie on the curve (z is recovered from a).
std::vector<FamilyPoint> orbit_stream(const Rat& m, const Int& seed_a, std::size_t count);

/// All integral curve points with a > floor_a in ascending order, from the
/// complete solution-class enumeration of x^2 - Delta z^2 = N (square
/// divisors, square roots of Delta modulo the reduced norm, continued
/// fraction threads) transported by the fundamental unit.
std::vector<FamilyPoint> all_points(const Rat& m, const Int& floor_a, std::size_t count);

/// All fundamental representatives (x, z) of solution classes of
/// x^2 - D z^2 = N; exposed for tests.
std::vector<std::pair<Int, Int>> generalized_pell_representatives(const Int& D, const Int& N);

/// Square roots of a modulo p^e (p prime), all of them, exact.
std::vector<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned e);

/// Deterministic Miller-Rabin below 3.3e24 via fixed witness set; BPSW-style
/// strong probable prime beyond.
bool is_prime(const Int& n);

/// Is eta (the root of the unit cubic at (a,b)) a square in its field?
/// Equivalent to an integer root A of A^4 - 2a A^2 - 8A + (a^2 - 4b) with
/// A^2 = a (mod 2); roots are isolated by exact bisection.
bool eta_square_test(const Int& a, const Int& b);

/// Totally positive unit criterion: a > 0, b > 0 and D(a,b) > 0.
bool total_positivity(const Int& a, const Int& b);

/// Certificate that the field attached to (a, b) has unit signature rank 1.
struct CubicFieldWitness {
  Int a, b;
  bool irreducible = false;
  bool disc_square = false;
  bool totally_positive = false;
  bool eta_nonsquare = false;
  std::optional<Int> c;       // set when disc_square
  std::optional<int> sgnrk;   // 1 exactly when all four flags hold
  bool certified() const { return sgnrk.has_value(); }
};
CubicFieldWitness certify_sgnrk1(const Int& a, const Int& b);

/// Parameter sequence from swapping coordinates of successive family points
/// (seed first): m_k = (a_k + b_k + 3)/(b_k^2 + 3 b_k + 9).
std::vector<Rat> mk_sequence(const Rat& m, const Int& seed_a, std::size_t count);

/// Non-residue filter for condition (iii): true when 1 - 4m is a non-square
/// modulo ell (false when inconclusive or square).
bool nonsquare_filter(const Rat& m, const Int& ell);

/// Cubic satisfied by 3*eta - a: x^3 + (a^2+3a+9)(9-3m) x + (a^2+3a+9)(a(9m-2)-3).
struct ShiftedCubic {
  Int c1, c0;  // x^3 + c1 x + c0
};
ShiftedCubic shifted_poly(const Int& a, const Rat& m);

/// Newton-polygon slope ord_ell(a^2+3a+9)/3 at an admissible prime ell
/// (ell not dividing 27 (27m^2 - 9m + 1) q); nullopt when inadmissible or not
/// prime.
std::optional<Rat> newton_slope(const Int& ell, const Int& a, const Rat& m);

/// Primes dividing a^2+3a+9 found by trial division up to `bound`, with
/// slopes; `cofactor_prime` reports a strong-probable-prime leftover, and
/// `complete` is false when an unfactored composite cofactor remains.
struct SlopeReport {
  std::vector<std::pair<Int, Rat>> slopes;
  std::optional<Int> cofactor_prime;
  bool complete = true;
};
SlopeReport ramified_slopes(const Int& a, const Rat& m, unsigned long bound = 1000000);

}  // namespace oddab::pell
