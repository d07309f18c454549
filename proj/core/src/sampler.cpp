#include "oddab/sampler.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "oddab/gf2e.hpp"

namespace oddab::sampler {

namespace {

void require_odd_prime(unsigned long ell) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("ell must be an odd prime");
  for (unsigned long d = 3; d * d <= ell; d += 2)
    if (ell % d == 0) throw std::invalid_argument("ell must be an odd prime");
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  return factorize_u64(n);
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// primitive root modulo p^e for odd prime p (e <= 2 needed here)
std::uint64_t primitive_root(std::uint64_t pe, std::uint64_t p, unsigned e) {
  std::uint64_t phi = (p - 1) * pow_u64(p, e - 1);
  auto fac = factor_u64(phi);
  auto powmod = [&](std::uint64_t b, std::uint64_t ex) {
    unsigned __int128 acc = 1, base = b % pe;
    while (ex) {
      if (ex & 1) acc = acc * base % pe;
      base = base * base % pe;
      ex >>= 1;
    }
    return (std::uint64_t)acc;
  };
  for (std::uint64_t g = 2; g < pe; ++g) {
    if (std::gcd(g, pe) != 1) continue;
    bool ok = true;
    for (auto& [q, _] : fac)
      if (powmod(g, phi / q) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

// One cyclic component of (Z/fZ)^x for an admissible conductor.
struct UnitComponent {
  std::uint64_t modulus;  // p or ell^2
  std::uint64_t phi;
  std::uint64_t generator;
  std::vector<std::uint8_t> dlog_mod_ell;  // indexed by residue mod `modulus`
};

std::vector<UnitComponent> unit_components(std::uint64_t f, unsigned long ell) {
  std::vector<UnitComponent> comps;
  for (auto& [p, e] : factor_u64(f)) {
    std::uint64_t pe = pow_u64(p, e);
    UnitComponent c;
    c.modulus = pe;
    c.phi = (p - 1) * pow_u64(p, e - 1);
    c.generator = primitive_root(pe, p, e);
    if (c.phi % ell != 0) throw std::invalid_argument("component order not divisible by ell");
    c.dlog_mod_ell.assign(pe, 0xff);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < c.phi; ++k) {
      c.dlog_mod_ell[x] = std::uint8_t(k % ell);
      x = (unsigned __int128)x * c.generator % pe;
    }
    comps.push_back(std::move(c));
  }
  return comps;
}

}  // namespace

bool admissible(std::uint64_t f, unsigned long ell) {
  require_odd_prime(ell);
  if (f <= 1) return false;
  std::uint64_t rest = f;
  unsigned e_ell = 0;
  while (rest % ell == 0) { rest /= ell; ++e_ell; }
  if (e_ell != 0 && e_ell != 2) return false;
  for (auto& [p, e] : factor_u64(rest)) {
    if (e != 1) return false;
    if (p % ell != 1) return false;
  }
  return true;
}

std::uint64_t count_fields(std::uint64_t f, unsigned long ell) {
  if (!admissible(f, ell)) return 0;
  unsigned omega = unsigned(factor_u64(f).size());
  return pow_u64(ell - 1, omega - 1);
}

ConductorDatum conductor_datum(std::uint64_t f, unsigned long ell) {
  ConductorDatum d;
  d.f = f;
  d.ell = ell;
  d.factorization = factor_u64(f);
  d.omega = unsigned(d.factorization.size());
  d.field_count = count_fields(f, ell);
  return d;
}

std::vector<ConductorDatum> enumerate_conductors(unsigned long ell, std::uint64_t X) {
  require_odd_prime(ell);
  // primes = 1 mod ell up to X, by sieve
  std::vector<bool> sieve(X + 1, true);
  std::vector<std::uint64_t> primes1;
  for (std::uint64_t i = 2; i <= X; ++i) {
    if (sieve[i]) {
      for (std::uint64_t j = i * i; j <= X; j += i) sieve[j] = false;
      if (i % ell == 1) primes1.push_back(i);
    }
  }
  std::vector<std::uint64_t> conductors;
  // squarefree products of primes1, optionally times ell^2
  std::uint64_t ell2 = std::uint64_t(ell) * ell;
  std::vector<std::pair<std::uint64_t, std::size_t>> stack{{1, 0}};
  while (!stack.empty()) {
    auto [prod, next] = stack.back();
    stack.pop_back();
    if (prod > 1) conductors.push_back(prod);
    if (prod <= X / ell2) conductors.push_back(prod * ell2);
    for (std::size_t i = next; i < primes1.size(); ++i) {
      if (primes1[i] > X / prod) break;
      stack.push_back({prod * primes1[i], i + 1});
    }
  }
  std::sort(conductors.begin(), conductors.end());
  std::vector<ConductorDatum> out;
  out.reserve(conductors.size());
  for (std::uint64_t f : conductors) out.push_back(conductor_datum(f, ell));
  return out;
}

std::uint64_t exact_field_count(unsigned long ell, std::uint64_t X) {
  std::uint64_t total = 0;
  for (const auto& d : enumerate_conductors(ell, X)) total += d.field_count;
  return total;
}

unsigned omega_max(unsigned long ell, std::uint64_t X) {
  require_odd_prime(ell);
  // greedily multiply the smallest primes = 1 mod ell; a trailing ell^2
  // factor can add one more distinct prime
  std::vector<std::uint64_t> primes1;
  for (std::uint64_t n = 2; primes1.size() < 32 && n <= X; ++n) {
    bool prime = n > 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) { prime = false; break; }
    if (prime && n % ell == 1) primes1.push_back(n);
  }
  unsigned best = 0;
  for (int with_ell2 = 0; with_ell2 < 2; ++with_ell2) {
    unsigned __int128 prod = with_ell2 ? (unsigned __int128)ell * ell : 1;
    unsigned omega = with_ell2 ? 1 : 0;
    for (std::uint64_t p : primes1) {
      if (prod * p > X) break;
      prod *= p;
      ++omega;
    }
    best = std::max(best, omega);
  }
  return best;
}

SampledField random_field(std::uint64_t X, unsigned long ell, montecarlo::Xoshiro& rng) {
  require_odd_prime(ell);
  if (X < 7) throw std::invalid_argument("bound too small to contain any conductor");
  // smallest admissible conductor: min(ell^2, least prime = 1 mod ell)
  std::uint64_t least = ell * ell;
  for (std::uint64_t p = ell + 1;; p += ell) {
    if (p > least) break;
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) { prime = false; break; }
    if (prime) { least = std::min(least, p); break; }
  }
  if (X < least) throw std::invalid_argument("bound too small to contain any conductor");
  std::uint64_t cap = pow_u64(ell - 1, omega_max(ell, X) - 1);
  for (;;) {
    std::uint64_t f = rng.below(X) + 1;
    std::uint64_t cnt = count_fields(f, ell);
    if (cnt == 0) continue;
    if (rng.below(cap) < cnt)
      return {f, rng.below(cnt)};
  }
}

std::string Cubic::to_string() const {
  std::ostringstream os;
  os << "x^3";
  auto term = [&](long long c, const char* pow) {
    if (c == 0) return;
    os << (c > 0 ? " + " : " - ");
    long long a = c > 0 ? c : -c;
    if (a != 1 || pow[0] == '\0') os << a;
    os << pow;
  };
  term(c2, "x^2");
  term(c1, "x");
  if (c0 > 0) os << " + " << c0;
  else if (c0 < 0) os << " - " << -c0;
  return os.str();
}

long long cubic_discriminant(const Cubic& c) {
  // disc of x^3 + b x^2 + c x + d: 18bcd - 4b^3 d + b^2 c^2 - 4c^3 - 27d^2
  long long b = c.c2, cc = c.c1, d = c.c0;
  return 18 * b * cc * d - 4 * b * b * b * d + b * b * cc * cc - 4 * cc * cc * cc -
         27 * d * d;
}

std::uint64_t count_fields_by_characters(std::uint64_t f, unsigned long ell) {
  if (!admissible(f, ell)) return 0;
  auto comps = unit_components(f, ell);
  std::size_t k = comps.size();
  // homs to Z/ell as exponent vectors; order ell and nontrivial at every
  // component (conductor exactly f); inverse pairs identified
  std::uint64_t total = 0;
  std::vector<std::vector<unsigned>> chars;
  std::vector<unsigned> v(k, 0);
  for (;;) {
    bool all_nonzero = true;
    for (unsigned x : v) all_nonzero = all_nonzero && x != 0;
    if (all_nonzero && !v.empty()) { ++total; chars.push_back(v); }
    std::size_t i = 0;
    while (i < k && ++v[i] == ell) v[i++] = 0;
    if (i == k) break;
  }
  if (total % (ell - 1) != 0) throw std::logic_error("character count not divisible by ell-1");
  std::uint64_t fields = total / (ell - 1);
  if (f <= 1500) {
    // at small conductors, count the distinct kernels explicitly;
    // fields correspond to kernels, characters only up to powers
    std::vector<std::vector<std::uint64_t>> kernels;
    for (const auto& cv : chars) {
      std::vector<std::uint64_t> ker;
      for (std::uint64_t t = 1; t < f; ++t) {
        unsigned acc = 0;
        bool unit = true;
        for (std::size_t i = 0; i < k; ++i) {
          std::uint8_t d = comps[i].dlog_mod_ell[t % comps[i].modulus];
          if (d == 0xff) { unit = false; break; }
          acc = (acc + cv[i] * d) % unsigned(ell);
        }
        if (unit && acc == 0) ker.push_back(t);
      }
      kernels.push_back(std::move(ker));
    }
    std::sort(kernels.begin(), kernels.end());
    kernels.erase(std::unique(kernels.begin(), kernels.end()), kernels.end());
    if (kernels.size() != fields)
      throw std::logic_error("kernel count disagrees with character count");
  }
  return fields;
}

Cubic period_polynomial(std::uint64_t f, std::uint64_t character_index,
                        unsigned start_precision) {
  const unsigned long ell = 3;
  if (!admissible(f, ell)) throw std::invalid_argument("conductor not admissible");
  if (start_precision == 0) {
    start_precision = 128;
    if (const char* e = std::getenv("ODDAB_PRECISION")) {
      int v = std::atoi(e);
      if (v >= 64) start_precision = unsigned(v);
    }
  }
  auto comps = unit_components(f, ell);
  std::size_t k = comps.size();

  // order-3 characters as vectors over Z/3 with all entries nonzero, up to
  // inversion; canonical form scales the first entry to 1
  std::vector<std::vector<unsigned>> reps;
  std::vector<unsigned> v(k, 1);
  for (;;) {
    if (v[0] == 1) reps.push_back(v);
    std::size_t i = 0;
    while (i < k && ++v[i] == ell) v[i++] = 1;
    if (i == k) break;
  }
  std::sort(reps.begin(), reps.end());
  if (character_index >= reps.size())
    throw std::out_of_range("character index exceeds the number of fields");
  const auto& chi = reps[character_index];

  // coset label of each unit t mod f: sum of chi_i * dlog_i(t) mod 3
  auto coset_of = [&](std::uint64_t t) -> std::optional<unsigned> {
    unsigned acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint8_t d = comps[i].dlog_mod_ell[t % comps[i].modulus];
      if (d == 0xff) return std::nullopt;  // not a unit
      acc = (acc + chi[i] * d) % 3;
    }
    return acc;
  };

  for (mpfr_prec_t prec = mpfr_prec_t(start_precision);; prec *= 2) {
    if (prec > 1 << 20) throw std::runtime_error("precision runaway in period computation");
    mpfr_t pi, angle, c, eta[3], tmp, e1, e2, e3;
    mpfr_inits2(prec, pi, angle, c, eta[0], eta[1], eta[2], tmp, e1, e2, e3,
                (mpfr_ptr) nullptr);
    mpfr_const_pi(pi, MPFR_RNDN);
    for (int j = 0; j < 3; ++j) mpfr_set_zero(eta[j], 1);
    for (std::uint64_t t = 1; t < f; ++t) {
      auto cs = coset_of(t);
      if (!cs) continue;
      mpfr_set_ui(angle, t, MPFR_RNDN);
      mpfr_mul(angle, angle, pi, MPFR_RNDN);
      mpfr_mul_ui(angle, angle, 2, MPFR_RNDN);
      mpfr_div_ui(angle, angle, f, MPFR_RNDN);
      mpfr_cos(c, angle, MPFR_RNDN);
      mpfr_add(eta[*cs], eta[*cs], c, MPFR_RNDN);
    }
    // elementary symmetric functions
    mpfr_add(e1, eta[0], eta[1], MPFR_RNDN);
    mpfr_add(e1, e1, eta[2], MPFR_RNDN);
    mpfr_mul(e2, eta[0], eta[1], MPFR_RNDN);
    mpfr_mul(tmp, eta[0], eta[2], MPFR_RNDN);
    mpfr_add(e2, e2, tmp, MPFR_RNDN);
    mpfr_mul(tmp, eta[1], eta[2], MPFR_RNDN);
    mpfr_add(e2, e2, tmp, MPFR_RNDN);
    mpfr_mul(e3, eta[0], eta[1], MPFR_RNDN);
    mpfr_mul(e3, e3, eta[2], MPFR_RNDN);

    auto round_int = [&](mpfr_t x, long long& out) {
      mpfr_t r;
      mpfr_init2(r, prec);
      mpfr_round(r, x);
      long v = mpfr_get_si(r, MPFR_RNDN);
      mpfr_sub_si(r, x, v, MPFR_RNDN);
      mpfr_abs(r, r, MPFR_RNDN);
      bool ok = mpfr_cmp_d(r, 0.25) < 0;
      mpfr_clear(r);
      out = v;
      return ok;
    };
    long long i1, i2, i3;
    bool ok = round_int(e1, i1) && round_int(e2, i2) && round_int(e3, i3);
    // nearest integers to the periods, for the rational-root check
    long long near[3];
    for (int j = 0; j < 3; ++j) {
      mpfr_round(tmp, eta[j]);
      near[j] = mpfr_get_si(tmp, MPFR_RNDN);
    }
    mpfr_clears(pi, angle, c, eta[0], eta[1], eta[2], tmp, e1, e2, e3, (mpfr_ptr) nullptr);
    if (!ok) continue;  // retry at doubled precision

    Cubic out{-i1, i2, -i3};
    // a monic cubic with three real non-integer roots is irreducible; any
    // rational root would be an integer equal to one of the periods
    for (long long cand : {near[0], near[1], near[2]}) {
      long long val = cand * cand * cand + out.c2 * cand * cand + out.c1 * cand + out.c0;
      if (val == 0) throw std::runtime_error("period polynomial is reducible");
    }
    long long disc = cubic_discriminant(out);
    long long root = llround(std::sqrt((double)disc));
    bool square = false;
    for (long long r = std::max(0ll, root - 2); r <= root + 2; ++r)
      if (r * r == disc) square = true;
    if (disc <= 0 || !square)
      throw std::runtime_error("period polynomial discriminant is not a positive square");
    return out;
  }
}

}  // namespace oddab::sampler
