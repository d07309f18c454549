#include "oddab/pell.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace oddab::pell {

namespace {

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int t9(const Int& a) { return a * a + 3 * a + 9; }

// Pollard rho with Brent cycle detection; n odd composite, not a prime power
// guard needed by the caller.
Int pollard_rho(const Int& n, unsigned long c0) {
  Int x = 2, y = 2, d = 1, c = c0;
  auto f = [&](const Int& v) -> Int { return (v * v + c) % n; };
  Int diff;
  while (d == 1) {
    x = f(x);
    y = f(f(y));
    diff = x > y ? x - y : y - x;
    if (diff == 0) return 0;
    mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
  }
  return d == n ? Int(0) : d;
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) { ++out[n]; return; }
  Int m = n;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    while (m % p == 0) { ++out[Int(p)]; m /= p; }
  }
  if (m == 1) return;
  if (is_prime(m)) { ++out[m]; return; }
  // trial division for mid-size factors before rho
  for (unsigned long p = 17; p < 100000 && Int(p) * p <= m; p += 2) {
    while (m % p == 0) { ++out[Int(p)]; m /= p; }
  }
  if (m == 1) return;
  if (is_prime(m)) { ++out[m]; return; }
  if (is_square(m)) { Int r = isqrt(m); factor_into(r, out); factor_into(r, out); return; }
  for (unsigned long c = 1;; ++c) {
    Int d = pollard_rho(m, c);
    if (d > 1 && d < m) { factor_into(d, out); factor_into(m / d, out); return; }
    if (c > 64) throw std::runtime_error("factorization failed");
  }
}

std::map<Int, unsigned> factorize(const Int& n) {
  std::map<Int, unsigned> out;
  factor_into(abs(n), out);
  return out;
}

Int pow_int(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int powmod(const Int& b, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Tonelli-Shanks for odd prime p with a a quadratic residue.
std::optional<Int> sqrt_mod_prime(const Int& a0, const Int& p) {
  Int a = mod_pos(a0, p);
  if (a == 0) return Int(0);
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  Int q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  Int z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  Int m(s), c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    Int tt = t;
    unsigned i = 0;
    while (tt != 1) { tt = tt * tt % p; ++i; }
    Int b = c;
    for (unsigned j = 0; j + i + 1 < (unsigned)m.get_ui(); ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
  return r > 0;
}

Int disc_surface(const Int& a, const Int& b) {
  return -4 * a * a * a + a * a * b * b + 18 * a * b - (4 * b * b * b + 27);
}

bool is_reducible(const Int& a, const Int& b) { return b == a || b == -a - 2; }

Rat m_from_point(const Int& a, const Int& b) {
  Rat m(a + b + 3);
  m /= Rat(t9(a));
  m.canonicalize();
  return m;
}

Rat parabola_b(const Rat& m, const Int& a) {
  Rat b = m * Rat(t9(a)) - Rat(a + 3);
  b.canonicalize();
  return b;
}

PellCurveModel pell_coeffs(const Rat& m) {
  Rat mm = m;
  mm.canonicalize();
  Int p = mm.get_num(), q = mm.get_den();
  if (q % 2 == 0) throw std::invalid_argument("denominator must be odd");
  PellCurveModel c;
  c.p = p;
  c.q = q;
  c.A = -4 * p * p * p + p * p * q;
  c.B = -12 * p * p * p + 12 * p * p * q - 2 * p * q * q;
  c.C = -36 * p * p * p + 36 * p * p * q - 12 * p * q * q + q * q * q;
  c.delta = 4 * c.A * q;
  c.N = c.B * c.B - 4 * c.A * c.C;
  return c;
}

std::string to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Pass: return "pass";
    case ConditionStatus::FailOnCurve: return "seed not on curve";
    case ConditionStatus::FailRange: return "m outside (0, 1/4)";
    case ConditionStatus::FailSquare: return "1 - 4m is a square";
    case ConditionStatus::FailOddDenominator: return "denominator is even";
  }
  return "?";
}

namespace {

// z with q z^2 = A a^2 + B a + C, if the point is integral.
std::optional<Int> curve_z(const PellCurveModel& c, const Int& a) {
  Int rhs = c.A * a * a + c.B * a + c.C;
  if (rhs < 0 || rhs % c.q != 0) return std::nullopt;
  Int w = rhs / c.q;
  if (!is_square(w)) return std::nullopt;
  return isqrt(w);
}

}  // namespace

ConditionStatus check_prop_conditions(const Rat& m, const Int& seed_a) {
  Rat mm = m;
  mm.canonicalize();
  if (!(mm > 0 && 4 * mm < 1)) return ConditionStatus::FailRange;
  if (mm.get_den() % 2 == 0) return ConditionStatus::FailOddDenominator;
  Rat w = 1 - 4 * mm;
  w.canonicalize();
  if (is_square(w.get_num()) && is_square(w.get_den())) return ConditionStatus::FailSquare;
  PellCurveModel c = pell_coeffs(mm);
  if (!curve_z(c, seed_a)) return ConditionStatus::FailOnCurve;
  return ConditionStatus::Pass;
}

std::pair<Int, Int> pell_fundamental(const Int& D) {
  if (D <= 0) throw std::invalid_argument("D must be positive");
  if (is_square(D)) throw std::invalid_argument("D must not be a square");
  Int s = isqrt(D);
  Int m0 = 0, d0 = 1, a = s;
  Int tp = 1, tc = a, up = 0, uc = 1;
  while (tc * tc - D * uc * uc != 1) {
    m0 = d0 * a - m0;
    d0 = (D - m0 * m0) / d0;
    a = (s + m0) / d0;
    Int t2 = a * tc + tp, u2 = a * uc + up;
    tp = tc; up = uc; tc = t2; uc = u2;
  }
  return {tc, uc};
}

EulerUnit euler_unit(const Int& delta, const Int& two_A) {
  auto [t, u] = pell_fundamental(delta);
  Int mod = abs(two_A);
  if (mod == 0) throw std::invalid_argument("2A must be nonzero");
  Int r = t, s = u;
  unsigned k = 1;
  while (mod_pos(r, mod) != mod_pos(Int(1), mod)) {
    Int r2 = r * t + s * u * delta, s2 = r * u + s * t;
    r = r2; s = s2;
    ++k;
    if (k > 1u << 20) throw std::runtime_error("no unit power is 1 mod 2A");
  }
  return {r, s, k};
}

namespace {

FamilyPoint make_point(const PellCurveModel& c, const Int& a, const Int& z) {
  Int zz = abs(z);
  Int b_num = c.p * t9(a) - c.q * (a + 3);
  if (b_num % c.q != 0) throw std::logic_error("b not integral on a curve point");
  Int cc = t9(a) / c.q * zz;
  if (t9(a) % c.q != 0) throw std::logic_error("q does not divide a^2+3a+9");
  return {a, b_num / c.q, zz, cc};
}

}  // namespace

std::vector<FamilyPoint> orbit_stream(const Rat& m, const Int& seed_a, std::size_t count) {
  PellCurveModel c = pell_coeffs(m);
  auto z0 = curve_z(c, seed_a);
  if (!z0) throw std::invalid_argument("seed is not on the curve");
  EulerUnit eps = euler_unit(c.delta, 2 * c.A);
  Int x0 = 2 * c.A * seed_a + c.B;
  std::map<Int, Int> by_a;  // a -> z
  Int xp = x0, zp = *z0, xm = x0, zm = -*z0;
  // each multiplication grows x by a factor > 1, so count steps suffice per branch
  for (std::size_t j = 0; j < count + 2; ++j) {
    Int xp2 = eps.r * xp + eps.s * c.delta * zp, zp2 = eps.r * zp + eps.s * xp;
    Int xm2 = eps.r * xm + eps.s * c.delta * zm, zm2 = eps.r * zm + eps.s * xm;
    xp = xp2; zp = zp2; xm = xm2; zm = zm2;
    for (auto& [x, z] : {std::pair<Int, Int>{xp, zp}, {xm, zm}}) {
      if (x <= 0) continue;
      if ((x - c.B) % (2 * c.A) != 0) throw std::logic_error("orbit left the congruence class");
      Int a = (x - c.B) / (2 * c.A);
      if (a > seed_a) by_a.emplace(a, z);
    }
  }
  std::vector<FamilyPoint> out;
  for (auto& [a, z] : by_a) {
    if (out.size() == count) break;
    out.push_back(make_point(c, a, z));
  }
  return out;
}

std::vector<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned e) {
  Int pe = pow_int(p, e);
  Int am = mod_pos(a, pe);
  std::vector<Int> roots;
  if (am == 0) {
    // r = t p^ceil(e/2)
    Int step = pow_int(p, (e + 1) / 2);
    for (Int r = 0; r < pe; r += step) roots.push_back(r);
    return roots;
  }
  // peel the even power of p dividing a
  unsigned v = 0;
  Int u = am;
  while (u % p == 0) { u /= p; ++v; }
  if (v % 2 == 1) return {};
  unsigned rem = e - v;
  Int prem = pow_int(p, rem);
  std::vector<Int> unit_roots;
  if (p == 2) {
    if (rem == 1) unit_roots = {Int(1)};
    else if (rem == 2) { if (u % 4 == 1) unit_roots = {Int(1), Int(3)}; }
    else {
      if (mod_pos(u, 8) == 1) {
        // lift from the four roots mod 8 upward, branch by branch
        std::vector<Int> cur{Int(1), Int(3), Int(5), Int(7)};
        Int mod = 8;
        for (unsigned k = 3; k < rem; ++k) {
          Int nm = mod * 2;
          std::vector<Int> next;
          for (const Int& r : cur)
            for (const Int& r2 : {r, Int(r + mod)})
              if (mod_pos(r2 * r2 - u, nm) == 0) next.push_back(mod_pos(r2, nm));
          std::sort(next.begin(), next.end());
          next.erase(std::unique(next.begin(), next.end()), next.end());
          cur = next;
          mod = nm;
        }
        unit_roots = cur;
      }
    }
  } else {
    auto base = sqrt_mod_prime(u, p);
    if (base) {
      // Hensel lift to p^rem
      Int r = *base, mod = p;
      while (mod < prem) {
        Int nm = mod * mod > prem ? prem : mod * mod;
        // Newton step: r <- r - (r^2 - u) * inv(2r) mod nm
        Int inv2r;
        Int two_r = mod_pos(2 * r, nm);
        if (mpz_invert(inv2r.get_mpz_t(), two_r.get_mpz_t(), nm.get_mpz_t()) == 0)
          throw std::logic_error("Hensel lift failed");
        r = mod_pos(r - (r * r - u) * inv2r, nm);
        mod = nm;
      }
      unit_roots = {r, prem - r};
      if (unit_roots[0] == unit_roots[1]) unit_roots.pop_back();
    }
  }
  // reassemble: r = p^(v/2) (rho + t p^(rem)) for t < p^(v/2), sorted unique
  Int scale = pow_int(p, v / 2);
  Int tmax = pow_int(p, v / 2);
  std::set<Int> all;
  for (const Int& rho : unit_roots)
    for (Int t = 0; t < tmax; ++t) all.insert(mod_pos(scale * (rho + t * prem), pe));
  return {all.begin(), all.end()};
}

std::vector<std::pair<Int, Int>> generalized_pell_representatives(const Int& D, const Int& N) {
  if (N == 0) throw std::invalid_argument("N must be nonzero");
  std::vector<std::pair<Int, Int>> reps;
  // factor N once; square divisors and reduced-norm factorizations are
  // derived by exponent arithmetic
  auto fs = factorize(N);
  std::vector<std::pair<Int, unsigned>> primes(fs.begin(), fs.end());
  std::vector<unsigned> fexp(primes.size(), 0);

  Int sD = isqrt(D);
  for (;;) {
    Int f = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (unsigned k = 0; k < fexp[i]; ++k) f *= primes[i].first;
    Int m = N / (f * f), mm = abs(m);

    std::vector<Int> roots;
    bool solvable = true;
    if (mm == 1) roots = {Int(0)};
    else {
      std::vector<Int> acc{0};
      Int accmod = 1;
      for (std::size_t i = 0; i < primes.size() && solvable; ++i) {
        unsigned e = primes[i].second - 2 * fexp[i];
        if (e == 0) continue;
        auto rs = sqrt_mod_prime_power(D, primes[i].first, e);
        if (rs.empty()) { solvable = false; break; }
        Int pe = pow_int(primes[i].first, e);
        Int g, si, ti;
        mpz_gcdext(g.get_mpz_t(), si.get_mpz_t(), ti.get_mpz_t(), accmod.get_mpz_t(),
                   pe.get_mpz_t());
        std::vector<Int> merged;
        Int nm = accmod * pe;
        for (const Int& x : acc)
          for (const Int& y : rs)
            merged.push_back(mod_pos(x + accmod * mod_pos(si * (y - x), pe), nm));
        acc = std::move(merged);
        accmod = nm;
      }
      if (solvable) roots = std::move(acc);
    }
    if (solvable) {
      std::set<Int> rset;
      for (const Int& r : roots) {
        Int rr = mod_pos(r, mm);
        if (2 * rr > mm) rr -= mm;
        rset.insert(rr);
      }
      // PQa thread per root: continued fraction of (rho + sqrt(D))/|m|;
      // solutions all appear within one full period past cycle entry
      for (const Int& rho : rset) {
        Int P = rho, Q = mm;
        if (mod_pos(D - P * P, Q) != 0) continue;
        Int Am2 = 0, Am1 = 1, Bm2 = 1, Bm1 = 0;
        std::set<std::pair<Int, Int>> seen;
        std::optional<std::pair<Int, Int>> marker;
        for (unsigned it = 0; it < 4000000; ++it) {
          Int num = P + sD, aq;
          mpz_fdiv_q(aq.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
          Int Ai = aq * Am1 + Am2, Bi = aq * Bm1 + Bm2;
          Int Pn = aq * Q - P, Qn = (D - Pn * Pn) / Q;
          Int G = mm * Ai - rho * Bi;
          if (G * G - D * Bi * Bi == m) reps.emplace_back(abs(G) * f, Bi * f);
          std::pair<Int, Int> state{Pn, Qn};
          if (!marker) {
            if (!seen.insert(state).second) marker = state;
          } else if (state == *marker) {
            break;  // one full period past the first revisit
          }
          P = Pn; Q = Qn;
          Am2 = Am1; Am1 = Ai; Bm2 = Bm1; Bm1 = Bi;
        }
      }
    }
    // next exponent vector with 2*fexp[i] <= e_i
    std::size_t i = 0;
    while (i < primes.size()) {
      if (2 * (fexp[i] + 1) <= primes[i].second) { ++fexp[i]; break; }
      fexp[i++] = 0;
    }
    if (i == primes.size()) break;
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

std::vector<FamilyPoint> all_points(const Rat& m, const Int& floor_a, std::size_t count) {
  PellCurveModel c = pell_coeffs(m);
  auto [t, u] = pell_fundamental(c.delta);
  // only every (euler power)-th unit multiple lands back in the congruence
  // class, so scale the per-class walk accordingly
  unsigned period = euler_unit(c.delta, 2 * c.A).power;
  const unsigned max_steps = unsigned(period * (count + 2) + 8);
  auto reps = generalized_pell_representatives(c.delta, c.N);
  // Transport each representative (both conjugates) forward until the a-value
  // clears floor_a, then merge-walk the per-class streams in ascending order.
  struct Cursor {
    Int x, z;
  };
  auto step = [&](Cursor& cur) {
    Int nx = t * cur.x + u * c.delta * cur.z, nz = t * cur.z + u * cur.x;
    cur = {nx, nz};
  };
  auto a_of = [&](const Cursor& cur) -> std::optional<Int> {
    if (cur.x <= 0) return std::nullopt;
    if (mod_pos(cur.x - c.B, 2 * c.A) != 0) return std::nullopt;
    Int a = (cur.x - c.B) / (2 * c.A);
    if (a <= floor_a) return std::nullopt;
    return a;
  };
  std::vector<Cursor> cursors;
  for (auto& [x, z] : reps) {
    cursors.push_back({x, z});
    cursors.push_back({x, -z});
  }
  std::map<Int, Int> found;  // a -> z, merged ascending
  // advance every cursor until it yields `count` candidates or overshoots
  for (auto& cur : cursors) {
    Cursor w = cur;
    std::size_t got = 0;
    for (unsigned j = 0; j < max_steps && got < count; ++j) {
      if (auto a = a_of(w)) {
        found.emplace(*a, abs(w.z));
        ++got;
      }
      step(w);
    }
  }
  std::vector<FamilyPoint> out;
  for (auto& [a, z] : found) {
    if (out.size() == count) break;
    out.push_back(make_point(c, a, z));
  }
  return out;
}

bool total_positivity(const Int& a, const Int& b) {
  return a > 0 && b > 0 && disc_surface(a, b) > 0;
}

namespace {

// quartic g(A) = A^4 - 2a A^2 - 8A + (a^2 - 4b)
Int quartic(const Int& a, const Int& b, const Int& x) {
  return x * x * x * x - 2 * a * x * x - 8 * x + (a * a - 4 * b);
}

// All integer roots of the quartic, by exact bisection. Stations bracket
// every real root of g', so g is monotone strictly between consecutive
// stations and carries at most one root there.
std::vector<Int> quartic_integer_roots(const Int& a, const Int& b) {
  // radius beyond which A^4 dominates every other term
  Int R = 3;
  R = std::max(R, Int(2 + 2 * isqrt(abs(2 * a))));
  Int c0 = abs(a * a - 4 * b);
  R = std::max(R, Int(2 + isqrt(isqrt(c0)) * 2));
  auto gp = [&](const Int& x) -> Int { return 4 * x * x * x - 4 * a * x - 8; };

  // g'' = 12A^2 - 4a vanishes at +-sqrt(a/3); g' is monotone outside the
  // two-integer bridges around those points, which we scan directly.
  std::vector<Int> pts{-R, R};
  std::vector<Int> stations;
  if (a > 0) {
    Int s = isqrt(a / 3);
    for (Int d = -s - 1; d <= -s + 1; d += 1) { pts.push_back(d); stations.push_back(d); }
    for (Int d = s - 1; d <= s + 1; d += 1) { pts.push_back(d); stations.push_back(d); }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Int lo = pts[i], hi = pts[i + 1];
    stations.push_back(lo);
    stations.push_back(hi);
    if (hi - lo <= 2) {  // bridge: already fully covered by stations
      for (Int x = lo; x <= hi; x += 1) stations.push_back(x);
      continue;
    }
    Int glo = gp(lo), ghi = gp(hi);
    if (glo == 0 || ghi == 0 || (glo < 0) == (ghi < 0)) continue;
    // g' is monotone here; bracket its single crossing
    Int l = lo, h = hi;
    while (h - l > 1) {
      Int mid = (l + h) / 2;
      Int gm = gp(mid);
      if (gm == 0) { l = mid; h = mid; break; }
      if ((gm < 0) == (glo < 0)) l = mid;
      else h = mid;
    }
    stations.push_back(l);
    stations.push_back(h);
  }
  std::sort(stations.begin(), stations.end());
  stations.erase(std::unique(stations.begin(), stations.end()), stations.end());

  std::vector<Int> roots;
  auto maybe_root = [&](const Int& x) {
    if (quartic(a, b, x) == 0) roots.push_back(x);
  };
  for (std::size_t i = 0; i + 1 < stations.size(); ++i) {
    Int lo = stations[i], hi = stations[i + 1];
    maybe_root(lo);
    Int glo = quartic(a, b, lo), ghi = quartic(a, b, hi);
    if (glo == 0 || ghi == 0) continue;
    if ((glo < 0) == (ghi < 0)) continue;
    Int l = lo, h = hi;
    while (h - l > 1) {
      Int mid = (l + h) / 2;
      Int gm = quartic(a, b, mid);
      if (gm == 0) { roots.push_back(mid); break; }
      if ((gm < 0) == (glo < 0)) l = mid;
      else h = mid;
    }
  }
  maybe_root(stations.back());
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

bool eta_square_test(const Int& a, const Int& b) {
  for (const Int& r : quartic_integer_roots(a, b))
    if (mod_pos(r * r - a, 2) == 0) return true;
  return false;
}

CubicFieldWitness certify_sgnrk1(const Int& a, const Int& b) {
  CubicFieldWitness w;
  w.a = a;
  w.b = b;
  w.irreducible = !is_reducible(a, b);
  Int d = disc_surface(a, b);
  if (d >= 0 && is_square(d)) {
    w.disc_square = true;
    w.c = isqrt(d);
  }
  w.totally_positive = total_positivity(a, b);
  w.eta_nonsquare = !eta_square_test(a, b);
  if (w.irreducible && w.disc_square && w.totally_positive && w.eta_nonsquare) w.sgnrk = 1;
  return w;
}

std::vector<Rat> mk_sequence(const Rat& m, const Int& seed_a, std::size_t count) {
  if (count == 0) return {};
  PellCurveModel c = pell_coeffs(m);
  auto z0 = curve_z(c, seed_a);
  if (!z0) throw std::invalid_argument("seed is not on the curve");
  std::vector<Rat> out;
  Rat b0 = parabola_b(m, seed_a);
  out.push_back(m_from_point(Int(b0.get_num() / b0.get_den()), seed_a));
  for (const FamilyPoint& pt : orbit_stream(m, seed_a, count - 1))
    out.push_back(m_from_point(pt.b, pt.a));
  return out;
}

bool nonsquare_filter(const Rat& m, const Int& ell) {
  Rat w = 1 - 4 * m;
  w.canonicalize();
  Int num = mod_pos(w.get_num(), ell), den = mod_pos(w.get_den(), ell);
  if (num == 0 || den == 0) return false;  // inconclusive
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), ell.get_mpz_t()) == 0) return false;
  Int v = mod_pos(num * dinv, ell);
  return powmod(v, (ell - 1) / 2, ell) == ell - 1;  // Euler criterion: non-residue
}

ShiftedCubic shifted_poly(const Int& a, const Rat& m) {
  Rat mm = m;
  mm.canonicalize();
  Int p = mm.get_num(), q = mm.get_den();
  Int t = t9(a);
  if (t % q != 0) throw std::invalid_argument("m (a^2+3a+9) is not integral");
  Int tq = t / q;
  // (a^2+3a+9)(9 - 3m) = 9t - 3p t/q ; (a^2+3a+9)(a(9m-2) - 3) = 9p a t/q - (2a+3) t
  ShiftedCubic out;
  out.c1 = 9 * t - 3 * p * tq;
  out.c0 = 9 * p * a * tq - (2 * a + 3) * t;
  return out;
}

std::optional<Rat> newton_slope(const Int& ell, const Int& a, const Rat& m) {
  if (!is_prime(ell)) return std::nullopt;
  Rat mm = m;
  mm.canonicalize();
  Int p = mm.get_num(), q = mm.get_den();
  Int guard = 27 * (27 * p * p - 9 * p * q + q * q) * q;
  if (guard % ell == 0) return std::nullopt;
  if (ell == 3) return std::nullopt;  // 27 is always in the guard
  Int t = t9(a);
  unsigned v = 0;
  while (t % ell == 0) { t /= ell; ++v; }
  Rat slope(static_cast<long>(v), 3);
  slope.canonicalize();
  return slope;
}

SlopeReport ramified_slopes(const Int& a, const Rat& m, unsigned long bound) {
  SlopeReport rep;
  Int t = t9(a);
  Rat mm = m;
  mm.canonicalize();
  for (unsigned long p = 2; p <= bound && Int(p) * p <= t; p += (p == 2 ? 1 : 2)) {
    if (t % p == 0) {
      Int pz(p);
      unsigned v = 0;
      while (t % pz == 0) { t /= pz; ++v; }
      if (auto s = newton_slope(pz, a, mm)) rep.slopes.emplace_back(pz, *s);
    }
  }
  if (t > 1) {
    if (is_prime(t)) {
      rep.cofactor_prime = t;
      if (auto s = newton_slope(t, a, mm)) rep.slopes.emplace_back(t, *s);
    } else {
      rep.complete = false;
    }
  }
  return rep;
}

}  // namespace oddab::pell
