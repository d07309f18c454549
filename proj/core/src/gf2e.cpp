#include "oddab/gf2e.hpp"

#include <sstream>
#include <stdexcept>

namespace oddab {

namespace {

// Lexicographically least irreducible polynomial of each degree, packed with
// bit i = coefficient of x^i. Kept in sync with data/modulus_table.txt (a
// test parses the file and compares).
constexpr std::uint64_t kModulus[Gf2::kMaxDegree + 1] = {
    0,
    0x3,           // f=1:  x + 1
    0x7,           // f=2:  x^2 + x + 1
    0xb,           // f=3:  x^3 + x + 1
    0x13,          // f=4:  x^4 + x + 1
    0x25,          // f=5:  x^5 + x^2 + 1
    0x43,          // f=6:  x^6 + x + 1
    0x83,          // f=7
    0x11b,         // f=8
    0x203,         // f=9
    0x409,         // f=10
    0x805,         // f=11
    0x1009,        // f=12
    0x201b,        // f=13
    0x4021,        // f=14
    0x8003,        // f=15
    0x1002b,       // f=16
    0x20009,       // f=17
    0x40009,       // f=18
    0x80027,       // f=19
    0x100009,      // f=20
    0x200005,      // f=21
    0x400003,      // f=22
    0x800021,      // f=23
    0x100001b,     // f=24
    0x2000009,     // f=25
    0x400001b,     // f=26
    0x8000027,     // f=27
    0x10000003,    // f=28
    0x20000005,    // f=29
    0x40000003,    // f=30
    0x80000009,    // f=31
    0x10000008d,   // f=32
    0x20000004b,   // f=33
    0x40000001b,   // f=34
    0x800000005,   // f=35
    0x1000000035,  // f=36
    0x200000003f,  // f=37
    0x4000000063,  // f=38
    0x8000000011,  // f=39
    0x10000000039, // f=40
};

std::uint64_t reduce(unsigned __int128 acc, std::uint64_t mod, unsigned f) {
  for (int i = 2 * int(f); i >= int(f); --i)
    if ((acc >> i) & 1) acc ^= (unsigned __int128)mod << (i - f);
  return (std::uint64_t)acc;
}

std::uint64_t clmul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod, unsigned f) {
  unsigned __int128 acc = 0;
  while (b) {
    unsigned i = __builtin_ctzll(b);
    acc ^= (unsigned __int128)a << i;
    b &= b - 1;
  }
  return reduce(acc, mod, f);
}

}  // namespace

Gf2::Gf2(unsigned degree) : f_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("GF(2^f) degree out of supported range");
  mod_ = kModulus[degree];
}

std::uint64_t Gf2::modulus_for_degree(unsigned f) {
  if (f < 1 || f > kMaxDegree) throw std::invalid_argument("degree out of range");
  return kModulus[f];
}

std::uint64_t Gf2::mul(std::uint64_t a, std::uint64_t b) const {
  return clmul_mod(a, b, mod_, f_);
}

std::uint64_t Gf2::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t acc = 1, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t Gf2::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, order() - 1);  // a^(2^f - 2)
}

bool Gf2::trace(std::uint64_t a) const {
  std::uint64_t acc = 0, x = a;
  for (unsigned i = 0; i < f_; ++i) {
    acc ^= x;
    x = mul(x, x);
  }
  return acc & 1;  // trace lands in GF(2) = {0,1}
}

std::uint64_t Gf2::element_order(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("order of zero");
  std::uint64_t ord = order();
  for (auto [p, e] : factorize_u64(ord)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow(a, ord / p) == 1) ord /= p;
      else break;
    }
  }
  return ord;
}

std::uint64_t Gf2::canonical_root_of_unity(std::uint64_t d) const {
  if (d == 0 || order() % d != 0)
    throw std::invalid_argument("d does not divide 2^f - 1");
  if (d == 1) return 1;
  std::uint64_t co = order() / d;
  for (std::uint64_t g = 2; g <= order(); ++g) {
    std::uint64_t w = pow(g, co);
    if (w == 1) continue;
    if (element_order(w) == d) return w;
  }
  throw std::logic_error("no element of requested order");  // unreachable
}

bool Gf2::is_irreducible(std::uint64_t poly, unsigned degree) {
  if (degree == 0) return false;
  if (degree == 1) return poly == 0x3 || poly == 0x2;
  auto sq = [&](std::uint64_t a) { return clmul_mod(a, a, poly, degree); };
  auto pow2k = [&](unsigned k) {
    std::uint64_t r = 2;  // x
    for (unsigned i = 0; i < k; ++i) r = sq(r);
    return r;
  };
  if (pow2k(degree) != 2) return false;
  auto gcdpol = [](std::uint64_t a, std::uint64_t b) {
    while (b) {
      int db = 63 - __builtin_clzll(b);
      while (a) {
        int da = 63 - __builtin_clzll(a);
        if (da < db) break;
        a ^= b << (da - db);
      }
      std::swap(a, b);
    }
    return a;
  };
  unsigned n = degree;
  for (unsigned r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    while (n % r == 0) n /= r;
    std::uint64_t g = pow2k(degree / r) ^ 2;
    if (gcdpol(g ? g : poly, poly) != 1) return false;
  }
  if (n > 1) {
    std::uint64_t g = pow2k(degree / n) ^ 2;
    if (gcdpol(g ? g : poly, poly) != 1) return false;
  }
  return true;
}

std::string Gf2::modulus_table_text() {
  std::ostringstream os;
  for (unsigned f = 1; f <= kMaxDegree; ++f) {
    os << f << ':';
    for (unsigned i = 0; i <= f; ++i) os << (((kModulus[f] >> i) & 1) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

std::vector<std::pair<unsigned, std::uint64_t>> Gf2::parse_modulus_table(const std::string& text) {
  std::vector<std::pair<unsigned, std::uint64_t>> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad table line: " + line);
    unsigned f = std::stoul(line.substr(0, colon));
    std::string bits = line.substr(colon + 1);
    if (bits.size() != f + 1) throw std::invalid_argument("bit count mismatch: " + line);
    std::uint64_t mask = 0;
    for (unsigned i = 0; i <= f; ++i)
      if (bits[i] == '1') mask |= std::uint64_t{1} << i;
    out.emplace_back(f, mask);
  }
  return out;
}

unsigned multiplicative_order_of_2(std::uint64_t d) {
  if (d == 0 || d % 2 == 0) throw std::invalid_argument("modulus must be odd and positive");
  if (d == 1) return 1;
  unsigned f = 1;
  std::uint64_t pow2 = 2 % d;
  while (pow2 != 1) {
    pow2 = (pow2 * 2) % d;
    ++f;
  }
  return f;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> fs;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) { n /= p; ++e; }
      fs.emplace_back(p, e);
    }
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

}  // namespace oddab
