#include "oddab/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "oddab/gf2e.hpp"
#include "oddab/heuristics.hpp"

namespace oddab::montecarlo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

unsigned degree_of(unsigned long q) {
  if (q < 2 || (q & (q - 1)) != 0) throw std::invalid_argument("q must be a power of 2");
  unsigned f = 0;
  while ((1ul << f) != q) ++f;
  return f;
}

// A line in GF(q)^2 in normalized form: (1 : y) or the vertical (0 : 1).
struct Line2 {
  bool vertical;
  std::uint64_t slope;  // y when not vertical
};

Line2 normalize_line(const Gf2& fq, std::uint64_t x, std::uint64_t y) {
  if (x == 0) return {true, 0};
  return {false, fq.mul(y, fq.inv(x))};
}

// The subspace assembled from a chi-line misses the archimedean block iff
// neither the line nor its orthocomplement in the dual part is a coordinate
// line; for (1:y) the orthocomplement is (1 : -x/y-like), coordinate exactly
// when y = 0, and the vertical line pairs with the horizontal one.
bool h1_success(const Line2& line) { return !line.vertical && line.slope != 0; }

template <typename TrialFn>
std::uint64_t run_substreams(std::uint64_t samples, std::uint64_t seed, unsigned jobs,
                             TrialFn&& trial) {
  // fixed substream partition: results are identical for any jobs value
  std::vector<std::uint64_t> hits(kSubstreams, 0);
  auto work = [&](unsigned w) {
    Xoshiro rng(splitmix64(seed + w + 1));
    std::uint64_t n = samples / kSubstreams + (w < samples % kSubstreams ? 1 : 0);
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < n; ++i) h += trial(rng) ? 1 : 0;
    hits[w] = h;
  };
  if (jobs <= 1) {
    for (unsigned w = 0; w < kSubstreams; ++w) work(w);
  } else {
    std::vector<std::thread> pool;
    std::atomic<unsigned> next{0};
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          unsigned w = next.fetch_add(1);
          if (w >= kSubstreams) return;
          work(w);
        }
      });
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  return total;
}

void finalize(SimulationReport& r, std::uint64_t hits) {
  r.p_hat = double(hits) / double(r.samples);
  r.std_error = std::sqrt(r.p_hat * (1 - r.p_hat) / double(r.samples));
  double t = r.target.get_d();
  double se_t = std::sqrt(t * (1 - t) / double(r.samples));
  r.z_score = se_t > 0 ? (r.p_hat - t) / se_t : 0;
}

}  // namespace

Xoshiro::Xoshiro(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& s : s_) { x = splitmix64(x); s = x; }
}

std::uint64_t Xoshiro::next() {
  auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
  std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro::below(std::uint64_t bound) {
  // rejection from the top to keep uniformity
  std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
  for (;;) {
    std::uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

std::string SimulationReport::to_string() const {
  std::ostringstream os;
  os << model << " q=" << q;
  if (rho) os << " rho=" << rho;
  os << " seed=" << seed;
  if (exhaustive) {
    os << " exhaustive: p=" << target.get_num() << "/" << target.get_den();
  } else {
    os << " N=" << samples << " p_hat=" << p_hat << " se=" << std_error
       << " target=" << target.get_d();
    if (histogram.empty()) os << " z=" << z_score;
    else os << " max|z|=" << max_abs_z;
  }
  return os.str();
}

SimulationReport simulate_H1(unsigned long q, std::uint64_t samples, std::uint64_t seed,
                             bool exhaustive, unsigned jobs) {
  unsigned f = degree_of(q);
  Gf2 fq(f);
  SimulationReport r;
  r.model = "H1";
  r.q = q;
  r.seed = seed;
  r.target = heuristics::prob_k_plus_zero(q);
  if (exhaustive || samples == 0) {
    r.exhaustive = true;
    std::uint64_t succ = 0, total = 0;
    // the q+1 lines: (1:y) for each y, plus the vertical line
    for (std::uint64_t y = 0; y < q; ++y) { ++total; succ += h1_success({false, y}) ? 1 : 0; }
    ++total;
    succ += h1_success({true, 0}) ? 1 : 0;
    r.samples = total;
    r.p_hat = double(succ) / double(total);
    mpq_class exact(succ);
    exact /= total;
    if (exact != r.target) throw std::logic_error("exhaustive count disagrees with closed form");
    return r;
  }
  r.samples = samples;
  std::uint64_t hits = run_substreams(samples, seed, jobs, [&](Xoshiro& rng) {
    std::uint64_t x, y;
    do { x = rng.below(q); y = rng.below(q); } while (x == 0 && y == 0);
    return h1_success(normalize_line(fq, x, y));
  });
  finalize(r, hits);
  return r;
}

SimulationReport simulate_H2prime(unsigned long q, unsigned rho, std::uint64_t samples,
                                  std::uint64_t seed, bool exhaustive, unsigned jobs) {
  unsigned f = degree_of(q);
  (void)f;
  SimulationReport r;
  r.model = "H2prime";
  r.q = q;
  r.rho = rho;
  r.seed = seed;
  r.target = heuristics::prob_sgnrk_chi(q, rho);
  if (exhaustive || samples == 0) {
    r.exhaustive = true;
    // count lines of GF(q)^(rho+1) inside the first-rho-coordinates subspace:
    // exact projective counts (q^rho - 1)/(q - 1) of (q^(rho+1) - 1)/(q - 1)
    mpz_class qz(static_cast<unsigned long>(q)), num, den;
    mpz_pow_ui(num.get_mpz_t(), qz.get_mpz_t(), rho);
    mpz_pow_ui(den.get_mpz_t(), qz.get_mpz_t(), rho + 1);
    mpz_class inside_z = (num - 1) / (q - 1), all_z = (den - 1) / (q - 1);
    r.samples = all_z.get_ui();
    mpq_class exact = mpq_class(inside_z) / mpq_class(all_z);
    exact.canonicalize();
    if (exact != r.target) throw std::logic_error("exhaustive count disagrees with closed form");
    r.p_hat = r.target.get_d();
    return r;
  }
  r.samples = samples;
  std::uint64_t hits = run_substreams(samples, seed, jobs, [&](Xoshiro& rng) {
    // uniform nonzero vector in GF(q)^(rho+1); its line lies in the fixed
    // rho-dimensional subspace iff the last coordinate vanishes
    std::uint64_t last;
    bool all_zero;
    do {
      all_zero = true;
      last = 0;
      for (unsigned i = 0; i <= rho; ++i) {
        std::uint64_t c = rng.below(q);
        if (c) all_zero = false;
        if (i == rho) last = c;
      }
    } while (all_zero);
    return last == 0;
  });
  finalize(r, hits);
  return r;
}

SimulationReport simulate_sgnrk_distribution(unsigned long ell, std::uint64_t samples,
                                             std::uint64_t seed, unsigned jobs) {
  if (samples == 0) throw std::invalid_argument("histogram model needs at least one trial");
  unsigned f = multiplicative_order_of_2(ell);
  if (f % 2 == 0) throw std::invalid_argument("order of 2 must be odd");
  unsigned m = unsigned((ell - 1) / (2 * f));
  unsigned long q = 1ul << f;
  Gf2 fq(f);
  SimulationReport r;
  r.model = "sgnrk";
  r.q = q;
  r.seed = seed;
  r.samples = samples;
  auto masses = heuristics::binom_sgnrk_distribution(ell);
  for (auto& bm : masses) r.targets.emplace_back(bm.sgnrk, bm.prob);

  std::vector<std::uint64_t> counts(m + 1, 0);
  // histogram per substream, merged; deterministic for any jobs value
  std::vector<std::vector<std::uint64_t>> sub(kSubstreams, std::vector<std::uint64_t>(m + 1, 0));
  auto work = [&](unsigned w) {
    Xoshiro rng(splitmix64(seed + w + 1));
    std::uint64_t n = samples / kSubstreams + (w < samples % kSubstreams ? 1 : 0);
    for (std::uint64_t i = 0; i < n; ++i) {
      unsigned s = 0;
      for (unsigned pair = 0; pair < m; ++pair) {
        std::uint64_t x, y;
        do { x = rng.below(q); y = rng.below(q); } while (x == 0 && y == 0);
        s += h1_success(normalize_line(fq, x, y)) ? 1 : 0;
      }
      ++sub[w][s];
    }
  };
  if (jobs <= 1) {
    for (unsigned w = 0; w < kSubstreams; ++w) work(w);
  } else {
    std::vector<std::thread> pool;
    std::atomic<unsigned> next{0};
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          unsigned w = next.fetch_add(1);
          if (w >= kSubstreams) return;
          work(w);
        }
      });
    for (auto& th : pool) th.join();
  }
  for (unsigned w = 0; w < kSubstreams; ++w)
    for (unsigned s = 0; s <= m; ++s) counts[s] += sub[w][s];

  r.max_abs_z = 0;
  for (unsigned s = 0; s <= m; ++s) {
    double emp = double(counts[s]) / double(samples);
    r.histogram.emplace_back(f * s + unsigned((ell + 1) / 2), emp);
    double t = masses[s].prob.get_d();
    double se = std::sqrt(t * (1 - t) / double(samples));
    if (se > 0) r.max_abs_z = std::max(r.max_abs_z, std::abs(emp - t) / se);
  }
  return r;
}

}  // namespace oddab::montecarlo
