#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oddab::montecarlo {

/// xoshiro256** with splitmix64 seeding. Substream w of a run with seed s is
/// seeded from splitmix64 applied to s + w + 1, so a report depends only on
/// (seed, parameters, substream count), never on thread scheduling.
class Xoshiro {
public:
  explicit Xoshiro(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

private:
  std::uint64_t s_[4];
};

constexpr unsigned kSubstreams = 64;

struct SimulationReport {
  std::string model;
  unsigned long q = 0;
  unsigned rho = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  double p_hat = 0;
  double std_error = 0;
  mpq_class target;
  double z_score = 0;
  // histogram models fill these instead of p_hat
  std::vector<std::pair<unsigned, double>> histogram;  // (sgnrk, empirical mass)
  std::vector<std::pair<unsigned, mpq_class>> targets;
  double max_abs_z = 0;

  std::string to_string() const;
};

/// Random invariant maximal isotropic subspace model: draws a uniform line in
/// the chi-part of the component (q+1 lines), takes its orthocomplement line
/// in the dual part and reports how often the assembled subspace misses the
/// archimedean block. Exhaustive mode (samples = 0 or exhaustive flag)
/// iterates each line once; the closed form is (q-1)/(q+1).
SimulationReport simulate_H1(unsigned long q, std::uint64_t samples, std::uint64_t seed,
                             bool exhaustive = false, unsigned jobs = 1);

/// Random unit-line model: uniform line in GF(q)^(rho+1) and containment in a
/// fixed rho-dimensional subspace; closed form (q^rho - 1)/(q^(rho+1) - 1).
SimulationReport simulate_H2prime(unsigned long q, unsigned rho, std::uint64_t samples,
                                  std::uint64_t seed, bool exhaustive = false,
                                  unsigned jobs = 1);

/// Signature-rank distribution for odd-order-of-2 prime degree ell with odd
/// class number: m independent line draws per trial, histogram of
/// f*s + (ell+1)/2 against the binomial closed form.
SimulationReport simulate_sgnrk_distribution(unsigned long ell, std::uint64_t samples,
                                             std::uint64_t seed, unsigned jobs = 1);

}  // namespace oddab::montecarlo
