#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace oddab::heuristics {

/// Finite q-Pochhammer (q)_m = prod_{i=1..m} (1 - q^-i), exact.
mpq_class pochhammer(const mpq_class& q, unsigned m);

/// Infinite product (q)_inf for real q > 1, truncated at `trunc` factors.
/// Returns the value and a rigorous bound on the truncation error.
struct TruncatedValue {
  double value;
  double tail_bound;
};
TruncatedValue pochhammer_inf(double q, unsigned trunc = 64);

/// Probability that an isotropy-rank pair vanishes: (q-1)/(q+1).
mpq_class prob_k_plus_zero(unsigned long q);

/// For prime ell = 7 (mod 8) with 2 of order (ell-1)/2: the three narrow
/// class module probabilities ((q-1)/(q+1), 1/(q+1), 1/(q+1)), q = 2^((ell-1)/2).
/// Throws if the preconditions fail.
struct ThreeWaySplit {
  mpq_class unchanged, grows_chi, grows_dual;
};
ThreeWaySplit conj_3mod4(unsigned long ell);

/// P(sgnrk_chi = 0 | rk_chi Cl+ = rk_chi Cl = rho) = (q^rho - 1)/(q^(rho+1) - 1).
mpq_class prob_sgnrk_chi(unsigned long q, unsigned rho);

/// Binomial signature-rank law for odd f: mass at sgnrk = f*s + (ell+1)/2.
struct BinomMass {
  unsigned sgnrk;
  mpq_class prob;
};
BinomMass binom_sgnrk(unsigned long ell, unsigned s);
std::vector<BinomMass> binom_sgnrk_distribution(unsigned long ell);

/// 2-rank distribution for cyclic cubic/quintic fields (corrected
/// Cohen-Lenstra): P(rk_2 Cl = (ell-1) r). Only ell = 3 and 5 are supported;
/// other degrees throw (no accepted prediction).
double malle_rk2(unsigned long ell, unsigned r, unsigned trunc = 64);

/// P(sgnrk = 1) over all cyclic fields of degree ell in {3,5}; evaluates the
/// two published forms of the sum and checks they agree to 1e-12.
double conj_sgnrk1_total(unsigned long ell, unsigned rmax = 40, unsigned trunc = 64);

/// k-th moment of #Cl[2] under the malle_rk2 law, with stated tail control.
double moments_cl2(unsigned long ell, unsigned k, unsigned trunc = 64);

/// For 2 a primitive root mod ell: (P(sgnrk = 1), P(sgnrk = ell)) conditioned
/// on rk_2 Cl = (ell-1) r.
std::pair<mpq_class, mpq_class> conj_sgnrk_prime(unsigned long ell, unsigned r);

/// One row of a prediction table.
struct PredictionRow {
  std::string property;
  std::string value;       // decimal or exact rational rendering
  bool is_theorem = false; // structurally forced entries
};
struct PredictionTable {
  std::string family;
  std::vector<PredictionRow> rows;
};

/// The summary prediction tables for ell = 3, 5, 7.
std::vector<PredictionTable> prediction_tables(unsigned long ell, unsigned trunc = 64);

/// True if 2 generates (Z/ell)^x.
bool two_is_primitive_root(unsigned long ell);

}  // namespace oddab::heuristics
