#include "oddab/heuristics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oddab/gf2e.hpp"

namespace oddab::heuristics {

namespace {

mpq_class pow_q(const mpq_class& q, unsigned e) {
  mpq_class acc = 1;
  for (unsigned i = 0; i < e; ++i) acc *= q;
  return acc;
}

mpz_class pow2z(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

void require_prime(unsigned long ell) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("degree must be an odd prime");
  for (unsigned long d = 3; d * d <= ell; d += 2)
    if (ell % d == 0) throw std::invalid_argument("degree must be an odd prime");
}

std::string pct(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v * 100.0 << "%";
  return os.str();
}
std::string rat(const mpq_class& v) {
  std::ostringstream os;
  os << v.get_num() << "/" << v.get_den();
  return os.str();
}

}  // namespace

mpq_class pochhammer(const mpq_class& q, unsigned m) {
  if (q <= 1) throw std::invalid_argument("base must exceed 1");
  mpq_class acc = 1, qi = 1;
  for (unsigned i = 1; i <= m; ++i) {
    qi *= q;
    acc *= (1 - 1 / qi);
  }
  return acc;
}

TruncatedValue pochhammer_inf(double q, unsigned trunc) {
  if (q <= 1) throw std::invalid_argument("base must exceed 1");
  double log_acc = 0;
  for (unsigned i = 1; i <= trunc; ++i) log_acc += std::log1p(-std::pow(q, -double(i)));
  double value = std::exp(log_acc);
  // |log tail| <= sum_{i>T} q^-i / (1 - q^-i) <= q^-T / (q - 1) / (1 - q^-(T+1))
  double qT = std::pow(q, -double(trunc));
  double log_tail = qT / (q - 1) / (1 - qT / q);
  return {value, value * (std::exp(log_tail) - 1)};
}

mpq_class prob_k_plus_zero(unsigned long q) {
  if (q < 2 || (q & (q - 1)) != 0) throw std::invalid_argument("q must be a power of 2");
  return mpq_class(q - 1) / mpq_class(q + 1);
}

ThreeWaySplit conj_3mod4(unsigned long ell) {
  require_prime(ell);
  if (ell % 8 != 7) throw std::invalid_argument("degree must be 7 mod 8");
  if (multiplicative_order_of_2(ell) != (ell - 1) / 2)
    throw std::invalid_argument("2 must have order (ell-1)/2");
  mpz_class q = pow2z((ell - 1) / 2);
  mpq_class main(q - 1), other(1);
  main /= mpq_class(q + 1);
  other /= mpq_class(q + 1);
  return {main, other, other};
}

mpq_class prob_sgnrk_chi(unsigned long q, unsigned rho) {
  if (q < 2 || (q & (q - 1)) != 0) throw std::invalid_argument("q must be a power of 2");
  mpz_class qz(static_cast<unsigned long>(q));
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), qz.get_mpz_t(), rho);
  mpz_pow_ui(den.get_mpz_t(), qz.get_mpz_t(), rho + 1);
  return mpq_class(num - 1) / mpq_class(den - 1);
}

BinomMass binom_sgnrk(unsigned long ell, unsigned s) {
  require_prime(ell);
  unsigned f = multiplicative_order_of_2(ell);
  if (f % 2 == 0) throw std::invalid_argument("order of 2 must be odd");
  unsigned m = unsigned((ell - 1) / (2 * f));
  if (s > m) throw std::invalid_argument("s exceeds the number of dual pairs");
  mpz_class q = pow2z(f);
  mpq_class succ = mpq_class(q - 1) / mpq_class(q + 1);
  mpq_class fail = mpq_class(2) / mpq_class(q + 1);
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), m, s);
  mpq_class prob = mpq_class(binom) * pow_q(succ, s) * pow_q(fail, m - s);
  return {f * s + unsigned((ell + 1) / 2), prob};
}

std::vector<BinomMass> binom_sgnrk_distribution(unsigned long ell) {
  require_prime(ell);
  unsigned f = multiplicative_order_of_2(ell);
  unsigned m = unsigned((ell - 1) / (2 * f));
  std::vector<BinomMass> out;
  for (unsigned s = 0; s <= m; ++s) out.push_back(binom_sgnrk(ell, s));
  return out;
}

double malle_rk2(unsigned long ell, unsigned r, unsigned trunc) {
  if (ell != 3 && ell != 5)
    throw std::invalid_argument("no accepted 2-rank prediction for this degree");
  double q = std::pow(2.0, double(ell - 1));
  double sq = std::sqrt(q);
  double c = (1 + 1 / sq) * pochhammer_inf(sq, trunc).value *
             pochhammer_inf(q * q, trunc).value /
             std::pow(pochhammer_inf(q, trunc).value, 2);
  double denom = std::pow(sq, double(r) * (r + 2)) *
                 pochhammer(mpq_class(static_cast<unsigned long>(q)), r).get_d();
  return c / denom;
}

double conj_sgnrk1_total(unsigned long ell, unsigned rmax, unsigned trunc) {
  if (ell != 3 && ell != 5)
    throw std::invalid_argument("no accepted 2-rank prediction for this degree");
  double q = std::pow(2.0, double(ell - 1));
  double total = 0;
  for (unsigned r = 0; r <= rmax; ++r) {
    double mass = malle_rk2(ell, r, trunc);
    double cond = prob_sgnrk_chi(static_cast<unsigned long>(q), r).get_d();
    // alternate published form of the same summand: the prefactor uses
    // q^((r^2+3r)/2) with an (ell-1)^r numerator
    double sq = std::sqrt(q);
    double c = (1 + 1 / sq) * pochhammer_inf(sq, trunc).value *
               pochhammer_inf(q * q, trunc).value /
               std::pow(pochhammer_inf(q, trunc).value, 2);
    double alt = c * std::pow(double(ell - 1), double(r)) /
                 (std::pow(q, (double(r) * r + 3.0 * r) / 2) *
                  pochhammer(mpq_class(static_cast<unsigned long>(q)), r).get_d()) *
                 cond;
    double main = mass * cond;
    if (std::abs(main - alt) > 1e-12)
      throw std::logic_error("published forms of the signature sum disagree");
    total += main;
  }
  return total;
}

double moments_cl2(unsigned long ell, unsigned k, unsigned trunc) {
  if (k < 1 || k > 3) throw std::invalid_argument("moment order must be 1..3");
  if (ell != 3 && ell != 5)
    throw std::invalid_argument("no accepted 2-rank prediction for this degree");
  double q = std::pow(2.0, double(ell - 1));
  double sq = std::sqrt(q);
  double c = (1 + 1 / sq) * pochhammer_inf(sq, trunc).value *
             pochhammer_inf(q * q, trunc).value /
             std::pow(pochhammer_inf(q, trunc).value, 2);
  double total = 0;
  for (unsigned r = 0; r <= trunc; ++r) {
    // size^k / sqrt(q)^(r(r+2)) folded into one power of 2 so neither factor
    // overflows on its own; net exponent (ell-1) r (2k - r - 2) / 2 turns
    // negative past r = 2k - 2 and the series is eventually geometric.
    double net = double(ell - 1) * r * (2.0 * k - r - 2.0) / 2.0;
    total += c * std::pow(2.0, net) /
             pochhammer(mpq_class(static_cast<unsigned long>(q)), r).get_d();
  }
  return total;
}

std::pair<mpq_class, mpq_class> conj_sgnrk_prime(unsigned long ell, unsigned r) {
  require_prime(ell);
  if (!two_is_primitive_root(ell))
    throw std::invalid_argument("2 must be a primitive root");
  mpq_class low = prob_sgnrk_chi(1ul << (ell - 1), r);
  return {low, 1 - low};
}

bool two_is_primitive_root(unsigned long ell) {
  return multiplicative_order_of_2(ell) == ell - 1;
}

std::vector<PredictionTable> prediction_tables(unsigned long ell, unsigned trunc) {
  require_prime(ell);
  std::vector<PredictionTable> tables;
  if (ell == 3 || ell == 5) {
    unsigned long q = 1ul << (ell - 1);
    PredictionTable rk{"rk_2 Cl distribution", {}};
    for (unsigned r = 0; r <= 2; ++r) {
      std::ostringstream prop;
      prop << "rk2 Cl = " << (ell - 1) * r;
      rk.rows.push_back({prop.str(), pct(malle_rk2(ell, r, trunc))});
    }
    tables.push_back(rk);

    PredictionTable cond{"sgnrk conditioned on rk_2 Cl", {}};
    for (unsigned r = 0; r <= 2; ++r) {
      auto [p1, pl] = conj_sgnrk_prime(ell, r);
      std::ostringstream a, b;
      a << "P(sgnrk=1 | rk2=" << (ell - 1) * r << ")";
      b << "P(sgnrk=" << ell << " | rk2=" << (ell - 1) * r << ")";
      cond.rows.push_back({a.str(), rat(p1), r == 0});
      cond.rows.push_back({b.str(), rat(pl), r == 0});
    }
    tables.push_back(cond);

    // combination line in the shape the source tables print: the three
    // displayed 4-digit masses times the conditional laws, plus the full sum
    double from_display = 0;
    for (unsigned r = 0; r <= 2; ++r) {
      double mass4 = std::floor(malle_rk2(ell, r, trunc) * 1e4) / 1e4;
      from_display += mass4 * (1 - prob_sgnrk_chi(q, r).get_d());
    }
    double full = 1 - conj_sgnrk1_total(ell, 40, trunc);
    PredictionTable tot{"sgnrk totals", {}};
    std::ostringstream head;
    head << "P(sgnrk=" << ell << ")";
    tot.rows.push_back({head.str() + " [from displayed terms]", pct(from_display)});
    tot.rows.push_back({head.str() + " [full sum]", pct(full)});
    tot.rows.push_back({"P(sgnrk=1) [full sum]", pct(conj_sgnrk1_total(ell, 40, trunc))});
    PredictionTable mom{"moments of #Cl[2]", {}};
    for (unsigned k = 1; k <= 3; ++k) {
      std::ostringstream p, v;
      p << "E[#Cl[2]^" << k << "]";
      v.setf(std::ios::fixed);
      v.precision(3);
      v << moments_cl2(ell, k, trunc);
      mom.rows.push_back({p.str(), v.str()});
    }
    tables.push_back(tot);
    tables.push_back(mom);
  } else if (ell == 7) {
    PredictionTable t{"cyclic degree 7", {}};
    auto kp = prob_k_plus_zero(8);
    t.rows.push_back({"P(k+ = 0 | Cl[2] self-dual)", rat(kp)});
    t.rows.push_back({"P(k+ = 3 | Cl[2] self-dual)", rat(1 - kp)});
    t.rows.push_back({"P(sgnrk=4 | rk2 Cl = 0)", rat(1 - kp)});
    t.rows.push_back({"P(sgnrk=7 | rk2 Cl = 0)", rat(kp)});
    auto s0 = prob_sgnrk_chi(8, 1);
    t.rows.push_back({"P(sgnrk=1 | rk2 Cl = 3)", rat(s0)});
    t.rows.push_back({"P(sgnrk=4 | rk2 Cl = 3)", rat(1 - s0)});
    t.rows.push_back({"P(sgnrk=7 | rk2 Cl = 3)", "0", true});
    t.rows.push_back({"rk2 Cl+ = 6 given rk2 Cl = 3", "1", true});
    t.rows.push_back({"E[#Cl[2]] (empirical conjecture)", "11/8?"});
    tables.push_back(t);
  } else {
    PredictionTable t{"no accepted heuristic", {}};
    t.rows.push_back({"rk_2 Cl distribution", "open for degrees >= 7"});
    tables.push_back(t);
  }
  return tables;
}

}  // namespace oddab::heuristics
