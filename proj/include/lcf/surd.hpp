#pragma once

// Quadratic surds (r + sqrt D)/s: complete-quotient recurrence,
// reducedness, quasi-periodicity, Pell equation and Pellianity.

#include "lcf/contfrac.hpp"

namespace lcf {

// floor(sqrt D); D of even degree with square leading coefficient
Poly sqrt_floor(const Poly& D);
// checks that D is a valid radicand: char != 2, even positive degree, square
// leading coefficient, not a perfect square
void check_radicand(const Poly& D);

// (A + B sqrt D0)/C as a state with s | r^2 - D
Surd surd_normalize(const Poly& A, const Poly& B, const Poly& C, const Poly& D0);
Surd surd_from_quad(const Quad& x);
// next state for the partial quotient a
Surd surd_cf_step(const Surd& st, const Poly& a);
Poly surd_floor(const Surd& st, const Poly& delta);
bool is_reduced(const Surd& st);
bool is_reduced(const Surd& st, const Poly& delta);
Surd conjugate(const Surd& st);
RatFn surd_norm(const Surd& st);

Expansion surd_expand(const Surd& st, int budget, bool continuants = true);

enum class PeriodStatus { periodic, quasi_periodic_aperiodic, none_found };

struct PeriodInfo {
  PeriodStatus status = PeriodStatus::none_found;
  size_t preperiod = 0;
  size_t quasi_period = 0;
  // alpha_{n+m} = multiplier * alpha_n for n >= preperiod
  std::optional<Elem> multiplier;
  size_t period = 0;          // 0 when aperiodic or not found
  bool period_observed = false;  // exact state repetition seen in the window
  int budget = 0;
};

struct PeriodResult {
  Expansion expansion;
  PeriodInfo info;
};

PeriodResult detect_periodicity(const Surd& st, int budget);
PeriodResult detect_periodicity_sqrt(const Poly& D, int budget);

std::string period_status_name(PeriodStatus s);

struct PellSolution {
  Poly x, y;
  Elem unit;       // x^2 - D y^2
  size_t index = 0;  // continuant index m - 1
  bool normalized = false;  // scaled so that the unit is 1 or -1
};

struct PellResult {
  std::optional<PellSolution> solution;
  PeriodInfo info;
};

PellResult pell_solve(const Poly& D, int budget);

enum class Pellianity { pellian, non_pellian, inconclusive };
std::string pellianity_name(Pellianity v);

struct PrimeOrder {
  std::uint64_t p = 0;
  bool good = false;
  std::string reason;         // why the prime was skipped
  std::optional<size_t> torsion_order;
};

struct PellianityReport {
  Pellianity verdict = Pellianity::inconclusive;
  std::vector<PrimeOrder> primes;
  // incompatible pair when the verdict comes from the orders alone
  std::optional<std::pair<std::uint64_t, std::uint64_t>> incompatible;
  std::optional<size_t> common_order;
  size_t bounded_steps = 0;
  int max_quotient_degree = 0;
  std::optional<PellSolution> solution;
};

// torsion order over F_p: deg q at the minimal quasi-period of sqrt(D mod p)
size_t torsion_order(const Poly& D_mod_p, int budget);
// unique common value m1 p1^k1 = m2 p2^k2 with k1, k2 >= 0, if any
std::optional<mpz_class> compatible_order(std::uint64_t p1, size_t m1, std::uint64_t p2, size_t m2);
// D over Q
PellianityReport pellianity_decide(const Poly& D, const std::vector<std::uint64_t>& primes, int budget);

}  // namespace lcf
