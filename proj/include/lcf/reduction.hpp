#pragma once

// Reduction of Laurent series over Q and of their continued fractions
// modulo a rational prime.

#include "lcf/surd.hpp"

namespace lcf {

// coefficientwise reduction; throws when p divides a denominator
Poly reduce_poly(const Poly& f, const Field& Fp);
// p-adic valuation of a nonzero rational
long padic_valuation(const mpq_class& x, std::uint64_t p);
// minimum valuation over the nonzero coefficients
long poly_valuation(const Poly& f, std::uint64_t p);

struct NormalizedContinuant {
  long i = 0;  // h_n = p^{i_n}
  Poly x, y;   // reductions of h_n p_n, h_n q_n
};

struct ReductionReport {
  std::uint64_t p = 0;
  bool reducible = false;
  std::string reason;
  Expansion source;    // expansion of alpha over Q
  Expansion reduced;   // expansion of the reduction over F_p
  std::vector<NormalizedContinuant> normalized;
  std::vector<size_t> rho;
  bool rho_starts_at_zero = false;
  bool nondecreasing = false;
  bool step_at_most_one = false;
  bool surjective = false;
  bool coprime_on_increments = false;
  int checked_depth = 0;  // number of Laurent coefficients inspected
  bool ord_positive_reduction = false;
};

// alpha given by its exact value over Q (rational or quadratic)
ReductionReport reduce_alpha(const Quad& alpha, std::uint64_t p, int budget);
std::vector<NormalizedContinuant> normalized_continuants(const Quad& alpha, std::uint64_t p, int budget);
ReductionReport rho_map(const Quad& alpha, std::uint64_t p, int budget);

struct MonotonicityReport {
  std::vector<int> source_degrees;   // deg a_n, n >= 1
  std::vector<int> reduced_degrees;  // deg b_m, m >= 1
  std::vector<int> predicted_degrees;  // from the collapsed sums
  bool formula_holds = false;
  int K_source = 0, K_reduced = 0;
  bool K_grows = false;
};
MonotonicityReport k_monotonicity_check(const Quad& alpha, std::uint64_t p, int budget);

enum class NormalityVerdict { proven_normal, observed_only, not_normal };
std::string normality_name(NormalityVerdict v);

struct NormalityReport {
  NormalityVerdict verdict = NormalityVerdict::observed_only;
  std::string reason;
  PeriodInfo reduced_period;
  std::vector<Poly> reduced_word;  // quotients of the reduction
  int source_K = 0;                // K over alpha's own window
};
NormalityReport normality_by_reduction(const Quad& alpha, std::uint64_t p, int budget);

}  // namespace lcf
