#include "lcf/reduction.hpp"

#include <climits>

namespace lcf {

Poly reduce_poly(const Poly& f, const Field& Fp) {
  std::vector<Elem> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(Fp->from_rational(x.to_rational()));
  return Poly(Fp, std::move(c));
}

long padic_valuation(const mpq_class& x, std::uint64_t p) {
  if (x == 0) throw Error("valuation of zero");
  long v = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    n /= p;
    ++v;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
    d /= p;
    --v;
  }
  return v;
}

long poly_valuation(const Poly& f, std::uint64_t p) {
  if (f.is_zero()) throw Error("valuation of the zero polynomial");
  long v = LONG_MAX;
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) v = std::min(v, padic_valuation(c.to_rational(), p));
  return v;
}

}  // namespace lcf

namespace lcf {

namespace {

constexpr int kCheckDepth = 40;

bool integral(const Poly& f, std::uint64_t p) { return f.is_zero() || poly_valuation(f, p) >= 0; }

Elem reduce_elem(const Elem& x, const Field& Fp) { return Fp->from_rational(x.to_rational()); }

// reduction of alpha as an exact element over F_p; empty with a reason when
// the normalized form is not p-integral
std::optional<Quad> reduce_quad(const Quad& x, std::uint64_t p, const Field& Fp, std::string& reason) {
  const Field& Q = x.field();
  if (Q->kind() != FieldKind::rationals) throw Error("reduction needs alpha over Q");
  if (x.is_rational()) {
    // Quad keeps lowest terms with a monic denominator
    if (!integral(x.a(), p) || !integral(x.c(), p)) {
      reason = "alpha is not p-integral";
      return std::nullopt;
    }
    return Quad::rational(reduce_poly(x.a(), Fp), reduce_poly(x.c(), Fp));
  }
  if (p == 2) {
    reason = "characteristic 2";
    return std::nullopt;
  }
  const Poly& D = x.D();
  auto s = Q->sqrt(D.lead());
  if (!s) throw Error("leading coefficient of D is not a square");
  Poly D1 = D * D.lead().inv();
  Poly b1 = x.b() * *s;
  if (!integral(x.a(), p) || !integral(b1, p) || !integral(x.c(), p) || !integral(D1, p)) {
    reason = "alpha is not p-integral in normalized form";
    return std::nullopt;
  }
  Poly a = reduce_poly(x.a(), Fp), b = reduce_poly(b1, Fp), c = reduce_poly(x.c(), Fp), Dp = reduce_poly(D1, Fp);
  if (auto r = poly_sqrt_exact(Dp)) {
    if (!r->lead().is_one()) *r = -*r;
    return Quad::rational(a + b * *r, c);
  }
  return Quad(a, b, c, Dp);
}

bool same_prefix(const LaurentStream& src, const LaurentStream& red, const Field& Fp, int depth) {
  int hi = std::max(src.hi(), red.hi());
  for (int i = hi; i > hi - depth; --i)
    if (reduce_elem(src.coeff(i), Fp) != red.coeff(i)) return false;
  return true;
}

Expansion expand_exact(const Quad& x, int budget) {
  if (x.is_rational()) return cf_expand_rational(x.a(), x.c());
  return surd_expand(surd_from_quad(x), budget, true);
}

}  // namespace

std::string normality_name(NormalityVerdict v) {
  switch (v) {
    case NormalityVerdict::proven_normal:
      return "proven_normal";
    case NormalityVerdict::observed_only:
      return "observed_only";
    case NormalityVerdict::not_normal:
      return "not_normal";
  }
  return "?";
}

ReductionReport reduce_alpha(const Quad& alpha, std::uint64_t p, int budget) {
  Field Fp = make_prime_field(p);
  ReductionReport rep;
  rep.p = p;
  auto red = reduce_quad(alpha, p, Fp, rep.reason);
  rep.source = expand_exact(alpha, budget);
  if (!red) return rep;
  LaurentStream rs = laurent_from_quad(*red);
  LaurentStream ss = laurent_from_quad(alpha);
  if (!same_prefix(ss, rs, Fp, kCheckDepth)) {
    if (red->is_rational()) throw Error("reduction does not match the series coefficients");
    Quad flipped(red->a(), -red->b(), red->c(), red->D());
    if (!same_prefix(ss, laurent_from_quad(flipped), Fp, kCheckDepth))
      throw Error("reduction does not match the series coefficients");
    red = flipped;
    rs = laurent_from_quad(*red);
  }
  rep.reducible = true;
  rep.checked_depth = kCheckDepth;
  int top = rep.source.q.back().deg();
  rep.reduced = expand_exact(*red, top + 2);
  rep.ord_positive_reduction = rep.reduced.a[0].is_zero();
  return rep;
}

std::vector<NormalizedContinuant> normalized_continuants(const Quad& alpha, std::uint64_t p, int budget) {
  Field Fp = make_prime_field(p);
  Expansion e = expand_exact(alpha, budget);
  std::vector<NormalizedContinuant> out;
  for (size_t n = 0; n < e.size(); ++n) {
    NormalizedContinuant nc;
    nc.i = -poly_valuation(e.q[n], p);
    mpq_class h = 1;
    for (long k = 0; k < std::labs(nc.i); ++k) h *= static_cast<unsigned long>(p);
    if (nc.i < 0) h = 1 / h;
    Elem he = alpha.field()->from_rational(h);
    nc.x = reduce_poly(e.p[n] * he, Fp);
    nc.y = reduce_poly(e.q[n] * he, Fp);
    out.push_back(nc);
  }
  return out;
}

ReductionReport rho_map(const Quad& alpha, std::uint64_t p, int budget) {
  ReductionReport rep = reduce_alpha(alpha, p, budget);
  if (!rep.reducible) return rep;
  rep.normalized = normalized_continuants(alpha, p, budget);
  const Expansion& r = rep.reduced;
  for (const auto& nc : rep.normalized) {
    size_t m = SIZE_MAX;
    for (size_t k = 0; k < r.size(); ++k)
      if (nc.x * r.q[k] == nc.y * r.p[k]) {
        m = k;
        break;
      }
    rep.rho.push_back(m);
  }
  const auto& rho = rep.rho;
  bool complete = std::find(rho.begin(), rho.end(), SIZE_MAX) == rho.end();
  rep.rho_starts_at_zero = !rho.empty() && rho[0] == 0;
  rep.nondecreasing = complete;
  rep.step_at_most_one = complete;
  rep.coprime_on_increments = complete;
  for (size_t n = 0; complete && n + 1 < rho.size(); ++n) {
    if (rho[n + 1] < rho[n]) rep.nondecreasing = false;
    if (rho[n + 1] > rho[n] + 1) rep.step_at_most_one = false;
    if (rho[n + 1] == rho[n] + 1) {
      const auto& nc = rep.normalized[n + 1];
      if (poly_gcd(nc.x, nc.y).deg() > 0 || nc.y.deg() != rep.source.q[n + 1].deg()) rep.coprime_on_increments = false;
    }
  }
  // every convergent of the reduction up to the last image is hit; for a
  // terminating source the image must reach the last convergent
  rep.surjective = complete && rep.nondecreasing && rep.step_at_most_one && rep.rho_starts_at_zero;
  if (rep.surjective && rep.source.terminated) rep.surjective = r.terminated && rho.back() + 1 == r.size();
  return rep;
}

MonotonicityReport k_monotonicity_check(const Quad& alpha, std::uint64_t p, int budget) {
  ReductionReport rep = rho_map(alpha, p, budget);
  if (!rep.reducible) throw Error("alpha is not reducible modulo " + std::to_string(p) + ": " + rep.reason);
  if (!rep.nondecreasing || !rep.step_at_most_one) throw Error("rho map is inconsistent");
  MonotonicityReport out;
  const auto& rho = rep.rho;
  for (size_t n = 1; n < rep.source.size(); ++n) out.source_degrees.push_back(rep.source.a[n].deg());
  // blocks {n : rho(n) = m} = [n_m, N_m] with a successor block
  size_t covered = 0;
  for (size_t n = 0; n + 1 < rho.size(); ++n) {
    if (rho[n + 1] != rho[n] + 1) continue;
    size_t m = rho[n];
    size_t start = n;
    while (start > 0 && rho[start - 1] == m) --start;
    int sum = 0;
    for (size_t k = start + 1; k <= n + 1; ++k) sum += rep.source.a[k].deg();
    out.predicted_degrees.push_back(sum);
    if (m + 1 < rep.reduced.size()) out.reduced_degrees.push_back(rep.reduced.a[m + 1].deg());
    covered = n + 1;
  }
  out.formula_holds = out.predicted_degrees == out.reduced_degrees;
  for (size_t n = 1; n <= covered; ++n) out.K_source = std::max(out.K_source, rep.source.a[n].deg());
  for (int d : out.reduced_degrees) out.K_reduced = std::max(out.K_reduced, d);
  out.K_grows = out.K_reduced >= out.K_source;
  return out;
}

NormalityReport normality_by_reduction(const Quad& alpha, std::uint64_t p, int budget) {
  Field Fp = make_prime_field(p);
  NormalityReport rep;
  std::string reason;
  auto red = reduce_quad(alpha, p, Fp, reason);
  int window = std::min(budget, kCheckDepth);
  Expansion src = alpha.is_rational() ? cf_expand_rational(alpha.a(), alpha.c())
                                      : surd_expand(surd_from_quad(alpha), window, false);
  for (size_t n = 1; n < src.a.size(); ++n) rep.source_K = std::max(rep.source_K, src.a[n].deg());
  auto fallback = [&](const std::string& why) {
    rep.reason = why;
    rep.verdict = rep.source_K > 1 ? NormalityVerdict::not_normal : NormalityVerdict::observed_only;
    return rep;
  };
  if (!red) return fallback(reason);
  if (!red->is_rational() && !same_prefix(laurent_from_quad(alpha), laurent_from_quad(*red), Fp, kCheckDepth))
    red = Quad(red->a(), -red->b(), red->c(), red->D());
  if (red->is_rational()) {
    Expansion e = cf_expand_rational(red->a(), red->c());
    rep.reduced_word = e.a;
    rep.reduced_period.status = PeriodStatus::none_found;
    if (!alpha.is_rational()) return fallback("reduction is rational");
    if (red->c().deg() != alpha.c().deg()) return fallback("denominator degree drops modulo p");
    for (size_t n = 1; n < e.a.size(); ++n)
      if (e.a[n].deg() != 1) return fallback("reduction has a partial quotient of degree > 1");
    rep.verdict = NormalityVerdict::proven_normal;
    rep.reason = "reduction is normal with the same denominator degree";
    return rep;
  }
  PeriodResult pr = detect_periodicity(surd_from_quad(*red), budget);
  rep.reduced_period = pr.info;
  size_t len = pr.info.status == PeriodStatus::none_found ? pr.expansion.size()
                                                          : pr.info.preperiod + pr.info.period;
  rep.reduced_word.assign(pr.expansion.a.begin(), pr.expansion.a.begin() + static_cast<long>(len));
  if (pr.info.status != PeriodStatus::periodic) return fallback("no period found for the reduction");
  for (size_t n = 1; n < len; ++n)
    if (rep.reduced_word[n].deg() != 1) return fallback("reduction has a partial quotient of degree > 1");
  if (len > 0 && pr.info.preperiod == 0 && rep.reduced_word[0].deg() != 1)
    return fallback("reduction has a partial quotient of degree > 1");
  rep.verdict = NormalityVerdict::proven_normal;
  rep.reason = "reduction is periodic with linear partial quotients";
  return rep;
}

}  // namespace lcf
