#include <algorithm>
#include <cmath>
#include <thread>

#include "lcf/reduction.hpp"
#include "lcf/surd.hpp"

namespace lcf {

namespace {

long valuation(size_t m, std::uint64_t p) {
  long v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

void examine_prime(const Poly& D, PrimeOrder& po, int budget) {
  std::uint64_t p = po.p;
  if (p == 2) {
    po.reason = "characteristic 2";
    return;
  }
  Field Fp;
  try {
    Fp = make_prime_field(p);
  } catch (const Error& e) {
    po.reason = e.what();
    return;
  }
  Poly Dp;
  try {
    Dp = reduce_poly(D, Fp);
  } catch (const Error&) {
    po.reason = "p divides a denominator of D";
    return;
  }
  if (Dp.deg() != D.deg()) {
    po.reason = "degree drops modulo p";
    return;
  }
  if (!poly_squarefree(Dp)) {
    po.reason = "reduction is not squarefree";
    return;
  }
  if (!Fp->sqrt(Dp.lead())) {
    po.reason = "leading coefficient is not a square modulo p";
    return;
  }
  po.good = true;
  try {
    po.torsion_order = torsion_order(Dp, budget);
  } catch (const Error& e) {
    po.good = false;
    po.reason = e.what();
  }
}

}  // namespace

std::string pellianity_name(Pellianity v) {
  switch (v) {
    case Pellianity::pellian:
      return "Pellian";
    case Pellianity::non_pellian:
      return "NonPellian";
    case Pellianity::inconclusive:
      return "Inconclusive";
  }
  return "?";
}

size_t torsion_order(const Poly& Dp, int budget) {
  PeriodResult pr = detect_periodicity_sqrt(Dp, budget);
  const Expansion& e = pr.expansion;
  for (size_t n = 1; n < e.states.size(); ++n)
    if (e.states[n].s.deg() == 0 && n < e.q.size()) return static_cast<size_t>(e.q[n].deg());
  throw Error("no quasi-period found within the budget of " + std::to_string(budget) + " steps");
}

std::optional<mpz_class> compatible_order(std::uint64_t p1, size_t m1, std::uint64_t p2, size_t m2) {
  if (p1 == p2) throw Error("compatibility needs distinct primes");
  long k1 = valuation(m2, p1) - valuation(m1, p1);
  long k2 = valuation(m1, p2) - valuation(m2, p2);
  if (k1 < 0 || k2 < 0) return std::nullopt;
  mpz_class a = m1, b = m2, t;
  mpz_ui_pow_ui(t.get_mpz_t(), p1, static_cast<unsigned long>(k1));
  a *= t;
  mpz_ui_pow_ui(t.get_mpz_t(), p2, static_cast<unsigned long>(k2));
  b *= t;
  if (a != b) return std::nullopt;
  return a;
}

PellianityReport pellianity_decide(const Poly& D, const std::vector<std::uint64_t>& primes_in, int budget) {
  if (D.field()->kind() != FieldKind::rationals) throw Error("Pellianity decision needs D over Q");
  check_radicand(D);
  if (!poly_squarefree(D)) throw Error("D is not squarefree");
  std::vector<std::uint64_t> primes = primes_in;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.empty()) throw Error("no primes supplied");

  PellianityReport rep;
  rep.primes.resize(primes.size());
  int d = D.deg() / 2;
  std::vector<std::thread> workers;
  for (size_t i = 0; i < primes.size(); ++i) {
    rep.primes[i].p = primes[i];
    // the period over F_p is at most p^(2d-1)
    double bound = std::pow(static_cast<double>(primes[i]), 2 * d - 1) + 4;
    int b = static_cast<int>(std::min<double>(bound, 2000000.0));
    workers.emplace_back(examine_prime, std::cref(D), std::ref(rep.primes[i]), b);
  }
  for (auto& w : workers) w.join();

  std::vector<const PrimeOrder*> good;
  for (const auto& po : rep.primes)
    if (po.good) good.push_back(&po);
  if (good.empty()) throw Error("no prime of good reduction supplied");
  if (good.size() < 2) return rep;

  std::optional<mpz_class> common;
  for (size_t i = 0; i < good.size(); ++i) {
    for (size_t j = i + 1; j < good.size(); ++j) {
      auto c = compatible_order(good[i]->p, *good[i]->torsion_order, good[j]->p, *good[j]->torsion_order);
      if (!c || (common && *common != *c)) {
        rep.verdict = Pellianity::non_pellian;
        rep.incompatible = std::make_pair(good[i]->p, good[j]->p);
        return rep;
      }
      common = c;
    }
  }
  if (!common->fits_ulong_p() || common->get_ui() > static_cast<unsigned long>(budget) + d) return rep;
  size_t m = common->get_ui();
  rep.common_order = m;
  // the quasi-period of sqrt D is at most m - g with g = d - 1
  size_t limit = m - static_cast<size_t>(d - 1);
  const Field& F = D.field();
  Expansion e = surd_expand(Surd{Poly(F), Poly::constant(F, 1), D}, static_cast<int>(limit + 1), true);
  rep.bounded_steps = e.a.size();
  for (size_t n = 1; n < e.a.size(); ++n) rep.max_quotient_degree = std::max(rep.max_quotient_degree, e.a[n].deg());
  for (size_t n = 1; n <= limit && n < e.states.size(); ++n) {
    if (e.states[n].s.deg() == 0) {
      rep.verdict = Pellianity::pellian;
      PellSolution sol;
      sol.index = n - 1;
      sol.x = e.p[n - 1];
      sol.y = e.q[n - 1];
      sol.unit = (sol.x * sol.x - D * sol.y * sol.y).lead();
      rep.solution = sol;
      return rep;
    }
  }
  rep.verdict = Pellianity::non_pellian;
  return rep;
}

}  // namespace lcf
