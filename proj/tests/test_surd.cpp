#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lcf/surd.hpp"

using namespace lcf;

namespace {

std::vector<std::string> strs(const std::vector<Poly>& a, size_t from = 0, size_t to = SIZE_MAX) {
  std::vector<std::string> s;
  for (size_t i = from; i < a.size() && i < to; ++i) s.push_back(a[i].str());
  return s;
}

// all polynomials over F_p of degree <= d (including zero)
std::vector<Poly> all_polys(const Field& F, int d) {
  std::uint64_t p = F->size();
  std::uint64_t total = 1;
  for (int i = 0; i <= d; ++i) total *= p;
  std::vector<Poly> out;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<Elem> c;
    std::uint64_t x = k;
    for (int i = 0; i <= d; ++i, x /= p) c.push_back(F->element(x % p));
    out.emplace_back(F, c);
  }
  return out;
}

void check_quasi_period_law(const PeriodResult& pr) {
  const auto& e = pr.expansion;
  const auto& in = pr.info;
  REQUIRE(in.multiplier);
  Elem c = *in.multiplier, ci = c.inv();
  for (size_t k = 0; in.preperiod + in.quasi_period + k < e.size(); ++k)
    CHECK(e.a[in.preperiod + in.quasi_period + k] == e.a[in.preperiod + k] * (k % 2 ? ci : c));
}

}  // namespace

TEST_CASE("normalization and steps") {
  auto Q = make_rationals();
  Poly D = parse_poly(Q, "T^4+T^2+1");
  Surd s0 = surd_normalize(Poly(Q), Poly::constant(Q, 1), Poly::constant(Q, 1), D);
  CHECK(s0.r.is_zero());
  CHECK(s0.s.is_one());
  CHECK(s0.D == D);
  CHECK(!is_reduced(s0));

  Poly delta = sqrt_floor(D);
  CHECK(delta.str() == "T^2+1/2");
  Surd s1 = surd_cf_step(s0, surd_floor(s0, delta));
  // alpha_1 = 4/3 (sqrt D + T^2 + 1/2)
  Quad v = s1.value();
  Quad want = (Quad::sqrt_of(D) + parse_poly(Q, "T^2+1/2")) * Quad::rational(Poly::constant(Q, 4), Poly::constant(Q, 3));
  CHECK(v == want);
  CHECK(is_reduced(s1));

  Surd a1 = surd_normalize(delta, Poly::constant(Q, 1), D - delta * delta, D);
  CHECK((a1.D - a1.r * a1.r).exact_div(a1.s) * a1.s == a1.D - a1.r * a1.r);
  CHECK(is_reduced(a1));

  Surd big = surd_normalize(Poly::constant(Q, 1), Poly::constant(Q, 2), parse_poly(Q, "T^2+T+1"), parse_poly(Q, "T^6-1"));
  CHECK(big.s.divides(big.r * big.r - big.D));
  auto direct = laurent_div_poly(
      laurent_add(laurent_scale(laurent_sqrt(parse_poly(Q, "T^6-1")), Q->from_int(2)), laurent_from_poly(Poly::constant(Q, 1))),
      parse_poly(Q, "T^2+T+1"));
  CHECK(prefix_equal(laurent_from_quad(big.value()), direct, 30));

  Surd wide{Poly(Q), parse_poly(Q, "T^3"), D};
  CHECK(!is_reduced(wide));

  CHECK_THROWS_AS(surd_normalize(Poly(Q), Poly::constant(Q, 1), Poly::constant(Q, 1), parse_poly(Q, "T^3+1")), Error);
  CHECK_THROWS_AS(surd_normalize(Poly(Q), Poly::constant(Q, 1), Poly::constant(Q, 1), parse_poly(Q, "2T^2+1")), Error);
  CHECK_THROWS_AS(surd_normalize(Poly(Q), Poly::constant(Q, 1), Poly::constant(Q, 1), parse_poly(Q, "T^2+2T+1")), Error);
  CHECK_THROWS_AS(check_radicand(parse_poly(make_prime_field(2), "T^2+T+1")), Error);
}

TEST_CASE("period and Pell solution of T^8+T^4") {
  auto Q = make_rationals();
  Poly D = parse_poly(Q, "T^8+T^4");
  PeriodResult pr = detect_periodicity_sqrt(D, 50);
  CHECK(pr.info.status == PeriodStatus::periodic);
  CHECK(pr.info.preperiod == 1);
  CHECK(pr.info.period == 2);
  CHECK(strs(pr.expansion.a, 0, 5) ==
        std::vector<std::string>{"T^4+1/2", "-8*T^4-4", "2*T^4+1", "-8*T^4-4", "2*T^4+1"});
  check_quasi_period_law(pr);
  for (const auto& st : pr.expansion.states) CHECK(st.s.divides(st.D - st.r * st.r));

  PellResult pell = pell_solve(D, 50);
  REQUIRE(pell.solution);
  CHECK(pell.solution->x == parse_poly(Q, "2T^4+1"));
  CHECK(pell.solution->y == Poly::constant(Q, 2));
  CHECK(pell.solution->unit.is_one());
}

TEST_CASE("period of sqrt(T^6-1)/(T^2-1)") {
  auto Q = make_rationals();
  Surd st = surd_normalize(Poly(Q), Poly::constant(Q, 1), parse_poly(Q, "T^2-1"), parse_poly(Q, "T^6-1"));
  PeriodResult pr = detect_periodicity(st, 100);
  CHECK(pr.info.status == PeriodStatus::periodic);
  CHECK(pr.info.preperiod == 1);
  CHECK(pr.info.period == 6);
  CHECK(strs(pr.expansion.a, 0, 13) == std::vector<std::string>{"T", "T", "-T", "-2*T", "-T", "T", "2*T", "T", "-T",
                                                                 "-2*T", "-T", "T", "2*T"});
  check_quasi_period_law(pr);
}

TEST_CASE("complete quotients of sqrt D and the Pell values") {
  auto Q = make_rationals();
  auto F5 = make_prime_field(5);
  for (auto [F, text] : std::vector<std::pair<Field, const char*>>{{Q, "T^8+T^4"},
                                                                   {Q, "T^4+T+1"},
                                                                   {Q, "T^6+T+1"},
                                                                   {Q, "T^2+1"},
                                                                   {F5, "T^4+T+1"},
                                                                   {F5, "T^6+2T^3+T+4"}}) {
    Poly D = parse_poly(F, text);
    Expansion e = surd_expand(Surd{Poly(F), Poly::constant(F, 1), D}, 25);
    int d = D.deg() / 2;
    size_t N = e.size();
    bool reduced = false;
    for (size_t n = 0; n + 1 < N; ++n) {
      Poly v = e.p[n] * e.p[n] - D * e.q[n] * e.q[n];
      CHECK(e.states[n + 1].s == v * F->from_int(n % 2 ? 1 : -1));
      bool r = is_reduced(e.states[n]);
      if (reduced) CHECK(r);
      reduced = reduced || r;
      if (reduced) {
        CHECK(e.a[n].deg() > 0);
        CHECK(e.a[n].deg() <= d);
        CHECK(e.states[n].s.deg() >= 0);
        CHECK(e.states[n].s.deg() < d);
      }
    }
    CHECK(reduced);
  }
}

TEST_CASE("non-Pellian T^4+T+1 within the budget") {
  auto Q = make_rationals();
  Poly D = parse_poly(Q, "T^4+T+1");
  PellResult r = pell_solve(D, 200);
  CHECK(!r.solution);
  CHECK(r.info.status == PeriodStatus::none_found);
  CHECK(r.info.budget == 200);
}

TEST_CASE("Pell equation over a finite field") {
  auto F5 = make_prime_field(5);
  Poly D = parse_poly(F5, "T^2+4");
  PellResult r = pell_solve(D, 100);
  REQUIRE(r.solution);
  Poly v = r.solution->x * r.solution->x - D * r.solution->y * r.solution->y;
  CHECK(v.deg() == 0);
  CHECK(!r.solution->y.is_zero());

  // products of solutions are solutions
  auto Q = make_rationals();
  for (const char* text : {"T^8+T^4", "T^2+1", "T^4+2T^2"}) {
    Poly Dq = parse_poly(Q, text);
    PellResult pq = pell_solve(Dq, 100);
    REQUIRE(pq.solution);
    Poly x = pq.solution->x, y = pq.solution->y;
    Poly X = x, Y = y;
    for (int k = 0; k < 3; ++k) {
      Poly nx = X * x + Dq * Y * y, ny = X * y + Y * x;
      X = nx;
      Y = ny;
      CHECK((X * X - Dq * Y * Y).deg() == 0);
    }
  }
}

TEST_CASE("period bound over F3") {
  auto F3 = make_prime_field(3);
  int count = 0;
  for (int d = 1; d <= 2; ++d) {
    for (const auto& low : all_polys(F3, 2 * d - 1)) {
      Poly D = Poly::monomial(F3, F3->one(), 2 * d) + low;
      if (poly_sqrt_exact(D)) continue;
      PeriodResult pr = detect_periodicity_sqrt(D, 500);
      REQUIRE(pr.info.status == PeriodStatus::periodic);
      long bound = 1;
      for (int i = 0; i < 2 * d - 1; ++i) bound *= 3;
      CHECK(static_cast<long>(pr.info.period) <= bound);
      check_quasi_period_law(pr);
      ++count;
    }
  }
  CHECK(count == 6 + 72);
}

TEST_CASE("quadratic convergents by brute force") {
  auto F3 = make_prime_field(3);
  Poly D = parse_poly(F3, "T^4+T+1");
  Expansion e = surd_expand(Surd{Poly(F3), Poly::constant(F3, 1), D}, 12);
  std::set<std::string> conv;
  for (size_t n = 0; n < e.size(); ++n) {
    if (e.q[n].deg() > 3) break;
    conv.insert(e.p[n].str() + "|" + e.q[n].str());
    conv.insert((-e.p[n]).str() + "|" + (-e.q[n]).str());
    // p/q = -p_n/q_n approximates the other root
    conv.insert((-e.p[n]).str() + "|" + e.q[n].str());
    conv.insert(e.p[n].str() + "|" + (-e.q[n]).str());
  }
  std::set<std::string> found;
  auto qs = all_polys(F3, 3);
  for (const auto& q : qs) {
    if (q.is_zero()) continue;
    for (const auto& p : all_polys(F3, q.deg() + 2)) {
      if (p.deg() != q.deg() + 2) continue;
      if (poly_gcd(p, q).deg() > 0) continue;
      Poly v = p * p - D * q * q;
      if (v.is_zero() || v.deg() <= 1) found.insert(p.str() + "|" + q.str());
    }
  }
  CHECK(found == conv);
}

TEST_CASE("conjugates reverse the period") {
  auto Q = make_rationals();
  auto F5 = make_prime_field(5);
  std::vector<Surd> inputs = {
      surd_normalize(Poly(Q), Poly::constant(Q, 1), parse_poly(Q, "T^2-1"), parse_poly(Q, "T^6-1")),
      Surd{Poly(Q), Poly::constant(Q, 1), parse_poly(Q, "T^8+T^4")},
      Surd{Poly(F5), Poly::constant(F5, 1), parse_poly(F5, "T^4+T+1")},
  };
  for (const auto& s : inputs) {
    PeriodResult pr = detect_periodicity(s, 300);
    REQUIRE(pr.info.status == PeriodStatus::periodic);
    size_t pre = pr.info.preperiod, M = pr.info.period;
    Expansion full = surd_expand(s, static_cast<int>(pre + M + 1));
    Surd st = full.states[pre];
    CHECK(is_reduced(st));
    Expansion c = surd_expand(conjugate(st), static_cast<int>(2 * M + 1));
    CHECK(c.a[0].is_zero());
    for (size_t j = 0; j < 2 * M; ++j) CHECK(c.a[1 + j] == -full.a[pre + (M - 1 - (j % M))]);
    CHECK(conjugate(conjugate(st)) == st);
    RatFn nm = surd_norm(st);
    CHECK(nm.num * st.s * st.s == (st.r * st.r - st.D) * nm.den);
  }
}

TEST_CASE("periods of sqrt D are skew-symmetric") {
  auto Q = make_rationals();
  auto F5 = make_prime_field(5);
  auto F7 = make_prime_field(7);
  std::vector<Poly> Ds = {parse_poly(Q, "T^8+T^4"), parse_poly(Q, "T^2+1"), parse_poly(Q, "T^4+2T^2"),
                          parse_poly(F5, "T^4+T+1"), parse_poly(F7, "T^4+3T+1"), parse_poly(F7, "T^6+T^2+3")};
  for (const auto& D : Ds) {
    PeriodResult pr = detect_periodicity_sqrt(D, 3000);
    REQUIRE(pr.info.multiplier);
    CHECK(pr.info.preperiod == 1);
    const auto& a = pr.expansion.a;
    size_t m = pr.info.quasi_period;
    Elem c = pr.info.multiplier->inv();
    // a_m = 2 c a_0 and a_1..a_{m-1} reversed is a rescaling of itself
    CHECK(a[m] == a[0] * (c + c));
    if (m >= 2) {
      Elem k = a[m - 1].lead() / a[1].lead();
      for (size_t j = 1; j < m; ++j) CHECK(a[m - j] == a[j] * (j % 2 ? k : k.inv()));
    }
  }
}

TEST_CASE("torsion orders and Pellianity") {
  auto Q = make_rationals();
  Poly D = parse_poly(Q, "T^4+T+1");
  CHECK(torsion_order(parse_poly(make_prime_field(3), "T^4+T+1"), 100) == 7);
  CHECK(torsion_order(parse_poly(make_prime_field(5), "T^4+T+1"), 200) == 9);

  CHECK(compatible_order(3, 7, 5, 9) == std::nullopt);
  CHECK(compatible_order(17, 25, 19, 25) == mpz_class(25));
  CHECK(compatible_order(3, 2, 5, 6) == mpz_class(6));

  PellianityReport a = pellianity_decide(D, {3, 5}, 1000);
  CHECK(a.verdict == Pellianity::non_pellian);
  REQUIRE(a.incompatible);
  CHECK(a.incompatible->first == 3);
  CHECK(a.incompatible->second == 5);
  CHECK(a.primes[0].torsion_order == 7u);
  CHECK(a.primes[1].torsion_order == 9u);

  PellianityReport b = pellianity_decide(D, {17, 19}, 1000);
  CHECK(b.verdict == Pellianity::non_pellian);
  CHECK(!b.incompatible);
  CHECK(b.common_order == 25u);
  CHECK(b.bounded_steps <= 25);
  CHECK(b.primes[0].torsion_order == 25u);
  CHECK(b.primes[1].torsion_order == 25u);

  PellianityReport c = pellianity_decide(parse_poly(Q, "T^2+1"), {3, 5}, 1000);
  CHECK(c.verdict == Pellianity::pellian);
  REQUIRE(c.solution);
  CHECK((c.solution->x * c.solution->x - parse_poly(Q, "T^2+1") * c.solution->y * c.solution->y).deg() == 0);

  PellianityReport bad = pellianity_decide(D, {2, 3, 5}, 1000);
  CHECK(!bad.primes[0].good);
  CHECK(bad.verdict == Pellianity::non_pellian);

  CHECK_THROWS_AS(pellianity_decide(parse_poly(Q, "(T^2+1)^2*(T^2+2)"), {3, 5}, 100), Error);
  CHECK_THROWS_AS(pellianity_decide(D, {2}, 100), Error);
}
