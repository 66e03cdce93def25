#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lcf/zaremba.hpp"

using namespace lcf;

namespace {

std::vector<std::string> strs(const std::vector<Poly>& a) {
  std::vector<std::string> s;
  for (const auto& x : a) s.push_back(x.str());
  return s;
}

std::vector<Poly> polys_below(const Field& F, int d) {
  std::uint64_t p = F->size(), total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  std::vector<Poly> out;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<Elem> c;
    std::uint64_t x = k;
    for (int i = 0; i < d; ++i, x /= p) c.push_back(F->element(x % p));
    out.emplace_back(F, c);
  }
  return out;
}

std::uint64_t slow_count(const Poly& f) {
  std::uint64_t n = 0;
  for (const auto& g : polys_below(f.field(), f.deg()))
    if (is_normal_fraction(g, f)) ++n;
  return n;
}

}  // namespace

TEST_CASE("census counts") {
  Field F3 = make_prime_field(3), F5 = make_prime_field(5), F2 = make_prime_field(2);
  CHECK(orthogonal_multiplicity(parse_poly(F3, "T^3")).multiplicity == 8);
  CHECK(orthogonal_multiplicity(parse_poly(F5, "T^5-T"), 16, 4).multiplicity == 400);
  CHECK(orthogonal_multiplicity(parse_poly(F2, "T^2+T")).multiplicity == 0);
  auto r = orthogonal_multiplicity(parse_poly(F5, "T^5-T"), 1000, 3);
  bool seen = false;
  for (const auto& g : r.witnesses) seen |= g == parse_poly(F5, "T^4+T^3+2T^2-T-2");
  CHECK(seen);
  Expansion e = cf_expand_rational(parse_poly(F5, "T^4+T^3+2T^2-T-2"), parse_poly(F5, "T^5-T"));
  CHECK(strs(e.a) == strs({Poly(F5), parse_poly(F5, "T-1"), parse_poly(F5, "-T+1"), parse_poly(F5, "T-1"),
                           parse_poly(F5, "2T-2"), parse_poly(F5, "2T-2")}));
  CHECK_THROWS_AS(orthogonal_multiplicity(parse_poly(F5, "T^12+1"), 4, 1, 1000000), Error);
}

TEST_CASE("census agrees across methods and worker counts") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    Field F = make_prime_field(p);
    for (int t = 0; t < 6; ++t) {
      int d = 1 + static_cast<int>(rng() % (p <= 3 ? 5 : 3));
      std::vector<Elem> c;
      for (int i = 0; i < d; ++i) c.push_back(F->element(rng() % p));
      c.push_back(F->one());
      Poly f(F, c);
      auto a = orthogonal_multiplicity(f, 5, 1);
      auto b = orthogonal_multiplicity(f, 5, 3);
      auto h = orthogonal_multiplicity(f, 5, 2, 10000000, "hankel");
      std::uint64_t slow = slow_count(f);
      CHECK(a.multiplicity == slow);
      CHECK(b.multiplicity == slow);
      CHECK(h.multiplicity == slow);
      CHECK(strs(a.witnesses) == strs(b.witnesses));
      CHECK(strs(a.witnesses) == strs(h.witnesses));
    }
  }
}

TEST_CASE("census laws") {
  Field F3 = make_prime_field(3), F5 = make_prime_field(5), F2 = make_prime_field(2);
  auto sum = [](const std::vector<std::pair<Poly, std::uint64_t>>& v) {
    std::uint64_t s = 0;
    for (auto& x : v) s += x.second;
    return s;
  };
  CHECK(sum(census_all_monic(F3, 2, 2)) == 36);
  CHECK(sum(census_all_monic(F3, 3, 2)) == 216);
  CHECK(sum(census_all_monic(F5, 2, 2)) == 400);
  std::vector<Poly> irreducible;
  for (int e = 2; e <= 6; ++e)
    for (const auto& low : polys_below(F2, e)) {
      Poly h = low + Poly::monomial(F2, F2->one(), e);
      bool irr = true;
      for (const auto& r : irreducible)
        if (2 * r.deg() <= e && r.divides(h)) irr = false;
      if (h.eval(F2->zero()).is_zero() || h.eval(F2->one()).is_zero()) irr = false;
      if (irr) irreducible.push_back(h);
    }
  for (int d = 1; d <= 6; ++d) {
    for (auto& [f, m] : census_all_monic(F2, d, 4)) {
      unsigned k = 0;
      for (const auto& r : irreducible) k += r.divides(f);
      CHECK((m == 0 || m == (1u << k)));
    }
  }
  for (std::uint64_t q : {3, 5}) {
    Field F = make_prime_field(q);
    for (int d = 1; d <= (q == 3 ? 4 : 2); ++d) {
      mpz_class bound = lauder_bound(q, d);
      for (auto& [f, m] : census_all_monic(F, d, 4)) {
        CHECK(mpz_class(static_cast<unsigned long>(m)) <= bound);
        if (q >= 2 * static_cast<std::uint64_t>(d)) CHECK(m > 0);
      }
    }
  }
  CHECK(lauder_bound(5, 3) == 16 * 5);
}

TEST_CASE("census is invariant under affine substitution") {
  Field F5 = make_prime_field(5);
  Poly f = parse_poly(F5, "T^3+2T+1");
  std::uint64_t m = orthogonal_multiplicity(f).multiplicity;
  for (int a = 1; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      Poly sub = parse_poly(F5, std::to_string(a) + "T+" + std::to_string(b));
      CHECK(orthogonal_multiplicity(f.compose(sub).monic()).multiplicity == m);
    }
}

TEST_CASE("hankel profile") {
  Field F7 = make_prime_field(7);
  Poly f = parse_poly(F7, "T^3+2"), g = parse_poly(F7, "T^2+T");
  Expansion e = cf_expand_rational(g, f);
  CHECK(strs(e.a) == strs({Poly(F7), parse_poly(F7, "T-1"), parse_poly(F7, "T-1"), parse_poly(F7, "4T+1")}));
  CHECK(hankel_profile(laurent_from_rational(g, f), 3) == std::vector<int>{1, 2, 3});
  // non-normal: profile lists exactly the convergent denominator degrees
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<Elem> c;
    for (int i = 0; i < 6; ++i) c.push_back(F7->element(rng() % 7));
    c.push_back(F7->one());
    Poly ff(F7, c);
    std::vector<Elem> gc;
    for (int i = 0; i < 6; ++i) gc.push_back(F7->element(rng() % 7));
    Poly gg(F7, gc);
    if (gg.is_zero()) continue;
    Expansion ex = cf_expand_rational(gg, ff);
    std::vector<int> degs;
    for (size_t n = 1; n < ex.q.size(); ++n)
      if (ex.q[n].deg() >= 1) degs.push_back(ex.q[n].deg());
    CHECK(hankel_profile(laurent_from_rational(gg, ff), 6) == degs);
  }
  std::vector<std::vector<Elem>> m = {{F7->from_int(2), F7->from_int(1)}, {F7->from_int(3), F7->from_int(4)}};
  CHECK(determinant(F7, m) == F7->from_int(5));
}

TEST_CASE("partner construction over an infinite field") {
  Field Q = make_rationals();
  for (const char* fs : {"T^3+2", "T^4-T", "T^5+T^2-3", "T^2"}) {
    Poly f = parse_poly(Q, fs);
    auto r = construct_partner_infinite(f, default_lambda_supply(Q, 20));
    REQUIRE(r.found);
    CHECK(is_normal_fraction(r.g, f));
    CHECK(r.lambdas.size() == static_cast<size_t>(f.deg() - 1));
    for (size_t i = 0; i < r.K_steps.size(); ++i) CHECK(r.K_steps[i] == f.deg() - static_cast<int>(i));
  }
}

TEST_CASE("partner construction over F7") {
  Field F7 = make_prime_field(7);
  Poly f = parse_poly(F7, "T^3+2");
  auto supply = default_lambda_supply(F7, 7);
  auto reach = reachable_partners(f, supply);
  std::set<std::string> names;
  for (const auto& g : reach) {
    CHECK(is_normal_fraction(g, f));
    CHECK(g.lead().is_one());
    names.insert(g.str());
  }
  std::set<std::string> reducible;
  for (const auto& g : polys_below(F7, 3)) {
    if (g.is_zero() || g.deg() != 2 || !g.lead().is_one() || !is_normal_fraction(g, f)) continue;
    for (std::uint64_t x = 0; x < 7; ++x)
      if (g.eval(F7->element(x)).is_zero()) reducible.insert(g.str());
  }
  CHECK(names == reducible);
  CHECK(reach.size() == 21);
  CHECK(names.count(parse_poly(F7, "T^2+T").str()) == 1);
  std::uint64_t monic = 0;
  for (const auto& g : polys_below(F7, 3))
    if (!g.is_zero() && g.lead().is_one() && is_normal_fraction(g, f)) ++monic;
  CHECK(monic == 42);
  auto r = construct_partner_infinite(f, supply);
  CHECK(r.found);
  auto blocked = construct_partner_infinite(f, {F7->zero()});
  CHECK_FALSE(blocked.found);
  CHECK_FALSE(blocked.reason.empty());
}

TEST_CASE("folded partner") {
  for (std::uint64_t p : {3, 5, 7}) {
    Field F = make_prime_field(p);
    for (int d = 1; d <= 16; ++d) {
      auto r = folded_partner(Poly::T(F), d);
      CHECK(r.K == 1);
      CHECK(is_normal_fraction(r.g, r.f));
    }
    CHECK(folded_partner(Poly::T(F) - Poly::constant(F, 1), 5).K == 1);
  }
  Field F3 = make_prime_field(3);
  CHECK(folded_partner(Poly::T(F3), 2).g == parse_poly(F3, "T+1"));
  CHECK_THROWS_AS(folded_partner(parse_poly(F3, "T^2"), 3), Error);
}

TEST_CASE("prefix solving") {
  Field F3 = make_prime_field(3);
  Poly f = parse_poly(F3, "T^5");
  auto sol = friesen_prefix_solve(f, {parse_poly(F3, "T"), parse_poly(F3, "T+1")});
  std::set<std::string> got, want;
  for (const auto& g : sol) got.insert(g.str());
  for (const char* s : {"T^4-T^2+T", "T^4-T^2+T-1", "T^4-T^2+T+1"}) want.insert(parse_poly(F3, s).str());
  CHECK(got == want);
  // brute force on a second case
  Field F5 = make_prime_field(5);
  Poly f5 = parse_poly(F5, "T^4+2T+3");
  std::vector<Poly> pre = {parse_poly(F5, "2T+1")};
  std::set<std::string> brute, solved;
  for (const auto& g : polys_below(F5, 4)) {
    if (g.is_zero()) continue;
    Expansion e = cf_expand_rational(f5, g);
    if (e.a[0] == pre[0]) brute.insert(g.str());
  }
  for (const auto& g : friesen_prefix_solve(f5, pre)) solved.insert(g.str());
  CHECK(brute == solved);
  CHECK_THROWS_AS(friesen_prefix_solve(f, {parse_poly(F3, "T^3")}), Error);
  CHECK_THROWS_AS(friesen_prefix_solve(f, {Poly::constant(F3, 1)}), Error);
}

TEST_CASE("split construction") {
  Field F5 = make_prime_field(5);
  Poly f = parse_poly(F5, "T^4-1");
  std::vector<Elem> roots = {F5->from_int(1), F5->from_int(2), F5->from_int(3), F5->from_int(4)};
  auto r = splits_construct(f, roots, std::vector<Elem>{F5->from_int(1), F5->from_int(1), F5->from_int(-1), F5->from_int(1)});
  REQUIRE(r.found);
  CHECK(r.g == parse_poly(F5, "T^3+3T^2+2"));
  CHECK(strs(r.expansion.a) == strs({Poly(F5), parse_poly(F5, "T+2"), parse_poly(F5, "-T-1"), parse_poly(F5, "3T-1"),
                                     parse_poly(F5, "-T+1")}));
  auto s = splits_construct(f, roots);
  CHECK(s.found);
  CHECK(is_normal_fraction(s.g, f));
  auto z = splits_construct(f, roots, std::vector<Elem>{F5->zero(), F5->one(), F5->one(), F5->one()});
  CHECK_FALSE(z.found);
  CHECK(z.blocking_step == 1);

  Field F3 = make_prime_field(3);
  Poly h = parse_poly(F3, "T^5-T^3");
  auto e = [&](int x) { return F3->from_int(x); };
  auto good = splits_construct(h, {e(-1), e(0), e(1), e(0), e(0)});
  CHECK(good.found);
  CHECK(is_normal_fraction(good.g, h));
  auto bad = splits_construct(h, {e(0), e(0), e(0), e(1), e(-1)});
  CHECK_FALSE(bad.found);
  CHECK(bad.blocking_step >= 1);
  CHECK_THROWS_AS(splits_construct(h, {e(0), e(0), e(0), e(1), e(1)}), Error);
}

TEST_CASE("Baum-Sweet test matches the expansion") {
  Field F2 = make_prime_field(2);
  for (int d = 1; d <= 7; ++d) {
    std::vector<Elem> c(static_cast<size_t>(d), F2->zero());
    for (std::uint64_t k = 0; k < (1u << d); ++k) {
      std::vector<Elem> fc;
      for (int i = 0; i < d; ++i) fc.push_back(F2->element((k >> i) & 1));
      fc.push_back(F2->one());
      Poly f(F2, fc);
      std::uint64_t hits = 0;
      for (const auto& g : polys_below(F2, d)) {
        if (g.is_zero()) continue;
        bool bs = baum_sweet_normal_test(laurent_from_rational(g, f), 2 * d - 1).normal;
        bool ex = is_normal_fraction(g, f);
        CHECK(bs == ex);
        hits += ex;
      }
      CHECK(hits == orthogonal_multiplicity(f).multiplicity);
    }
  }
}
