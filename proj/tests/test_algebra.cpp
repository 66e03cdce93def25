#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lcf/algebra.hpp"

using namespace lcf;

TEST_CASE("field specs") {
  CHECK(field_make("Q")->kind() == FieldKind::rationals);
  auto F7 = field_make("F7");
  CHECK(F7->kind() == FieldKind::prime);
  CHECK(F7->characteristic() == 7);
  auto E = field_make("Q[x]/(5x^4-1)");
  CHECK(E->ext_degree() == 4);
  CHECK(E->irreducibility() == "verified");
  CHECK_THROWS_AS(field_make("F9"), Error);
  CHECK_THROWS_AS(field_make("Q[x]/(3)"), Error);
  CHECK_THROWS_AS(field_make("R"), Error);
  CHECK_THROWS_AS(field_make("Q[x]/(x^2-1)"), Error);
}

TEST_CASE("square roots in fields") {
  auto Q = make_rationals();
  auto r = Q->sqrt(Q->from_rational(mpq_class(9, 4)));
  REQUIRE(r);
  CHECK(r->str() == "3/2");
  CHECK_FALSE(Q->sqrt(Q->from_int(2)));

  auto F7 = make_prime_field(7);
  auto s = F7->sqrt(F7->from_int(2));
  REQUIRE(s);
  CHECK(s->str() == "3");

  // Euler criterion over several primes, brute force oracle
  for (std::uint64_t p : {3, 5, 7, 11, 13, 101}) {
    auto F = make_prime_field(p);
    for (std::uint64_t k = 0; k < p; ++k) {
      Elem e = F->element(k);
      bool square = false;
      for (std::uint64_t y = 0; y < p; ++y)
        if ((y * y) % p == k) square = true;
      auto root = F->sqrt(e);
      CHECK(static_cast<bool>(root) == square);
      if (root) CHECK(*root * *root == e);
    }
  }

  auto E = field_make("Q[x]/(x^2-2)");
  auto t = E->sqrt(E->from_int(8));
  REQUIRE(t);
  CHECK(*t * *t == E->from_int(8));
}

TEST_CASE("extension arithmetic") {
  auto E = field_make("Q[x]/(3x^2-1)");
  Elem x = E->generator();
  CHECK(x * x * E->from_int(3) == E->one());
  Elem y = x + E->from_int(2);
  CHECK(y * y.inv() == E->one());
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  std::vector<Field> fields = {make_rationals(), make_prime_field(5), field_make("Q[x]/(x^3-2)")};
  for (const auto& F : fields) {
    auto rnd = [&]() {
      if (F->kind() == FieldKind::extension) {
        std::vector<mpq_class> c;
        for (int i = 0; i < 3; ++i) c.push_back(mpq_class(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4));
        for (auto& v : c) v.canonicalize();
        return F->from_coords(c);
      }
      mpq_class v(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4);
      v.canonicalize();
      return F->from_rational(v);
    };
    for (int i = 0; i < 200; ++i) {
      Elem a = rnd(), b = rnd(), c = rnd();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inv() == F->one());
    }
  }
}

TEST_CASE("division with remainder") {
  auto Q = make_rationals();
  auto d = poly_divrem(parse_poly(Q, "T^5+1"), parse_poly(Q, "T^4+T^2+1"));
  CHECK(d.q.str() == "T");
  CHECK(d.r.str() == "-T^3-T+1");

  auto F3 = make_prime_field(3);
  auto e = poly_divrem(parse_poly(F3, "T^5"), parse_poly(F3, "T^4-T^2+T"));
  CHECK(e.q == parse_poly(F3, "T"));
  CHECK(e.r == parse_poly(F3, "T^3-T^2"));

  Poly f = parse_poly(Q, "3T^4-2T+7");
  auto g = poly_divrem(f, Poly::constant(Q, 1));
  CHECK(g.q == f);
  CHECK(g.r.is_zero());
  CHECK_THROWS_AS(poly_divrem(f, Poly(Q)), Error);
}

TEST_CASE("gcd and evaluation") {
  auto Q = make_rationals();
  CHECK(poly_gcd(parse_poly(Q, "T^2-1"), parse_poly(Q, "T-1")).str() == "T-1");
  CHECK(poly_gcd(Poly(Q), parse_poly(Q, "2T+4")).str() == "T+2");

  auto F5 = make_prime_field(5);
  CHECK(parse_poly(F5, "T^4-1").eval(F5->from_int(2)).is_zero());
  auto F7 = make_prime_field(7);
  CHECK(parse_poly(F7, "T^3+2").eval(F7->zero()).str() == "2");

  std::mt19937 rng(3);
  for (int it = 0; it < 100; ++it) {
    std::vector<Elem> a, b;
    for (int i = 0; i < 6; ++i) a.push_back(F7->element(rng() % 7));
    for (int i = 0; i < 4; ++i) b.push_back(F7->element(rng() % 7));
    Poly A(F7, a), B(F7, b);
    if (B.is_zero()) continue;
    auto qr = poly_divrem(A, B);
    CHECK(qr.q * B + qr.r == A);
    CHECK(qr.r.deg() < B.deg());
    Poly g = poly_gcd(A, B);
    CHECK(g.divides(A));
    CHECK(g.divides(B));
    if (!g.is_zero()) CHECK(g.lead().is_one());
    auto x = poly_xgcd(A, B);
    CHECK(x.s * A + x.t * B == x.g);
  }
}

TEST_CASE("parser and printer") {
  auto Q = make_rationals();
  CHECK(parse_poly(Q, "8/3*T^2+4/3").str() == "8/3*T^2+4/3");
  CHECK(parse_poly(Q, "4/3 + T^2*8/3").str() == "8/3*T^2+4/3");
  CHECK(parse_poly(Q, "1/3T+1/3").str() == "1/3*T+1/3");
  CHECK(parse_poly(Q, "(T+1)^2").str() == "T^2+2*T+1");
  CHECK(parse_poly(Q, "-T^2").str() == "-T^2");
  auto r = parse_ratfn(Q, "(T^3+T)/(T^2+2T+1)");
  CHECK(r.num.str() == "T^3+T");
  auto F7 = make_prime_field(7);
  CHECK(parse_poly(F7, "T^2-1").str() == "T^2+6");
  auto q = parse_quadratic(Q, "(T^3+T^2+T+2+sqrt(T^6-T^5+T^4-T^3-T^2-1))/(T^2+T+1)");
  REQUIRE(q.D);
  CHECK(q.b.is_one());
  CHECK_THROWS_AS(parse_poly(Q, "T^2+"), Error);
  CHECK_THROWS_AS(parse_poly(Q, "1/T"), Error);
  auto E = field_make("Q[x]/(x^2-2)");
  CHECK(parse_poly(E, "(x+1)*T+x").str() == "(x+1)*T+x");
}

TEST_CASE("exact polynomial square roots") {
  auto Q = make_rationals();
  auto s = poly_sqrt_exact(parse_poly(Q, "(T^2+1)^2"));
  REQUIRE(s);
  CHECK(s->str() == "T^2+1");
  CHECK_FALSE(poly_sqrt_exact(parse_poly(Q, "T^4+T^2+1")));
  CHECK(poly_squarefree(parse_poly(Q, "T^4+T+1")));
  CHECK_FALSE(poly_squarefree(parse_poly(Q, "T^8+T^4")));
}

TEST_CASE("rationals are stored in lowest terms") {
  Field Q = make_rationals();
  Elem a = Q->from_rational(mpq_class(154, 54));
  CHECK(a == Q->from_rational(mpq_class(77, 27)));
  CHECK(a.str() == "77/27");
  CHECK(make_prime_field(5)->from_rational(mpq_class(6, 4)) == make_prime_field(5)->from_int(4));
}
