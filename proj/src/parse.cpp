#include "lcf/algebra.hpp"

#include <cctype>

namespace lcf {

namespace {

// (a + b*sqrt(D))/c
struct QVal {
  Poly a, b, c;
};

class Parser {
 public:
  Parser(Field F, std::string s) : F_(std::move(F)), s_(std::move(s)) {}

  QuadText run() {
    QVal v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    if (v.c.is_zero()) fail("zero denominator");
    return {v.a, v.b, v.c, D_};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse error in \"" + s_ + "\" at " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip();
    return pos_ < s_.size() && s_[pos_] == ch;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char ch = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'T' || ch == 'x' || ch == '(' ||
           s_.compare(pos_, 4, "sqrt") == 0;
  }

  QVal constant(const Elem& e) { return {Poly::constant(F_, e), Poly(F_), Poly::constant(F_, 1)}; }
  QVal from_poly(const Poly& p) { return {p, Poly(F_), Poly::constant(F_, 1)}; }

  QVal normalize(QVal v) {
    if (v.c.is_zero()) fail("division by zero");
    Poly g = poly_gcd(poly_gcd(v.a, v.b), v.c);
    if (g.deg() > 0) {
      v.a = v.a.exact_div(g);
      v.b = v.b.exact_div(g);
      v.c = v.c.exact_div(g);
    }
    return v;
  }

  Poly Dpoly() const { return D_ ? *D_ : Poly(F_); }

  QVal add(const QVal& x, const QVal& y) {
    return normalize({x.a * y.c + y.a * x.c, x.b * y.c + y.b * x.c, x.c * y.c});
  }
  QVal neg(QVal x) {
    x.a = -x.a;
    x.b = -x.b;
    return x;
  }
  QVal mul(const QVal& x, const QVal& y) {
    return normalize({x.a * y.a + x.b * y.b * Dpoly(), x.a * y.b + x.b * y.a, x.c * y.c});
  }
  QVal inv(const QVal& x) {
    Poly n = x.a * x.a - x.b * x.b * Dpoly();
    if (n.is_zero()) fail("division by zero");
    return normalize({x.c * x.a, -(x.c * x.b), n});
  }

  QVal expr() {
    QVal v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v = add(v, term());
      } else if (peek('-')) {
        ++pos_;
        v = add(v, neg(term()));
      } else {
        return v;
      }
    }
  }

  QVal term() {
    QVal v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = mul(v, unary());
      } else if (peek('/')) {
        ++pos_;
        v = mul(v, inv(unary()));
      } else if (starts_primary()) {
        v = mul(v, unary());
      } else {
        return v;
      }
    }
  }

  QVal unary() {
    if (peek('-')) {
      ++pos_;
      return neg(unary());
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  long exponent() {
    skip();
    bool negative = false;
    bool paren = false;
    if (peek('(')) {
      paren = true;
      ++pos_;
    }
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    long e = std::stol(s_.substr(start, pos_ - start));
    if (paren) {
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    }
    return negative ? -e : e;
  }

  QVal power() {
    QVal base = primary();
    if (peek('^')) {
      ++pos_;
      long e = exponent();
      QVal r = from_poly(Poly::constant(F_, 1));
      QVal b = e < 0 ? inv(base) : base;
      for (long i = 0; i < std::labs(e); ++i) r = mul(r, b);
      return r;
    }
    return base;
  }

  QVal primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(F_->from_mpz(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (ch == 'T') {
      ++pos_;
      return from_poly(Poly::T(F_));
    }
    if (ch == 'x') {
      ++pos_;
      if (F_->kind() != FieldKind::extension) fail("'x' is only defined over an extension field");
      return constant(F_->generator());
    }
    if (ch == '(') {
      ++pos_;
      QVal v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (s_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      if (!peek('(')) fail("expected '(' after sqrt");
      ++pos_;
      QVal v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return sqrt_of(v);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  QVal sqrt_of(const QVal& v) {
    if (!v.b.is_zero()) fail("nested square roots are not supported");
    // sqrt(a/c) = sqrt(a*c)/c
    Poly R = v.a * v.c;
    if (auto r = poly_sqrt_exact(R)) return normalize({*r, Poly(F_), v.c});
    if (!D_) {
      D_ = R;
      return normalize({Poly(F_), Poly::constant(F_, 1), v.c});
    }
    // R = k^2 * D for some polynomial k
    auto qr = poly_divrem(R, *D_);
    if (qr.r.is_zero()) {
      if (auto k = poly_sqrt_exact(qr.q)) return normalize({Poly(F_), *k, v.c});
    }
    fail("only one distinct radicand is supported");
  }

  Field F_;
  std::string s_;
  size_t pos_ = 0;
  std::optional<Poly> D_;
};

}  // namespace

QuadText parse_quadratic(const Field& F, const std::string& text) { return Parser(F, text).run(); }

RatFn parse_ratfn(const Field& F, const std::string& text) {
  QuadText q = parse_quadratic(F, text);
  if (!q.b.is_zero()) throw Error("expected a rational function, got a square root: " + text);
  return {q.a, q.c};
}

Poly parse_poly(const Field& F, const std::string& text) {
  RatFn r = parse_ratfn(F, text);
  auto qr = poly_divrem(r.num, r.den);
  if (!qr.r.is_zero()) throw Error("expected a polynomial: " + text);
  return qr.q;
}

Elem parse_elem(const Field& F, const std::string& text) {
  Poly p = parse_poly(F, text);
  if (p.deg() > 0) throw Error("expected a constant: " + text);
  return p.coeff(0);
}

}  // namespace lcf
