#include "lcf/quadratic.hpp"

namespace lcf {

Quad::Quad(Poly a, Poly b, Poly c, Poly D) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), D_(std::move(D)) {
  if (c_.is_zero()) throw Error("zero denominator in quadratic element");
  normalize();
}

Quad Quad::rational(const Poly& num, const Poly& den) { return Quad(num, Poly(den.field()), den, Poly(den.field())); }

Quad Quad::from_text(const QuadText& t) {
  const Field& F = t.c.field();
  return Quad(t.a, t.b, t.c, t.D ? *t.D : Poly(F));
}

Quad Quad::sqrt_of(const Poly& D) {
  const Field& F = D.field();
  return Quad(Poly(F), Poly::constant(F, 1), Poly::constant(F, 1), D);
}

void Quad::normalize() {
  if (D_.is_zero()) b_ = Poly(c_.field());
  Poly g = poly_gcd(poly_gcd(a_, b_), c_);
  if (g.deg() > 0) {
    a_ = a_.exact_div(g);
    b_ = b_.exact_div(g);
    c_ = c_.exact_div(g);
  }
  Elem l = c_.lead().inv();
  a_ = a_ * l;
  b_ = b_ * l;
  c_ = c_ * l;
}

Poly Quad::radicand_for(const Quad& o) const {
  if (D_.is_zero()) return o.D_;
  if (o.D_.is_zero() || o.D_ == D_) return D_;
  throw Error("quadratic elements with different radicands");
}

Quad Quad::operator+(const Quad& o) const {
  return Quad(a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_, radicand_for(o));
}

Quad Quad::operator-() const { return Quad(-a_, -b_, c_, D_); }
Quad Quad::operator-(const Quad& o) const { return *this + (-o); }

Quad Quad::operator*(const Quad& o) const {
  Poly D = radicand_for(o);
  return Quad(a_ * o.a_ + b_ * o.b_ * D, a_ * o.b_ + b_ * o.a_, c_ * o.c_, D);
}

Quad Quad::operator*(const Poly& P) const { return Quad(a_ * P, b_ * P, c_, D_); }
Quad Quad::operator+(const Poly& P) const { return Quad(a_ + P * c_, b_, c_, D_); }

Quad Quad::inv() const {
  Poly n = a_ * a_ - b_ * b_ * D_;
  if (n.is_zero()) throw Error("division by zero in quadratic element");
  return Quad(c_ * a_, -(c_ * b_), n, D_);
}

Quad Quad::operator/(const Quad& o) const { return *this * o.inv(); }

Quad Quad::conj() const { return Quad(a_, -b_, c_, D_); }

RatFn Quad::norm() const {
  Poly n = a_ * a_ - b_ * b_ * D_;
  Poly d = c_ * c_;
  Poly g = poly_gcd(n, d);
  return {n.exact_div(g), d.exact_div(g)};
}

bool Quad::operator==(const Quad& o) const {
  if (!(a_ == o.a_ && c_ == o.c_ && b_ == o.b_)) return false;
  return b_.is_zero() || D_ == o.D_;
}

std::string Quad::str() const {
  std::string num;
  if (b_.is_zero()) {
    num = a_.str();
  } else {
    std::string root = "sqrt(" + D_.str() + ")";
    std::string bs = b_.is_one() ? root : (b_ == -Poly::constant(b_.field(), 1) ? "-" + root : "(" + b_.str() + ")*" + root);
    if (a_.is_zero()) {
      num = bs;
    } else {
      num = a_.str() + (bs[0] == '-' ? "" : "+") + bs;
    }
  }
  if (c_.is_one()) return num;
  return "(" + num + ")/(" + c_.str() + ")";
}

}  // namespace lcf
