#pragma once

// Elements (a + b*sqrt(D))/c of K(T, sqrt D) with a fixed radicand D.
// D = 0 stands for the rational case.

#include "lcf/algebra.hpp"

namespace lcf {

class Quad {
 public:
  Quad() = default;
  Quad(Poly a, Poly b, Poly c, Poly D);
  static Quad rational(const Poly& num, const Poly& den);
  static Quad from_text(const QuadText& t);
  static Quad sqrt_of(const Poly& D);

  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  const Poly& c() const { return c_; }
  const Poly& D() const { return D_; }
  const Field& field() const { return c_.field(); }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Quad operator+(const Quad& o) const;
  Quad operator-(const Quad& o) const;
  Quad operator*(const Quad& o) const;
  Quad operator/(const Quad& o) const;
  Quad operator-() const;
  Quad operator*(const Poly& P) const;
  Quad operator+(const Poly& P) const;
  Quad inv() const;
  Quad conj() const;
  // N(x) = (a^2 - b^2 D)/c^2 as a rational function
  RatFn norm() const;
  bool operator==(const Quad& o) const;

  std::string str() const;

 private:
  void normalize();
  Poly radicand_for(const Quad& o) const;
  Poly a_, b_, c_, D_;
};

// complete-quotient state (r + sqrt D)/s with s | r^2 - D
struct Surd {
  Poly r, s, D;
  Quad value() const { return Quad(r, Poly::constant(s.field(), 1), s, D); }
  bool operator==(const Surd& o) const { return r == o.r && s == o.s && D == o.D; }
};

}  // namespace lcf
