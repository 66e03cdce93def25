#pragma once

// Exact coefficient fields (Q, F_p, Q[x]/(m)) and dense univariate
// polynomials over them.

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lcf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldImpl;
using Field = std::shared_ptr<const FieldImpl>;

enum class FieldKind { rationals, prime, extension };

// An element of a field. Holds a raw pointer to its field; the field must
// outlive the element (polynomials keep their field alive).
class Elem {
 public:
  using Rep = std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>>;

  Elem() = default;
  Elem(const FieldImpl* f, Rep r) : f_(f), rep_(std::move(r)) {}

  const FieldImpl* field() const { return f_; }
  const Rep& rep() const { return rep_; }

  bool is_zero() const;
  bool is_one() const;

  Elem operator+(const Elem& b) const;
  Elem operator-(const Elem& b) const;
  Elem operator*(const Elem& b) const;
  Elem operator/(const Elem& b) const;
  Elem operator-() const;
  Elem& operator+=(const Elem& b) { return *this = *this + b; }
  Elem& operator-=(const Elem& b) { return *this = *this - b; }
  Elem& operator*=(const Elem& b) { return *this = *this * b; }
  Elem& operator/=(const Elem& b) { return *this = *this / b; }
  Elem inv() const;
  Elem pow(long e) const;

  bool operator==(const Elem& b) const;
  bool operator!=(const Elem& b) const { return !(*this == b); }

  // Rational value; throws unless the element lies in Q (for extensions,
  // when only the constant coordinate is nonzero).
  mpq_class to_rational() const;
  bool is_rational() const;

  std::string str() const;

 private:
  const FieldImpl* f_ = nullptr;
  Rep rep_;
};

class FieldImpl {
 public:
  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t prime() const { return p_; }
  bool is_finite() const { return kind_ == FieldKind::prime; }
  // number of elements for finite fields, 0 otherwise
  std::uint64_t size() const { return kind_ == FieldKind::prime ? p_ : 0; }
  int ext_degree() const { return static_cast<int>(mod_.size()) - 1; }
  // monic minimal polynomial, little endian
  const std::vector<mpq_class>& modulus() const { return mod_; }
  const std::string& spec() const { return spec_; }
  // "verified" or "trusted-irreducible" for extensions, empty otherwise
  const std::string& irreducibility() const { return irr_; }

  Elem zero() const;
  Elem one() const;
  Elem from_int(long v) const;
  Elem from_mpz(const mpz_class& v) const;
  Elem from_rational(const mpq_class& v) const;  // throws if p | denominator
  Elem generator() const;                       // class of x in Q[x]/(m)
  Elem from_coords(std::vector<mpq_class> c) const;
  // i-th element of a finite field in residue order
  Elem element(std::uint64_t i) const;
  std::uint64_t index_of(const Elem& e) const;

  // canonical square root, or empty when k is not a square (for extension
  // fields: when no root is found, see README)
  std::optional<Elem> sqrt(const Elem& k) const;

  // multiplicative order of c if it is a root of unity of order <= bound
  std::optional<long> root_of_unity_order(const Elem& c, long bound) const;

  // internal arithmetic
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const;
  std::string str(const Elem& a) const;

  bool same(const FieldImpl* o) const;

 private:
  friend Field field_make(const std::string& spec);
  friend Field make_rationals();
  friend Field make_prime_field(std::uint64_t p);
  friend Field make_extension(std::vector<mpq_class> m, const std::string& spec);

  std::vector<mpq_class> reduce_ext(std::vector<mpq_class> v) const;

  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t p_ = 0;
  std::vector<mpq_class> mod_;
  std::string spec_;
  std::string irr_;
};

// "Q", "F<p>", "Q[x]/(<poly in x>)"
Field field_make(const std::string& spec);
Field make_rationals();
Field make_prime_field(std::uint64_t p);

// Dense polynomial in T, little-endian coefficients, no trailing zeros.
class Poly {
 public:
  static constexpr int zero_degree = INT_MIN;

  Poly() = default;
  explicit Poly(Field F) : F_(std::move(F)) {}
  Poly(Field F, std::vector<Elem> c);

  static Poly constant(const Field& F, const Elem& c);
  static Poly constant(const Field& F, long c);
  static Poly monomial(const Field& F, const Elem& c, int deg);
  static Poly T(const Field& F);  // the variable
  static Poly linear_root(const Field& F, const Elem& lambda);  // T - lambda

  const Field& field() const { return F_; }
  const FieldImpl* fp() const { return F_.get(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  int deg() const { return c_.empty() ? zero_degree : static_cast<int>(c_.size()) - 1; }
  Elem coeff(int i) const;
  Elem lead() const;  // zero for the zero polynomial

  Poly operator+(const Poly& b) const;
  Poly operator-(const Poly& b) const;
  Poly operator*(const Poly& b) const;
  Poly operator*(const Elem& c) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  bool operator==(const Poly& b) const;
  bool operator!=(const Poly& b) const { return !(*this == b); }

  Poly monic() const;
  Poly shift(int k) const;  // multiply by T^k, k >= 0
  Poly pow(unsigned e) const;
  Poly derivative() const;
  Poly compose(const Poly& P) const;       // f(P(T))
  Elem eval(const Elem& x) const;          // Horner
  Poly exact_div(const Poly& b) const;     // throws if b does not divide
  bool divides(const Poly& b) const;       // this | b

  std::string str() const;

 private:
  void trim();
  Field F_;
  std::vector<Elem> c_;
};

struct DivRem {
  Poly q, r;
};

DivRem poly_divrem(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic
// extended gcd: g = s*a + t*b with g monic
struct XGcd {
  Poly g, s, t;
};
XGcd poly_xgcd(const Poly& a, const Poly& b);
Elem poly_eval(const Poly& f, const Elem& x);
// square root of a polynomial if it is a perfect square (canonical leading
// coefficient)
std::optional<Poly> poly_sqrt_exact(const Poly& f);
bool poly_squarefree(const Poly& f);

// Rational function parsed from text; den is nonzero. Poly text uses the
// variable T, and x for the generator of an extension field.
struct RatFn {
  Poly num, den;
};
RatFn parse_ratfn(const Field& F, const std::string& text);
Poly parse_poly(const Field& F, const std::string& text);
Elem parse_elem(const Field& F, const std::string& text);

// Quadratic element (a + b*sqrt(D))/c parsed from text that may contain
// sqrt(...) with a single radicand.
struct QuadText {
  Poly a, b, c;
  std::optional<Poly> D;
};
QuadText parse_quadratic(const Field& F, const std::string& text);

}  // namespace lcf
