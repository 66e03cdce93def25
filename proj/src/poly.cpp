#include "lcf/algebra.hpp"

#include <sstream>

namespace lcf {

namespace {

void check_same(const Poly& a, const Poly& b) {
  if (!a.field() || !b.field() || !a.fp()->same(b.fp())) throw Error("polynomials over different fields");
}

bool needs_parens(const Elem& c) {
  if (c.field()->kind() != FieldKind::extension) return false;
  int terms = 0;
  for (const auto& x : std::get<std::vector<mpq_class>>(c.rep()))
    if (x != 0) ++terms;
  return terms > 1;
}

}  // namespace

Poly::Poly(Field F, std::vector<Elem> c) : F_(std::move(F)), c_(std::move(c)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Field& F, const Elem& c) { return Poly(F, {c}); }
Poly Poly::constant(const Field& F, long c) { return Poly(F, {F->from_int(c)}); }

Poly Poly::monomial(const Field& F, const Elem& c, int deg) {
  std::vector<Elem> v(deg + 1, F->zero());
  v[deg] = c;
  return Poly(F, v);
}

Poly Poly::T(const Field& F) { return monomial(F, F->one(), 1); }

Poly Poly::linear_root(const Field& F, const Elem& lambda) { return Poly(F, {-lambda, F->one()}); }

Elem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return F_->zero();
  return c_[i];
}

Elem Poly::lead() const { return c_.empty() ? F_->zero() : c_.back(); }

Poly Poly::operator+(const Poly& b) const {
  check_same(*this, b);
  std::vector<Elem> r = c_.size() >= b.c_.size() ? c_ : b.c_;
  const auto& s = c_.size() >= b.c_.size() ? b.c_ : c_;
  for (size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  return Poly(F_, r);
}

Poly Poly::operator-() const {
  std::vector<Elem> r = c_;
  for (auto& x : r) x = -x;
  return Poly(F_, r);
}

Poly Poly::operator-(const Poly& b) const { return *this + (-b); }

Poly Poly::operator*(const Poly& b) const {
  check_same(*this, b);
  if (is_zero() || b.is_zero()) return Poly(F_);
  std::vector<Elem> r(c_.size() + b.c_.size() - 1, F_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += c_[i] * b.c_[j];
  }
  return Poly(F_, r);
}

Poly Poly::operator*(const Elem& c) const {
  std::vector<Elem> r = c_;
  for (auto& x : r) x *= c;
  return Poly(F_, r);
}

bool Poly::operator==(const Poly& b) const {
  if (c_.size() != b.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != b.c_[i]) return false;
  return true;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

Poly Poly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Elem> r(k, F_->zero());
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(F_, r);
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(F_, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative() const {
  std::vector<Elem> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * F_->from_int(static_cast<long>(i)));
  return Poly(F_, r);
}

Poly Poly::compose(const Poly& P) const {
  Poly r(F_);
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) r = r * P + constant(F_, c_[i]);
  return r;
}

Elem Poly::eval(const Elem& x) const {
  Elem r = F_->zero();
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) r = r * x + c_[i];
  return r;
}

Poly Poly::exact_div(const Poly& b) const {
  auto qr = poly_divrem(*this, b);
  if (!qr.r.is_zero()) throw Error("inexact polynomial division");
  return qr.q;
}

bool Poly::divides(const Poly& b) const { return poly_divrem(b, *this).r.is_zero(); }

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const Elem& c = c_[i];
    if (c.is_zero()) continue;
    std::string s;
    bool neg = false;
    if (needs_parens(c)) {
      s = "(" + c.str() + ")";
    } else {
      s = c.str();
      if (!s.empty() && s[0] == '-') {
        neg = true;
        s = s.substr(1);
      }
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    if (i == 0) {
      os << s;
    } else {
      if (s != "1") os << s << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivRem poly_divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  const Field& F = a.field() ? a.field() : b.field();
  if (a.deg() < b.deg()) return {Poly(F), a};
  std::vector<Elem> r = a.coeffs();
  int db = b.deg();
  std::vector<Elem> q(a.deg() - db + 1, F->zero());
  Elem il = b.lead().inv();
  const auto& bc = b.coeffs();
  for (int i = a.deg(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    Elem c = r[i] * il;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * bc[j];
  }
  r.resize(db);
  return {Poly(F, q), Poly(F, r)};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_divrem(x, y).r;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XGcd poly_xgcd(const Poly& a, const Poly& b) {
  const Field& F = a.field();
  Poly r0 = a, r1 = b, s0 = Poly::constant(F, 1), s1(F), t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto qr = poly_divrem(r0, r1);
    Poly s2 = s0 - qr.q * s1, t2 = t0 - qr.q * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Elem il = r0.lead().inv();
  return {r0 * il, s0 * il, t0 * il};
}

Elem poly_eval(const Poly& f, const Elem& x) { return f.eval(x); }

std::optional<Poly> poly_sqrt_exact(const Poly& f) {
  const Field& F = f.field();
  if (f.is_zero()) return f;
  if (f.deg() % 2) return std::nullopt;
  auto lc = F->sqrt(f.lead());
  if (!lc) return std::nullopt;
  int n = f.deg() / 2;
  // top-down coefficient matching
  std::vector<Elem> s(n + 1, F->zero());
  s[n] = *lc;
  Elem two_lc = *lc + *lc;
  if (two_lc.is_zero()) throw Error("square roots need odd characteristic");
  for (int k = n - 1; k >= 0; --k) {
    // coefficient of T^{n+k} in s^2
    Elem acc = f.coeff(n + k);
    for (int i = k + 1; i < n; ++i) {
      int j = n + k - i;
      if (j > k && j <= n && j != n) acc -= s[i] * s[j];
    }
    s[k] = acc / two_lc;
  }
  Poly r(F, s);
  if (r * r != f) return std::nullopt;
  return r;
}

bool poly_squarefree(const Poly& f) {
  if (f.deg() <= 0) return true;
  Poly d = f.derivative();
  if (d.is_zero()) return false;
  return poly_gcd(f, d).deg() == 0;
}

}  // namespace lcf
