#include "lcf/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lcf {

namespace {

using QVec = std::vector<mpq_class>;

void qtrim(QVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// remainder of a by b over Q, both little endian, b nonzero
QVec qrem(QVec a, const QVec& b, QVec* quo = nullptr) {
  qtrim(a);
  int db = static_cast<int>(b.size()) - 1;
  if (quo) quo->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    mpq_class c = a.back() / b.back();
    if (quo) (*quo)[da - db] = c;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
    a.pop_back();
    qtrim(a);
  }
  if (quo) qtrim(*quo);
  return a;
}

QVec qmul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QVec qsub(QVec a, const QVec& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

// inverse of a modulo m over Q (m irreducible, a nonzero mod m)
QVec qinvmod(const QVec& a, const QVec& m) {
  QVec r0 = m, r1 = a, s0, s1 = {mpq_class(1)};
  qtrim(r1);
  while (!r1.empty() && r1.size() > 1) {
    QVec q;
    QVec r2 = qrem(r0, r1, &q);
    QVec s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw Error("element is not invertible modulo the minimal polynomial");
  mpq_class c = 1 / r1[0];
  for (auto& x : s1) x *= c;
  return qrem(s1, m);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  // Tonelli-Shanks
  std::uint64_t q = p - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
  if (v < 0) return std::nullopt;
  if (v == 0) return mpq_class(0);
  if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

// integer coefficients of a primitive multiple of m
std::vector<mpz_class> primitive_integer(const QVec& m) {
  mpz_class l = 1;
  for (auto& c : m) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (auto& c : m) z.push_back(mpz_class(c * l));
  mpz_class g = 0;
  for (auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : z) c /= g;
  return z;
}

std::vector<mpz_class> prime_factors(mpz_class n) {
  std::vector<mpz_class> ps;
  if (n < 0) n = -n;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
    if (p > 1000000) break;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> ds;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d * d != n) ds.push_back(n / d);
    }
    if (d > 1000000) break;
  }
  return ds;
}

bool eisenstein(const std::vector<mpz_class>& z) {
  int n = static_cast<int>(z.size()) - 1;
  for (const auto& p : prime_factors(z[0])) {
    if (z[n] % p == 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = (z[i] % p == 0);
    if (ok && z[0] % (p * p) != 0) return true;
  }
  return false;
}

std::vector<mpz_class> taylor_shift(const std::vector<mpz_class>& z, long s) {
  // coefficients of f(x + s)
  std::vector<mpz_class> r(z.size(), 0);
  for (int i = static_cast<int>(z.size()) - 1; i >= 0; --i) {
    // r = r*(x+s) + z[i]
    std::vector<mpz_class> t(z.size(), 0);
    for (size_t k = 0; k + 1 < z.size(); ++k) {
      t[k + 1] += r[k];
      t[k] += r[k] * s;
    }
    t[0] += z[i];
    r = t;
  }
  return r;
}

bool has_rational_root(const std::vector<mpz_class>& z) {
  if (z[0] == 0) return true;
  auto num = divisors(z[0]);
  auto den = divisors(z.back());
  for (auto& a : num)
    for (auto& b : den)
      for (int sgn : {1, -1}) {
        mpq_class r(a * sgn, b);
        r.canonicalize();
        mpq_class v = 0;
        for (int i = static_cast<int>(z.size()) - 1; i >= 0; --i) v = v * r + z[i];
        if (v == 0) return true;
      }
  return false;
}

std::string qvec_str(const QVec& v, const char* var) {
  std::ostringstream os;
  bool first = true;
  int terms = 0;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (v[i] == 0) continue;
    ++terms;
    mpq_class c = v[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

// Elem forwarding

bool Elem::is_zero() const { return f_->is_zero(*this); }
bool Elem::is_one() const { return f_->eq(*this, f_->one()); }
Elem Elem::operator+(const Elem& b) const { return f_->add(*this, b); }
Elem Elem::operator-(const Elem& b) const { return f_->sub(*this, b); }
Elem Elem::operator*(const Elem& b) const { return f_->mul(*this, b); }
Elem Elem::operator/(const Elem& b) const { return f_->mul(*this, f_->inv(b)); }
Elem Elem::operator-() const { return f_->neg(*this); }
Elem Elem::inv() const { return f_->inv(*this); }
bool Elem::operator==(const Elem& b) const { return f_->eq(*this, b); }
std::string Elem::str() const { return f_->str(*this); }

Elem Elem::pow(long e) const {
  Elem base = e < 0 ? inv() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Elem r = f_->one();
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool Elem::is_rational() const {
  switch (f_->kind()) {
    case FieldKind::rationals:
      return true;
    case FieldKind::prime:
      return false;
    case FieldKind::extension: {
      const auto& v = std::get<std::vector<mpq_class>>(rep_);
      for (size_t i = 1; i < v.size(); ++i)
        if (v[i] != 0) return false;
      return true;
    }
  }
  return false;
}

mpq_class Elem::to_rational() const {
  if (!is_rational()) throw Error("element is not rational: " + str());
  if (f_->kind() == FieldKind::rationals) return std::get<mpq_class>(rep_);
  return std::get<std::vector<mpq_class>>(rep_)[0];
}

// FieldImpl

bool FieldImpl::same(const FieldImpl* o) const {
  if (o == this) return true;
  return o && o->kind_ == kind_ && o->p_ == p_ && o->mod_ == mod_;
}

Elem FieldImpl::zero() const { return from_int(0); }
Elem FieldImpl::one() const { return from_int(1); }

Elem FieldImpl::from_int(long v) const { return from_mpz(mpz_class(v)); }

Elem FieldImpl::from_mpz(const mpz_class& v) const {
  switch (kind_) {
    case FieldKind::rationals:
      return Elem(this, mpq_class(v));
    case FieldKind::prime: {
      mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
      if (r < 0) r += static_cast<unsigned long>(p_);
      return Elem(this, static_cast<std::uint64_t>(r.get_ui()));
    }
    case FieldKind::extension: {
      QVec c(ext_degree(), 0);
      c[0] = v;
      return Elem(this, c);
    }
  }
  throw Error("bad field");
}

Elem FieldImpl::from_rational(const mpq_class& v0) const {
  mpq_class v = v0;
  v.canonicalize();
  switch (kind_) {
    case FieldKind::rationals:
      return Elem(this, v);
    case FieldKind::prime: {
      mpz_class pp(static_cast<unsigned long>(p_));
      if (v.get_den() % pp == 0)
        throw Error("denominator of " + v.get_str() + " is divisible by " + std::to_string(p_));
      return mul(from_mpz(v.get_num()), inv(from_mpz(v.get_den())));
    }
    case FieldKind::extension: {
      QVec c(ext_degree(), 0);
      c[0] = v;
      return Elem(this, c);
    }
  }
  throw Error("bad field");
}

Elem FieldImpl::generator() const {
  if (kind_ != FieldKind::extension) throw Error("field has no generator x");
  QVec c(ext_degree(), 0);
  if (ext_degree() == 1) return Elem(this, reduce_ext({0, 1}));
  c[1] = 1;
  return Elem(this, c);
}

Elem FieldImpl::from_coords(std::vector<mpq_class> c) const {
  if (kind_ != FieldKind::extension) throw Error("coordinates only for extension fields");
  return Elem(this, reduce_ext(std::move(c)));
}

Elem FieldImpl::element(std::uint64_t i) const {
  if (kind_ != FieldKind::prime) throw Error("element enumeration needs a finite field");
  return Elem(this, i % p_);
}

std::uint64_t FieldImpl::index_of(const Elem& e) const {
  if (kind_ != FieldKind::prime) throw Error("element index needs a finite field");
  return std::get<std::uint64_t>(e.rep());
}

std::vector<mpq_class> FieldImpl::reduce_ext(std::vector<mpq_class> v) const {
  qtrim(v);
  if (v.size() >= mod_.size()) v = qrem(v, mod_);
  v.resize(ext_degree(), 0);
  return v;
}

Elem FieldImpl::add(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case FieldKind::rationals:
      return Elem(this, mpq_class(std::get<mpq_class>(a.rep()) + std::get<mpq_class>(b.rep())));
    case FieldKind::prime: {
      std::uint64_t r = std::get<std::uint64_t>(a.rep()) + std::get<std::uint64_t>(b.rep());
      return Elem(this, r >= p_ ? r - p_ : r);
    }
    case FieldKind::extension: {
      QVec r = std::get<QVec>(a.rep());
      const auto& y = std::get<QVec>(b.rep());
      for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
      return Elem(this, r);
    }
  }
  throw Error("bad field");
}

Elem FieldImpl::neg(const Elem& a) const {
  switch (kind_) {
    case FieldKind::rationals:
      return Elem(this, mpq_class(-std::get<mpq_class>(a.rep())));
    case FieldKind::prime: {
      std::uint64_t r = std::get<std::uint64_t>(a.rep());
      return Elem(this, r == 0 ? 0 : p_ - r);
    }
    case FieldKind::extension: {
      QVec r = std::get<QVec>(a.rep());
      for (auto& x : r) x = -x;
      return Elem(this, r);
    }
  }
  throw Error("bad field");
}

Elem FieldImpl::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem FieldImpl::mul(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case FieldKind::rationals:
      return Elem(this, mpq_class(std::get<mpq_class>(a.rep()) * std::get<mpq_class>(b.rep())));
    case FieldKind::prime:
      return Elem(this, mulmod(std::get<std::uint64_t>(a.rep()), std::get<std::uint64_t>(b.rep()), p_));
    case FieldKind::extension:
      return Elem(this, reduce_ext(qmul(std::get<QVec>(a.rep()), std::get<QVec>(b.rep()))));
  }
  throw Error("bad field");
}

Elem FieldImpl::inv(const Elem& a) const {
  if (is_zero(a)) throw Error("division by zero in " + spec_);
  switch (kind_) {
    case FieldKind::rationals:
      return Elem(this, mpq_class(1 / std::get<mpq_class>(a.rep())));
    case FieldKind::prime:
      return Elem(this, powmod(std::get<std::uint64_t>(a.rep()), p_ - 2, p_));
    case FieldKind::extension:
      return Elem(this, reduce_ext(qinvmod(std::get<QVec>(a.rep()), mod_)));
  }
  throw Error("bad field");
}

bool FieldImpl::is_zero(const Elem& a) const {
  switch (kind_) {
    case FieldKind::rationals:
      return std::get<mpq_class>(a.rep()) == 0;
    case FieldKind::prime:
      return std::get<std::uint64_t>(a.rep()) == 0;
    case FieldKind::extension:
      for (auto& x : std::get<QVec>(a.rep()))
        if (x != 0) return false;
      return true;
  }
  return false;
}

bool FieldImpl::eq(const Elem& a, const Elem& b) const { return a.rep() == b.rep(); }

std::string FieldImpl::str(const Elem& a) const {
  switch (kind_) {
    case FieldKind::rationals:
      return std::get<mpq_class>(a.rep()).get_str();
    case FieldKind::prime:
      return std::to_string(std::get<std::uint64_t>(a.rep()));
    case FieldKind::extension:
      return qvec_str(std::get<QVec>(a.rep()), "x");
  }
  return "?";
}

std::optional<Elem> FieldImpl::sqrt(const Elem& k) const {
  switch (kind_) {
    case FieldKind::rationals: {
      auto r = rational_sqrt(std::get<mpq_class>(k.rep()));
      if (!r) return std::nullopt;
      return Elem(this, *r);
    }
    case FieldKind::prime: {
      auto r = sqrt_mod(std::get<std::uint64_t>(k.rep()), p_);
      if (!r) return std::nullopt;
      return Elem(this, *r);
    }
    case FieldKind::extension: {
      if (is_zero(k)) return zero();
      const auto& v = std::get<QVec>(k.rep());
      int n = ext_degree();
      // candidates t*x^j with t rational
      for (int j = 0; j < n; ++j) {
        QVec xj(j + 1, 0);
        xj[j] = 1;
        Elem b(this, reduce_ext(xj));
        Elem b2 = mul(b, b);
        const auto& w = std::get<QVec>(b2.rep());
        std::optional<mpq_class> ratio;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          if (w[i] == 0) {
            ok = (v[i] == 0);
          } else {
            mpq_class r = v[i] / w[i];
            if (ratio && *ratio != r) ok = false;
            ratio = r;
          }
        }
        if (!ok || !ratio) continue;
        auto t = rational_sqrt(*ratio);
        if (!t) continue;
        Elem c = mul(b, from_rational(*t));
        // canonical sign: lowest nonzero coordinate positive
        const auto& cv = std::get<QVec>(c.rep());
        for (auto& x : cv) {
          if (x != 0) {
            if (x < 0) c = neg(c);
            break;
          }
        }
        return c;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<long> FieldImpl::root_of_unity_order(const Elem& c, long bound) const {
  Elem x = c;
  for (long j = 1; j <= bound; ++j) {
    if (eq(x, one())) return j;
    x = mul(x, c);
  }
  return std::nullopt;
}

Field make_rationals() {
  auto f = std::make_shared<FieldImpl>();
  f->kind_ = FieldKind::rationals;
  f->p_ = 0;
  f->spec_ = "Q";
  return f;
}

Field make_prime_field(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31)) throw Error("prime modulus out of range: " + std::to_string(p));
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) throw Error("modulus is not prime: " + std::to_string(p));
  auto f = std::make_shared<FieldImpl>();
  f->kind_ = FieldKind::prime;
  f->p_ = p;
  f->spec_ = "F" + std::to_string(p);
  return f;
}

Field make_extension(std::vector<mpq_class> m, const std::string& spec) {
  qtrim(m);
  if (m.size() < 2) throw Error("minimal polynomial must be non-constant: " + spec);
  auto z = primitive_integer(m);
  if (z.size() > 2 && has_rational_root(z)) throw Error("minimal polynomial has a rational root: " + spec);
  std::string irr = "trusted-irreducible";
  if (z.size() <= 4) {
    irr = "verified";  // degree <= 3 without rational roots
  } else {
    std::vector<mpz_class> rz(z.rbegin(), z.rend());
    for (long s : {0L, 1L, -1L, 2L, -2L}) {
      if (eisenstein(taylor_shift(z, s)) || eisenstein(taylor_shift(rz, s))) {
        irr = "verified";
        break;
      }
    }
  }
  mpq_class l = m.back();
  for (auto& c : m) c /= l;
  auto f = std::make_shared<FieldImpl>();
  f->kind_ = FieldKind::extension;
  f->p_ = 0;
  f->mod_ = m;
  f->spec_ = spec;
  f->irr_ = irr;
  return f;
}

Field field_make(const std::string& spec_in) {
  std::string spec;
  for (char ch : spec_in)
    if (!std::isspace(static_cast<unsigned char>(ch))) spec += ch;
  if (spec == "Q") return make_rationals();
  if (spec.size() >= 2 && spec[0] == 'F') {
    std::string digits = spec.substr(spec[1] == '_' ? 2 : 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error("unparseable field spec: " + spec_in);
    if (digits.size() > 12) throw Error("prime modulus out of range: " + digits);
    return make_prime_field(std::stoull(digits));
  }
  const std::string pre = "Q[x]/(";
  if (spec.rfind(pre, 0) == 0 && spec.back() == ')') {
    std::string inner = spec.substr(pre.size(), spec.size() - pre.size() - 1);
    if (inner.find('T') != std::string::npos) throw Error("unparseable field spec: " + spec_in);
    std::string as_t = inner;
    std::replace(as_t.begin(), as_t.end(), 'x', 'T');
    Poly m;
    try {
      m = parse_poly(make_rationals(), as_t);
    } catch (const Error&) {
      throw Error("unparseable field spec: " + spec_in);
    }
    std::vector<mpq_class> mv;
    for (const auto& c : m.coeffs()) mv.push_back(c.to_rational());
    return make_extension(mv, "Q[x]/(" + inner + ")");
  }
  throw Error("unparseable field spec: " + spec_in);
}

}  // namespace lcf
