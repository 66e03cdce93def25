#include "lcf/laurent.hpp"

#include <sstream>

namespace lcf {

class LaurentStream::Impl {
 public:
  Impl(Field F, int hi) : F_(std::move(F)), hi_(hi) {}
  virtual ~Impl() = default;

  const Field& field() const { return F_; }
  int hi() const { return hi_; }

  Elem coeff(int i) {
    if (i > hi_) return F_->zero();
    size_t k = static_cast<size_t>(hi_ - i);
    while (cache_.size() <= k) cache_.push_back(compute(hi_ - static_cast<int>(cache_.size())));
    return cache_[k];
  }

  virtual std::shared_ptr<Impl> clone() const = 0;

  std::optional<Quad> exact;
  bool perfect_square = false;

 protected:
  // called in order hi, hi-1, ...; higher coefficients are cached
  virtual Elem compute(int i) = 0;
  const Elem& cached(int i) const { return cache_[static_cast<size_t>(hi_ - i)]; }

  Field F_;
  int hi_;

 private:
  std::vector<Elem> cache_;
};

namespace {

using ImplPtr = std::shared_ptr<LaurentStream::Impl>;

class PolyImpl : public LaurentStream::Impl {
 public:
  explicit PolyImpl(Poly f) : Impl(f.field(), f.is_zero() ? 0 : f.deg()), f_(std::move(f)) {}
  ImplPtr clone() const override { return copy_meta(std::make_shared<PolyImpl>(f_)); }

 protected:
  Elem compute(int i) override { return i < 0 ? F_->zero() : f_.coeff(i); }

 private:
  ImplPtr copy_meta(std::shared_ptr<PolyImpl> p) const {
    p->exact = exact;
    p->perfect_square = perfect_square;
    return p;
  }
  Poly f_;
};

// X / B for a stream X and a nonzero polynomial B
class DivPolyImpl : public LaurentStream::Impl {
 public:
  DivPolyImpl(ImplPtr x, Poly B) : Impl(x->field(), x->hi() - B.deg()), x_(std::move(x)), B_(std::move(B)) {
    il_ = B_.lead().inv();
  }
  ImplPtr clone() const override {
    auto p = std::make_shared<DivPolyImpl>(x_->clone(), B_);
    p->exact = exact;
    return p;
  }

 protected:
  Elem compute(int i) override {
    int m = B_.deg();
    Elem acc = x_->coeff(i + m);
    const auto& b = B_.coeffs();
    for (int j = 0; j < m; ++j) {
      int idx = i + m - j;
      if (idx <= hi_ && !b[j].is_zero()) acc -= b[j] * cached(idx);
    }
    return acc * il_;
  }

 private:
  ImplPtr x_;
  Poly B_;
  Elem il_;
};

class SqrtImpl : public LaurentStream::Impl {
 public:
  SqrtImpl(Poly D, Elem lead) : Impl(D.field(), D.deg() / 2), D_(std::move(D)), lead_(std::move(lead)) {
    inv2l_ = (lead_ + lead_).inv();
  }
  ImplPtr clone() const override {
    auto p = std::make_shared<SqrtImpl>(D_, lead_);
    p->exact = exact;
    return p;
  }

 protected:
  Elem compute(int j) override {
    int N = hi_;
    if (j == N) return lead_;
    Elem acc = D_.coeff(j + N);
    for (int k = j + 1; k < N; ++k) acc -= cached(k) * cached(j + N - k);
    return acc * inv2l_;
  }

 private:
  Poly D_;
  Elem lead_, inv2l_;
};

class SumImpl : public LaurentStream::Impl {
 public:
  SumImpl(ImplPtr a, ImplPtr b) : Impl(a->field(), std::max(a->hi(), b->hi())), a_(std::move(a)), b_(std::move(b)) {}
  ImplPtr clone() const override {
    auto p = std::make_shared<SumImpl>(a_->clone(), b_->clone());
    p->exact = exact;
    return p;
  }

 protected:
  Elem compute(int i) override { return a_->coeff(i) + b_->coeff(i); }

 private:
  ImplPtr a_, b_;
};

class ScaleImpl : public LaurentStream::Impl {
 public:
  ScaleImpl(ImplPtr a, Elem c, int shift) : Impl(a->field(), a->hi() + shift), a_(std::move(a)), c_(std::move(c)), shift_(shift) {}
  ImplPtr clone() const override {
    auto p = std::make_shared<ScaleImpl>(a_->clone(), c_, shift_);
    p->exact = exact;
    return p;
  }

 protected:
  Elem compute(int i) override { return a_->coeff(i - shift_) * c_; }

 private:
  ImplPtr a_;
  Elem c_;
  int shift_;
};

class ProductImpl : public LaurentStream::Impl {
 public:
  ProductImpl(ImplPtr a, ImplPtr b) : Impl(a->field(), a->hi() + b->hi()), a_(std::move(a)), b_(std::move(b)) {}
  ImplPtr clone() const override {
    auto p = std::make_shared<ProductImpl>(a_->clone(), b_->clone());
    p->exact = exact;
    return p;
  }

 protected:
  Elem compute(int i) override {
    Elem acc = F_->zero();
    for (int k = a_->hi(); i - k <= b_->hi(); --k) acc += a_->coeff(k) * b_->coeff(i - k);
    return acc;
  }

 private:
  ImplPtr a_, b_;
};

// 1/a where a has leading index N exactly
class InverseImpl : public LaurentStream::Impl {
 public:
  InverseImpl(ImplPtr a, int N) : Impl(a->field(), -N), a_(std::move(a)), N_(N) { il_ = a_->coeff(N_).inv(); }
  ImplPtr clone() const override {
    auto p = std::make_shared<InverseImpl>(a_->clone(), N_);
    p->exact = exact;
    return p;
  }

 protected:
  Elem compute(int i) override {
    // sum_j c_{N-j} d_{i+j} = [i+N == 0]
    Elem acc = (i == -N_) ? F_->one() : F_->zero();
    for (int j = 1; i + j <= hi_; ++j) acc -= a_->coeff(N_ - j) * cached(i + j);
    return acc * il_;
  }

 private:
  ImplPtr a_;
  int N_;
  Elem il_;
};

// the part of a with negative indices
class FracImpl : public LaurentStream::Impl {
 public:
  explicit FracImpl(ImplPtr a) : Impl(a->field(), std::min(a->hi(), -1)), a_(std::move(a)) {}
  ImplPtr clone() const override {
    auto p = std::make_shared<FracImpl>(a_->clone());
    p->exact = exact;
    return p;
  }

 protected:
  Elem compute(int i) override { return a_->coeff(i); }

 private:
  ImplPtr a_;
};

std::optional<Quad> combine(const std::optional<Quad>& a, const std::optional<Quad>& b,
                            const std::function<Quad(const Quad&, const Quad&)>& op) {
  if (!a || !b) return std::nullopt;
  if (!a->D().is_zero() && !b->D().is_zero() && a->D() != b->D()) return std::nullopt;
  return op(*a, *b);
}

}  // namespace

const Field& LaurentStream::field() const { return impl_->field(); }
int LaurentStream::hi() const { return impl_->hi(); }
Elem LaurentStream::coeff(int i) const { return impl_->coeff(i); }
const std::optional<Quad>& LaurentStream::exact() const { return impl_->exact; }
bool LaurentStream::perfect_square() const { return impl_->perfect_square; }
LaurentStream LaurentStream::clone() const { return LaurentStream(impl_->clone()); }

std::optional<int> LaurentStream::degree(int scan) const {
  if (impl_->exact) {
    const Quad& q = *impl_->exact;
    if (q.is_zero()) return std::nullopt;
    if (q.is_rational()) return q.a().deg() - q.c().deg();
  }
  int h = hi();
  for (int i = h; i >= h - scan; --i)
    if (!coeff(i).is_zero()) return i;
  return std::nullopt;
}

std::string LaurentStream::str(int k) const {
  std::ostringstream os;
  auto top = degree();
  if (!top) return "0";
  bool first = true;
  int shown = 0;
  for (int i = *top; shown < k; --i) {
    if (exact() && exact()->is_rational() && exact()->c().is_one() && i < 0) break;
    Elem c = coeff(i);
    ++shown;
    if (c.is_zero()) continue;
    std::string s = c.str();
    if (c.field()->kind() == FieldKind::extension) s = "(" + s + ")";
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << s;
    } else {
      if (s != "1") os << s << "*";
      os << "T";
      if (i != 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  if (!(exact() && exact()->is_rational() && exact()->c().is_one())) os << " + ... (" << k << " terms shown)";
  return os.str();
}

LaurentStream laurent_from_poly(const Poly& f) {
  auto p = std::make_shared<PolyImpl>(f);
  p->exact = Quad::rational(f, Poly::constant(f.field(), 1));
  return LaurentStream(p);
}

LaurentStream laurent_from_rational(const Poly& A, const Poly& B) {
  if (B.is_zero()) throw Error("rational function with zero denominator");
  Quad q = Quad::rational(A, B);
  if (q.a().is_zero()) return laurent_from_poly(q.a());
  if (q.c().is_one()) return laurent_from_poly(q.a());
  auto p = std::make_shared<DivPolyImpl>(std::make_shared<PolyImpl>(q.a()), q.c());
  p->exact = q;
  return LaurentStream(p);
}

LaurentStream laurent_sqrt(const Poly& D) {
  const Field& F = D.field();
  if (F->characteristic() == 2) throw Error("square roots are not supported in characteristic 2");
  if (D.is_zero()) return laurent_from_poly(D);
  if (D.deg() % 2) throw Error("radicand has odd degree: " + D.str());
  auto lc = F->sqrt(D.lead());
  if (!lc) throw Error("leading coefficient of " + D.str() + " is not a square");
  if (auto r = poly_sqrt_exact(D)) {
    Poly root = *r;
    if (root.lead() != *lc) root = -root;
    auto impl = std::make_shared<PolyImpl>(root);
    impl->exact = Quad::rational(root, Poly::constant(F, 1));
    impl->perfect_square = true;
    return LaurentStream(impl);
  }
  auto p = std::make_shared<SqrtImpl>(D, *lc);
  p->exact = Quad::sqrt_of(D);
  return LaurentStream(p);
}

LaurentStream laurent_from_quad(const Quad& x) {
  if (x.is_rational()) return laurent_from_rational(x.a(), x.c());
  LaurentStream r = laurent_sqrt(x.D());
  if (!x.b().is_one()) r = laurent_mul_poly(r, x.b());
  if (!x.a().is_zero()) r = laurent_add(r, laurent_from_poly(x.a()));
  if (!x.c().is_one()) r = laurent_div_poly(r, x.c());
  r.impl()->exact = x;
  return r;
}

LaurentStream laurent_add(const LaurentStream& a, const LaurentStream& b) {
  auto p = std::make_shared<SumImpl>(a.impl(), b.impl());
  p->exact = combine(a.exact(), b.exact(), [](const Quad& x, const Quad& y) { return x + y; });
  return LaurentStream(p);
}

LaurentStream laurent_scale(const LaurentStream& a, const Elem& c) {
  auto p = std::make_shared<ScaleImpl>(a.impl(), c, 0);
  if (a.exact()) p->exact = *a.exact() * Poly::constant(a.field(), c);
  return LaurentStream(p);
}

LaurentStream laurent_neg(const LaurentStream& a) { return laurent_scale(a, -a.field()->one()); }

LaurentStream laurent_sub(const LaurentStream& a, const LaurentStream& b) { return laurent_add(a, laurent_neg(b)); }

LaurentStream laurent_mul(const LaurentStream& a, const LaurentStream& b) {
  auto p = std::make_shared<ProductImpl>(a.impl(), b.impl());
  p->exact = combine(a.exact(), b.exact(), [](const Quad& x, const Quad& y) { return x * y; });
  return LaurentStream(p);
}

LaurentStream laurent_mul_poly(const LaurentStream& a, const Poly& P) {
  if (P.is_zero()) return laurent_from_poly(P);
  if (P.deg() == 0) return laurent_scale(a, P.lead());
  auto p = std::make_shared<ProductImpl>(a.impl(), std::make_shared<PolyImpl>(P));
  if (a.exact()) p->exact = *a.exact() * P;
  return LaurentStream(p);
}

LaurentStream laurent_div_poly(const LaurentStream& a, const Poly& P) {
  if (P.is_zero()) throw Error("division of a series by the zero polynomial");
  if (P.deg() == 0) return laurent_scale(a, P.lead().inv());
  auto p = std::make_shared<DivPolyImpl>(a.impl(), P);
  if (a.exact()) p->exact = *a.exact() * Quad::rational(Poly::constant(P.field(), 1), P);
  return LaurentStream(p);
}

LaurentStream laurent_inverse(const LaurentStream& a) {
  if (a.exact() && a.exact()->is_rational()) {
    const Quad& q = *a.exact();
    if (q.is_zero()) throw Error("inverse of the zero series");
    return laurent_from_rational(q.c(), q.a());
  }
  auto N = a.degree();
  if (!N) throw Error("inverse of a series that vanishes on the scanned window");
  auto p = std::make_shared<InverseImpl>(a.impl(), *N);
  if (a.exact()) p->exact = a.exact()->inv();
  return LaurentStream(p);
}

PolyPart poly_part(const LaurentStream& a) {
  const Field& F = a.field();
  std::vector<Elem> c;
  for (int i = 0; i <= a.hi(); ++i) c.push_back(a.coeff(i));
  Poly fl(F, c);
  if (a.exact() && a.exact()->is_rational()) {
    const Quad& q = *a.exact();
    auto dr = poly_divrem(q.a(), q.c());
    return {dr.q, laurent_from_rational(dr.r, q.c())};
  }
  auto p = std::make_shared<FracImpl>(a.impl());
  if (a.exact()) p->exact = *a.exact() + (-fl);
  return {fl, LaurentStream(p)};
}

bool prefix_equal(const LaurentStream& a, const LaurentStream& b, int count) {
  int h = std::max(a.hi(), b.hi());
  for (int i = h; i > h - count; --i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

}  // namespace lcf
