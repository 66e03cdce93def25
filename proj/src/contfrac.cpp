#include "lcf/contfrac.hpp"

#include <algorithm>
#include <map>

#include "lcf/surd.hpp"

namespace lcf {

namespace {

Poly one(const Field& F) { return Poly::constant(F, 1); }

void fill_continuants(Expansion& e) {
  const Field& F = e.field;
  e.p.clear();
  e.q.clear();
  Poly p2(F), p1 = one(F), q2 = one(F), q1(F);
  for (const auto& a : e.a) {
    Poly p = a * p1 + p2, q = a * q1 + q2;
    p2 = std::move(p1);
    p1 = p;
    q2 = std::move(q1);
    q1 = q;
    e.p.push_back(std::move(p));
    e.q.push_back(std::move(q));
  }
}

Expansion expand_stream(const LaurentStream& alpha, int budget) {
  Expansion e;
  e.field = alpha.field();
  e.method = "stream";
  LaurentStream cur = alpha;
  for (int n = 0; n < budget; ++n) {
    PolyPart pp = poly_part(cur);
    e.a.push_back(pp.floor);
    if (!pp.frac.degree()) {
      e.terminated = true;
      return e;
    }
    cur = laurent_inverse(pp.frac);
  }
  e.budget_exhausted = true;
  return e;
}

}  // namespace

Poly Expansion::p_monic(size_t n) const { return p[n] * q[n].lead().inv(); }
Poly Expansion::q_monic(size_t n) const { return q[n].monic(); }

Poly Expansion::p_at(long n) const {
  if (n == -1) return one(field);
  if (n == -2) return Poly(field);
  return p.at(static_cast<size_t>(n));
}

Poly Expansion::q_at(long n) const {
  if (n == -1) return Poly(field);
  if (n == -2) return one(field);
  return q.at(static_cast<size_t>(n));
}

Expansion expansion_from_quotients(const Field& F, std::vector<Poly> a, bool terminated, bool budget_exhausted) {
  Expansion e;
  e.field = F;
  e.a = std::move(a);
  e.terminated = terminated;
  e.budget_exhausted = budget_exhausted;
  e.method = "quotients";
  fill_continuants(e);
  return e;
}

Expansion cf_expand_rational(const Poly& A, const Poly& B, int budget) {
  if (B.is_zero()) throw Error("rational function with zero denominator");
  Expansion e;
  e.field = B.field();
  e.method = "euclid";
  Poly x = A, y = B;
  for (int n = 0; n < budget; ++n) {
    auto qr = poly_divrem(x, y);
    e.a.push_back(qr.q);
    if (qr.r.is_zero()) {
      e.terminated = true;
      break;
    }
    x = std::move(y);
    y = std::move(qr.r);
  }
  if (!e.terminated) e.budget_exhausted = true;
  fill_continuants(e);
  return e;
}

Expansion cf_expand(const LaurentStream& alpha, int budget, bool continuants) {
  if (budget < 1) throw Error("expansion budget must be at least 1");
  const auto& ex = alpha.exact();
  if (ex && ex->is_rational()) return cf_expand_rational(ex->a(), ex->c(), budget);
  if (ex && alpha.field()->characteristic() != 2 && !poly_sqrt_exact(ex->D())) {
    return surd_expand(surd_from_quad(*ex), budget, continuants);
  }
  Expansion e = expand_stream(alpha, budget);
  if (continuants) fill_continuants(e);
  return e;
}

KProfile k_profile(const Expansion& e) {
  KProfile k;
  k.count = e.a.empty() ? 0 : static_cast<int>(e.a.size()) - 1;
  if (k.count == 0) return k;
  for (size_t n = 1; n < e.a.size(); ++n) k.K = std::max(k.K, e.a[n].deg());
  k.window = std::min(k.count, std::max(5, k.count / 2));
  for (size_t n = e.a.size() - k.window; n < e.a.size(); ++n) k.ovK = std::max(k.ovK, e.a[n].deg());
  return k;
}

Poly continuant_poly(const Field& F, const std::vector<Poly>& a) {
  Poly c2(F), c1 = one(F);  // C_{-1}, C_0
  for (const auto& x : a) {
    Poly c = x * c1 + c2;
    c2 = std::move(c1);
    c1 = std::move(c);
  }
  return c1;
}

RatFn cf_value(const Field& F, const std::vector<Poly>& a) {
  if (a.empty()) throw Error("empty continued fraction");
  Poly p = continuant_poly(F, a);
  Poly q = continuant_poly(F, std::vector<Poly>(a.begin() + 1, a.end()));
  if (q.is_zero()) throw Error("ill-defined continued fraction (zero denominator)");
  return {p, q};
}

ConvergentCheck is_convergent(const Poly& p, const Poly& q, const LaurentStream& alpha, int scan) {
  if (q.is_zero()) throw Error("convergent test needs q != 0");
  if (poly_gcd(p, q).deg() > 0) throw Error("convergent test needs coprime p, q");
  ConvergentCheck r;
  const auto& ex = alpha.exact();
  if (ex && ex->is_rational()) {
    Poly num = p * ex->c() - ex->a() * q;
    if (num.is_zero()) {
      r.convergent = true;
      return r;
    }
    int ord = ex->c().deg() - num.deg();
    r.convergent = ord > q.deg();
    if (r.convergent) r.next_degree = ord - q.deg();
    return r;
  }
  LaurentStream s = laurent_sub(laurent_from_poly(p), laurent_mul_poly(alpha, q));
  for (int i = s.hi(); i >= -q.deg(); --i)
    if (!s.coeff(i).is_zero()) return r;
  r.convergent = true;
  for (int i = -q.deg() - 1; i >= -q.deg() - scan; --i) {
    if (!s.coeff(i).is_zero()) {
      r.next_degree = -i - q.deg();
      break;
    }
  }
  return r;
}

Expansion normalize_to_regular(const Field& F, std::vector<Poly> a, int max_rewrites) {
  if (a.empty()) throw Error("empty continued fraction");
  int steps = 0;
  for (;;) {
    size_t k = 1;
    while (k < a.size() && a[k].deg() > 0) ++k;
    if (k >= a.size()) break;
    if (++steps > max_rewrites) throw Error("rewrite budget exhausted while normalizing");
    if (a[k].is_zero()) {
      if (k + 1 < a.size()) {
        // [x, 0, y] = [x + y]
        a[k - 1] = a[k - 1] + a[k + 1];
        a.erase(a.begin() + static_cast<long>(k), a.begin() + static_cast<long>(k) + 2);
      } else {
        // [.., w, x, 0] = [.., w]
        if (k < 2) throw Error("ill-defined continued fraction (infinite value)");
        a.erase(a.begin() + static_cast<long>(k) - 1, a.end());
      }
      continue;
    }
    // constant beta: [x, beta, y, ...] = [x + 1/beta, -beta^2 y - beta, scaled tail]
    Elem beta = a[k].lead();
    Elem binv = beta.inv();
    a[k - 1] = a[k - 1] + Poly::constant(F, binv);
    a.erase(a.begin() + static_cast<long>(k));
    if (k < a.size()) {
      Elem c = -(beta * beta);
      a[k] = a[k] * c - Poly::constant(F, beta);
      Elem ci = c.inv();
      for (size_t j = k + 1; j < a.size(); ++j) a[j] = a[j] * (((j - k) % 2 == 1) ? ci : c);
    }
  }
  return expansion_from_quotients(F, std::move(a), true);
}

FoldResult fold(const Poly& a0, const std::vector<Poly>& w, const Poly& a) {
  if (a.is_zero()) throw Error("folding needs a nonzero middle quotient");
  const Field& F = a0.field();
  std::vector<Poly> head = {a0};
  head.insert(head.end(), w.begin(), w.end());
  Poly pn = continuant_poly(F, head);
  Poly qn = continuant_poly(F, w);
  long n = static_cast<long>(w.size());
  Poly sign = Poly::constant(F, n % 2 ? -1 : 1);
  FoldResult r;
  r.num = a * pn * qn + sign;
  r.den = a * qn * qn;
  r.word = head;
  r.word.push_back(a);
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.word.push_back(-*it);
  return r;
}

FoldResult fold_signed(const Poly& a0, const std::vector<Poly>& w, const FoldSigns& s) {
  const Field& F = a0.field();
  const Elem one_e = F->one();
  if (s.e1 * s.e1 != one_e || s.e2 * s.e2 != one_e || s.c * s.c != s.e1 * s.e2)
    throw Error("signed folding needs e1^2 = e2^2 = 1 and c^2 = e1 e2");
  if (w.empty()) throw Error("signed folding needs a nonempty word");
  std::vector<Poly> head = {a0};
  head.insert(head.end(), w.begin(), w.end());
  Poly pn = continuant_poly(F, head);
  Poly qn = continuant_poly(F, w);
  long n = static_cast<long>(w.size());
  Elem sign = n % 2 ? -one_e : one_e;
  FoldResult r;
  r.num = pn * qn * s.e1 + Poly::constant(F, s.c * sign);
  r.den = qn * qn;
  r.word.push_back(a0 * s.e1);
  for (size_t i = 0; i < w.size(); ++i) {
    Poly x = w[i] * s.e1;
    if (i + 1 == w.size()) x = x + Poly::constant(F, s.c);
    r.word.push_back(x);
  }
  for (size_t i = w.size(); i-- > 0;) {
    Poly x = w[i] * s.e2;
    if (i + 1 == w.size()) x = x - Poly::constant(F, s.c * s.c * s.c);
    r.word.push_back(x);
  }
  return r;
}

Expansion transform_add(const Expansion& e, const Poly& a) {
  std::vector<Poly> b = e.a;
  if (b.empty()) throw Error("empty expansion");
  b[0] = b[0] + a;
  return expansion_from_quotients(e.field, b, e.terminated, e.budget_exhausted);
}

Expansion transform_scale(const Expansion& e, const Elem& c) {
  if (c.is_zero()) throw Error("scaling by zero");
  Elem ci = c.inv();
  std::vector<Poly> b;
  for (size_t n = 0; n < e.a.size(); ++n) b.push_back(e.a[n] * (n % 2 ? ci : c));
  return expansion_from_quotients(e.field, b, e.terminated, e.budget_exhausted);
}

Expansion transform_invert(const Expansion& e) {
  if (e.a.empty()) throw Error("empty expansion");
  const Field& F = e.field;
  const Poly& a0 = e.a[0];
  std::vector<Poly> b;
  if (a0.deg() > 0) {
    b.push_back(Poly(F));
    b.insert(b.end(), e.a.begin(), e.a.end());
  } else if (a0.is_zero()) {
    if (e.a.size() == 1) throw Error("inverse of zero");
    b.assign(e.a.begin() + 1, e.a.end());
  } else {
    Elem c = a0.lead();
    Elem c2 = c * c;
    b.push_back(Poly::constant(F, c.inv()));
    for (size_t n = 1; n < e.a.size(); ++n) {
      if (n == 1)
        b.push_back(e.a[1] * (-c2) - a0);
      else
        b.push_back(e.a[n] * (n % 2 ? -c2 : -c2.inv()));
    }
  }
  return expansion_from_quotients(F, b, e.terminated, e.budget_exhausted);
}

Expansion transform_frobenius(const Expansion& e) {
  const Field& F = e.field;
  if (F->kind() != FieldKind::prime) throw Error("Frobenius needs a prime field");
  std::uint64_t l = F->characteristic();
  if (l > 1000) throw Error("Frobenius image degree too large");
  std::vector<Poly> b;
  for (const auto& a : e.a) {
    if (a.is_zero()) {
      b.push_back(a);
      continue;
    }
    std::vector<Elem> c(static_cast<size_t>(a.deg()) * l + 1, F->zero());
    for (int i = 0; i <= a.deg(); ++i) c[static_cast<size_t>(i) * l] = a.coeff(i);
    b.emplace_back(F, c);
  }
  return expansion_from_quotients(F, b, e.terminated, e.budget_exhausted);
}

Expansion transform_substitute(const Expansion& e, const Poly& P) {
  if (P.deg() < 1) throw Error("substitution needs a non-constant polynomial");
  std::vector<Poly> b;
  for (const auto& a : e.a) b.push_back(a.compose(P));
  return expansion_from_quotients(e.field, b, e.terminated, e.budget_exhausted);
}

std::vector<Transferred> mobius_convergent_transfer(const Expansion& e, const Poly& A, const Poly& B) {
  if (A.is_zero() || B.is_zero()) throw Error("transfer needs nonzero A and B");
  if (poly_gcd(A, B).deg() > 0) throw Error("transfer needs coprime A and B");
  if (!e.has_continuants()) throw Error("transfer needs continuants");
  const Field& F = e.field;
  std::vector<Transferred> out;
  bool linear = A.deg() == 1 && B.deg() == 0;
  Elem lambda = F->zero();
  if (linear) lambda = -(A.coeff(0) / A.lead());
  size_t N = e.a.size();
  for (size_t n = 0; n < N; ++n) {
    bool last = e.terminated && n + 1 == N;
    if (!last && n + 1 >= N) continue;
    Poly An = poly_gcd(A, e.q[n]), Bn = poly_gcd(B, e.p[n]);
    int need = A.deg() + B.deg() - 2 * An.deg() - 2 * Bn.deg();
    if (last || e.a[n + 1].deg() > need) {
      Transferred t;
      t.u = A.exact_div(An) * e.p[n].exact_div(Bn);
      t.v = B.exact_div(Bn) * e.q[n].exact_div(An);
      t.n = n;
      t.rule = "general";
      if (linear) t.rule = e.q[n].eval(lambda).is_zero() ? "case3" : "case1";
      if (!last) t.next_degree = e.a[n + 1].deg() - need;
      out.push_back(t);
    }
    if (linear && n + 1 < N) {
      Elem qn = e.q[n].eval(lambda), qn1 = e.q[n + 1].eval(lambda);
      if (!qn.is_zero() && !qn1.is_zero()) {
        Transferred t;
        t.u = e.p[n] * qn1 - e.p[n + 1] * qn;
        t.v = (e.q[n] * qn1 - e.q[n + 1] * qn).exact_div(Poly::linear_root(F, lambda));
        t.n = n;
        t.rule = "case2";
        t.next_degree = 1;
        out.push_back(t);
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Transferred& x, const Transferred& y) { return x.v.deg() < y.v.deg(); });
  return out;
}

std::optional<TailMatch> tail_equivalence(const Expansion& e1, const Expansion& e2, size_t min_overlap) {
  size_t N1 = e1.a.size(), N2 = e2.a.size();
  // candidate pairs ordered by n + m, then n
  for (size_t sum = 0; sum < N1 + N2; ++sum) {
    for (size_t n = 0; n <= sum; ++n) {
      size_t m = sum - n;
      if (n >= N1 || m >= N2) continue;
      size_t len1 = N1 - n, len2 = N2 - m;
      if (e1.terminated && e2.terminated && len1 != len2) continue;
      if (e1.terminated != e2.terminated) continue;
      size_t overlap = std::min(len1, len2);
      if (overlap < min_overlap && !(e1.terminated && e2.terminated)) continue;
      const Poly& x0 = e1.a[n];
      const Poly& y0 = e2.a[m];
      if (x0.deg() != y0.deg() || x0.is_zero()) continue;
      Elem c = x0.lead() / y0.lead();
      Elem ci = c.inv();
      bool ok = true;
      for (size_t j = 0; j < overlap && ok; ++j) ok = (e1.a[n + j] == e2.a[m + j] * (j % 2 ? ci : c));
      if (ok) return TailMatch{n, m, c, overlap};
    }
  }
  return std::nullopt;
}

}  // namespace lcf
