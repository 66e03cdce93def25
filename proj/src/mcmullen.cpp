#include "lcf/mcmullen.hpp"

#include <thread>

namespace lcf {

namespace {

Poly one(const Field& F) { return Poly::constant(F, 1); }

Poly lift_poly(const Poly& f, const Field& E) {
  std::vector<Elem> c;
  for (const auto& x : f.coeffs()) c.push_back(E->from_rational(x.to_rational()));
  return Poly(E, c);
}

Expansion expand_value(const Quad& x, int budget) {
  if (x.is_rational()) return cf_expand_rational(x.a(), x.c(), budget);
  return surd_expand(surd_from_quad(x), budget, false);
}

// first n with p_n(lambda) + a q_n(lambda) = 0, via the scalar recurrences
std::optional<size_t> first_vanishing(const std::vector<Poly>& quotients, const Elem& lambda, const Elem& a,
                                      bool denominators_only) {
  const Field& F = quotients.front().field();
  Elem p2 = F->zero(), p1 = F->one(), q2 = F->one(), q1 = F->zero();
  for (size_t n = 0; n < quotients.size(); ++n) {
    Elem v = quotients[n].eval(lambda);
    Elem p = v * p1 + p2, q = v * q1 + q2;
    Elem test = denominators_only ? q : p + a * q;
    if (test.is_zero()) return n;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  return std::nullopt;
}

std::vector<Poly> concat(std::initializer_list<std::vector<Poly>> parts) {
  std::vector<Poly> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Poly> reversed(std::vector<Poly> w) {
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<Poly> repeat(const std::vector<Poly>& w, unsigned n) {
  std::vector<Poly> out;
  for (unsigned i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

// scan depth of agreement between x and a rational approximation
int closeness(const Quad& x, const RatFn& r) {
  auto diff = laurent_sub(laurent_from_quad(x), laurent_from_rational(r.num, r.den));
  auto d = diff.degree(256);
  return d ? *d : INT_MIN;
}

}  // namespace

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Mat2 mat_transpose(const Mat2& x) { return {x[0], x[2], x[1], x[3]}; }

Mat2 mat_identity(const Field& F) { return {one(F), Poly(F), Poly(F), one(F)}; }

Mat2 mat_pow(const Mat2& x, unsigned n) {
  Mat2 r = mat_identity(x[0].field()), b = x;
  while (n) {
    if (n & 1) r = mat_mul(r, b);
    b = mat_mul(b, b);
    n >>= 1;
  }
  return r;
}

Poly mat_trace(const Mat2& x) { return x[0] + x[3]; }
Poly mat_det(const Mat2& x) { return x[0] * x[3] - x[1] * x[2]; }
Poly mat_discriminant(const Mat2& x) {
  Poly t = mat_trace(x);
  return t * t - mat_det(x) * x[0].field()->from_int(4);
}

Mat2 word_matrix(const Field& F, const std::vector<Poly>& word) {
  Mat2 r = mat_identity(F);
  for (const auto& a : word) r = mat_mul(r, {a, one(F), one(F), Poly(F)});
  return r;
}

MercatLift mercat_lift(const Poly& D, const Poly& X, const Poly& Y0, const Poly& Z, int budget) {
  const Field& F = D.field();
  if (F->characteristic() == 2) throw Error("characteristic 2 is not supported");
  check_radicand(D);
  MercatLift m;
  m.D = D;
  m.X = X;
  m.Y = Y0;
  m.Z = Z;
  Poly tp = X * X - D * Y0 * Y0;
  if (tp.deg() != 0 || !(tp.lead().is_one() || (-tp.lead()).is_one()))
    throw Error("(X, Y) is not a Pell solution with X^2 - D Y^2 = +-1");
  m.t = tp.lead();
  auto deg_of = [&](const Poly& y) { return laurent_from_quad(Quad(X, y, one(F), D)).degree(); };
  auto dg = deg_of(m.Y);
  if (!dg || *dg <= 0) {
    m.Y = -m.Y;
    m.y_flipped = true;
  }
  if (Z.is_zero() || Z.deg() >= X.deg()) throw Error("need 0 <= deg Z < deg X");
  if (poly_gcd(Z, X).deg() > 0) throw Error("Z is not coprime to X");

  Expansion e = cf_expand_rational(Z, X);
  m.a.assign(e.a.begin() + 1, e.a.end());
  size_t n = m.a.size();
  auto kq = poly_divrem(e.q.back(), X);
  if (!kq.r.is_zero() || kq.q.deg() != 0) throw Error("continuant is not a constant multiple of X");
  m.k = kq.q.lead();
  if (e.p.back() != Z * m.k) throw Error("continuant normalization mismatch for Z");
  m.K_ZX = k_profile(e).K;

  Elem two = F->from_int(2);
  Elem mid = two * m.t / m.k;
  if (n % 2 == 0) mid = -mid;  // (-1)^(n+1)
  m.word.push_back(Poly::constant(F, two / m.k));
  for (const auto& a : m.a) m.word.push_back(-a);
  m.word.push_back(Poly::constant(F, mid));
  for (size_t i = n; i-- > 0;) m.word.push_back(m.a[i]);

  Poly kX = X * m.k;
  m.value = Quad(X - Z * m.k, m.Y, kX, D);
  Poly tt = Poly::constant(F, m.t);
  m.mu = Quad(one(F) - tt * X * X * two, -(tt * X * m.Y * two), one(F), D);
  Mat2 M = word_matrix(F, m.word);
  Quad v0 = m.value * M[0] + M[1], v1 = m.value * M[2] + M[3];
  m.eigen_ok = v1 == m.mu && v0 == m.mu * m.value;

  m.regular = expand_value(m.value, budget);
  m.K_regular = k_profile(m.regular).K;
  m.K_bound_ok = m.K_regular <= m.K_ZX;
  return m;
}

MercatFamily mercat_family(const Field& F, const std::vector<Poly>& word, unsigned n_max) {
  if (F->characteristic() == 2) throw Error("characteristic 2 is not supported");
  if (word.empty()) throw Error("empty word");
  if (word.size() == 2) throw Error("words of length 2 are not supported");
  for (size_t i = 1, j = word.size() - 1; i < j; ++i, --j)
    if (word[i] != word[j]) throw Error("word is not quasi-palindromic");
  MercatFamily fam;
  fam.base = word;
  const Poly& a0 = word[0];
  Poly h = a0 * F->from_int(2).inv();
  Poly o = one(F);
  fam.A = word_matrix(F, word);
  if (word.size() == 1) {
    fam.branch = "single";
    fam.b_word = {h, o, o, h - o};
    fam.c_word = {a0, o, o, a0 - o};
    fam.H = {a0 * a0, a0 * F->from_int(2), a0, Poly::constant(F, F->from_int(2))};
  } else {
    const Poly& a1 = word[1];
    std::vector<Poly> N(word.begin() + 2, word.end() - 1);
    bool det_minus = N.size() % 2 == 1;
    if (det_minus) {
      fam.branch = "detN=-1";
      fam.b_word = concat({{a1}, N, {a1, o, o, a1 - o}, N, {a1}});
      fam.c_word = concat({word, {h, o, o, h - o}, reversed(word)});
      Mat2 mid = {Poly(F), a0, Poly(F), Poly::constant(F, F->from_int(2))};
      fam.H = mat_mul(mat_mul(fam.A, mid), fam.A);
    } else {
      fam.branch = "detN=1";
      fam.b_word = concat({{a1}, N, {a1}, {h, o, o, h - o}, {a1}, N, {a1}});
      fam.c_word = concat({{a0, a1}, N, {a1, o, o, a1 - o}, N, {a1, a0}});
      Mat2 mid = {Poly::constant(F, F->from_int(2)), -a0, Poly(F), Poly(F)};
      fam.H = mat_mul(mat_mul(fam.A, mid), fam.A);
    }
  }
  fam.B = word_matrix(F, fam.b_word);
  fam.C = word_matrix(F, fam.c_word);
  Poly dA = mat_discriminant(fam.A);

  fam.members.resize(n_max + 1);
  std::vector<std::string> errors(n_max + 1);
  auto build = [&](unsigned n) {
    try {
      FamilyMember& mem = fam.members[n];
      mem.n = n;
      mem.word = concat({fam.b_word, repeat(word, n), fam.c_word, repeat(reversed(word), n)});
      mem.P = word_matrix(F, mem.word);
      Mat2 An = mat_pow(fam.A, n);
      Poly th = mat_trace(mat_mul(fam.H, An));
      mem.trace_ok = mat_trace(mem.P) == th * th - mat_det(An) * F->from_int(2);
      Poly dP = mat_discriminant(mem.P);
      auto qr = poly_divrem(dP, dA);
      std::optional<Poly> S;
      if (qr.r.is_zero()) S = poly_sqrt_exact(qr.q);
      mem.discriminant_ok = S.has_value();
      if (!S) throw Error("discriminant is not a square multiple of discr(A)");
      const Mat2& P = mem.P;
      if (P[2].is_zero()) throw Error("degenerate period matrix");
      Quad plus(P[0] - P[3], *S, P[2] * F->from_int(2), dA), minus(P[0] - P[3], -*S, P[2] * F->from_int(2), dA);
      RatFn approx = cf_value(F, repeat(mem.word, 3));
      mem.value = closeness(plus, approx) <= closeness(minus, approx) ? plus : minus;
      Expansion reg = normalize_to_regular(F, mem.word);
      mem.K_word = k_profile(reg).K;
    } catch (const Error& e) {
      errors[n] = e.what();
    }
  };
  std::vector<std::thread> th;
  for (unsigned n = 0; n <= n_max; ++n) th.emplace_back(build, n);
  for (auto& t : th) t.join();
  for (const auto& e : errors)
    if (!e.empty()) throw Error(e);
  return fam;
}

PipelineResult sqrt_multiplier_pipeline(const Poly& D, const std::vector<Elem>& supply, int budget) {
  const Field& F = D.field();
  if (F->characteristic() != 0)
    throw Error("refused over a finite field: sqrt D is periodic with quotients of degree d infinitely often");
  check_radicand(D);
  PipelineResult res;
  res.D = D;
  res.product = one(F);
  int d = D.deg() / 2;
  res.expansion = surd_expand(Surd{Poly(F), one(F), D}, budget, false);
  res.profile = k_profile(res.expansion);
  while (res.profile.K > 1 && static_cast<int>(res.lambdas.size()) < d - 1) {
    std::optional<Elem> pick;
    for (const auto& lam : supply)
      if (!first_vanishing(res.expansion.a, lam, F->zero(), true)) {
        pick = lam;
        break;
      }
    if (!pick) throw Error("lambda supply exhausted: every candidate is a root of some q_n on the window");
    PipelineStep st;
    st.lambda = *pick;
    st.avoided = true;
    st.K_before = res.profile.K;
    res.product *= Poly::linear_root(F, *pick);
    res.lambdas.push_back(*pick);
    res.expansion = surd_expand(Surd{Poly(F), one(F), res.product * res.product * D}, budget, false);
    res.profile = k_profile(res.expansion);
    st.K_after = res.profile.K;
    res.steps.push_back(st);
  }
  res.reached_one = res.profile.K <= 1;
  if (!res.reached_one) res.reason = "K is still above 1 after d - 1 factors";
  return res;
}

ShiftResult divide_shift(const Quad& alpha, const Elem& a, const Elem& lambda, int budget) {
  const Field& F = alpha.field();
  ShiftResult r;
  r.before = expand_value(alpha, budget);
  r.avoided = !first_vanishing(r.before.a, lambda, a, false);
  Poly lin = Poly::linear_root(F, lambda);
  r.value = (alpha + Poly::constant(F, a)) / Quad::rational(lin, one(F));
  r.after = expand_value(r.value, budget);
  r.K_before = k_profile(r.before).K;
  r.K_after = k_profile(r.after).K;
  r.K_relation = r.avoided && r.K_after == std::max(r.K_before - 1, 1);
  return r;
}

EisensteinResult eisenstein_lambda(const Poly& D, std::uint64_t pi, int r, int budget) {
  const Field& Q = D.field();
  if (Q->kind() != FieldKind::rationals) throw Error("Eisenstein choice needs D over Q");
  check_radicand(D);
  int d = D.deg() / 2;
  if (r < d) throw Error("r must be at least deg D / 2 = " + std::to_string(d));
  mpz_class pz(static_cast<unsigned long>(pi));
  if (pi == 2 || mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0) throw Error("pi must be an odd prime");
  if (padic_valuation(D.lead().to_rational(), pi) != 0) throw Error("leading coefficient of D is not a unit modulo pi");
  if (poly_valuation(D, pi) < 0) throw Error("D is not integral at pi");
  Field Fp = make_prime_field(pi);
  Poly Dp = reduce_poly(D, Fp);
  if (poly_sqrt_exact(Dp)) throw Error("reduction of D modulo pi is a square");

  EisensteinResult res;
  res.extension = field_make("Q[x]/(" + std::to_string(pi) + "x^" + std::to_string(r) + "-1)");
  res.lambda = res.extension->generator();
  res.window = budget;
  Expansion e = surd_expand(Surd{Poly(Q), one(Q), D}, budget, false);
  std::vector<Poly> lifted;
  for (const auto& a : e.a) lifted.push_back(lift_poly(a, res.extension));
  auto hit = first_vanishing(lifted, res.lambda, res.extension->zero(), true);
  res.nonvanishing = !hit;
  if (hit) res.first_vanishing = *hit;
  const Field& E = res.extension;
  Poly lin = Poly::linear_root(E, res.lambda);
  res.expansion = surd_expand(Surd{Poly(E), one(E), lin * lin * lift_poly(D, E)}, budget, false);
  res.profile = k_profile(res.expansion);
  return res;
}

}  // namespace lcf
