#include "lcf/surd.hpp"

#include <unordered_map>

namespace lcf {

namespace {

Poly one(const Field& F) { return Poly::constant(F, 1); }

// canonical sqrt D against lead(k) * sqrt(D0): true when they differ in sign
bool root_flipped(const Poly& k, const Poly& D0, const Poly& D) {
  const Field& F = D.field();
  auto c0 = F->sqrt(D0.lead());
  auto c = F->sqrt(D.lead());
  if (!c0 || !c) throw Error("radicand leading coefficient is not a square");
  return k.lead() * *c0 != *c;
}

size_t elem_hash(const Elem& x) {
  const auto& r = x.rep();
  if (auto u = std::get_if<std::uint64_t>(&r)) return std::hash<std::uint64_t>()(*u);
  auto hq = [](const mpq_class& q) {
    return mpz_get_ui(q.get_num_mpz_t()) * 31 + mpz_get_ui(q.get_den_mpz_t()) + (mpq_sgn(q.get_mpq_t()) < 0);
  };
  if (auto q = std::get_if<mpq_class>(&r)) return hq(*q);
  size_t h = 0;
  for (const auto& q : std::get<std::vector<mpq_class>>(r)) h = h * 1000003 + hq(q);
  return h;
}

size_t poly_hash(const Poly& f) {
  size_t h = static_cast<size_t>(f.deg());
  for (const auto& c : f.coeffs()) h = h * 1000003 + elem_hash(c);
  return h;
}

struct StateKey {
  Poly r, s;
  bool operator==(const StateKey& o) const { return r == o.r && s == o.s; }
};
struct StateKeyHash {
  size_t operator()(const StateKey& k) const { return poly_hash(k.r) * 7919 + poly_hash(k.s); }
};

void fill_continuants(Expansion& e) {
  const Field& F = e.field;
  Poly p2(F), p1 = one(F), q2 = one(F), q1(F);
  e.p.clear();
  e.q.clear();
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

}  // namespace

void check_radicand(const Poly& D) {
  const Field& F = D.field();
  if (F->characteristic() == 2) throw Error("quadratic surds need characteristic != 2");
  if (D.deg() < 1 || D.deg() % 2) throw Error("radicand must have even positive degree: " + D.str());
  if (!F->sqrt(D.lead())) throw Error("leading coefficient of " + D.str() + " is not a square");
  if (poly_sqrt_exact(D)) throw Error("radicand is a perfect square: " + D.str());
}

Poly sqrt_floor(const Poly& D) { return poly_part(laurent_sqrt(D)).floor; }

Surd surd_normalize(const Poly& A, const Poly& B, const Poly& C, const Poly& D0) {
  check_radicand(D0);
  if (C.is_zero()) throw Error("surd with zero denominator");
  if (B.is_zero()) throw Error("surd with zero radical coefficient");
  Poly N = A * A - B * B * D0;
  Poly m = C.exact_div(poly_gcd(C, N)).monic();
  Surd st{m * A, m * C, m * m * B * B * D0};
  if (root_flipped(m * B, D0, st.D)) {
    st.r = -st.r;
    st.s = -st.s;
  }
  return st;
}

Surd surd_from_quad(const Quad& x) {
  if (x.is_rational()) throw Error("not a quadratic irrationality");
  return surd_normalize(x.a(), x.b(), x.c(), x.D());
}

Poly surd_floor(const Surd& st, const Poly& delta) { return poly_divrem(st.r + delta, st.s).q; }

Surd surd_cf_step(const Surd& st, const Poly& a) {
  Poly r = a * st.s - st.r;
  auto qr = poly_divrem(st.D - r * r, st.s);
  if (!qr.r.is_zero()) throw Error("surd recurrence lost exactness (s does not divide D - r^2)");
  return {r, qr.q, st.D};
}

bool is_reduced(const Surd& st, const Poly& delta) {
  Poly plus = st.r + delta, minus = st.r - delta;
  if (plus.is_zero() || plus.deg() <= st.s.deg()) return false;
  return minus.is_zero() || minus.deg() < st.s.deg();
}

bool is_reduced(const Surd& st) { return is_reduced(st, sqrt_floor(st.D)); }

Surd conjugate(const Surd& st) { return {-st.r, -st.s, st.D}; }

RatFn surd_norm(const Surd& st) {
  Poly n = st.r * st.r - st.D, d = st.s * st.s;
  Poly g = poly_gcd(n, d);
  return {n.exact_div(g), d.exact_div(g)};
}

Expansion surd_expand(const Surd& st0, int budget, bool continuants) {
  Expansion e;
  e.field = st0.D.field();
  e.method = "surd";
  Poly delta = sqrt_floor(st0.D);
  Surd st = st0;
  Poly p2(e.field), p1 = one(e.field), q2 = one(e.field), q1(e.field);
  for (int n = 0; n < budget; ++n) {
    Poly a = surd_floor(st, delta);
    e.a.push_back(a);
    e.states.push_back(st);
    if (continuants) {
      Poly p = a * p1 + p2, q = a * q1 + q2;
      p2 = std::move(p1);
      p1 = p;
      q2 = std::move(q1);
      q1 = q;
      e.p.push_back(std::move(p));
      e.q.push_back(std::move(q));
    }
    if (n + 1 < budget) st = surd_cf_step(st, a);
  }
  e.budget_exhausted = true;
  return e;
}

std::string period_status_name(PeriodStatus s) {
  switch (s) {
    case PeriodStatus::periodic:
      return "periodic";
    case PeriodStatus::quasi_periodic_aperiodic:
      return "quasi-periodic-aperiodic";
    case PeriodStatus::none_found:
      return "none-found";
  }
  return "?";
}

PeriodResult detect_periodicity(const Surd& st0, int budget) {
  PeriodResult res;
  res.info.budget = budget;
  const Field& F = st0.D.field();
  Expansion& e = res.expansion;
  e.field = F;
  e.method = "surd";
  Poly delta = sqrt_floor(st0.D);
  Surd st = st0;
  std::unordered_map<StateKey, size_t, StateKeyHash> seen;
  std::optional<size_t> first, second;
  for (int n = 0; n < budget; ++n) {
    Poly a = surd_floor(st, delta);
    e.a.push_back(a);
    e.states.push_back(st);
    StateKey key{st.r, st.s.monic()};
    auto it = seen.find(key);
    if (it != seen.end()) {
      first = it->second;
      second = static_cast<size_t>(n);
      break;
    }
    seen.emplace(std::move(key), static_cast<size_t>(n));
    st = surd_cf_step(st, a);
  }
  if (!first) {
    e.budget_exhausted = true;
    return res;
  }
  PeriodInfo& info = res.info;
  info.preperiod = *first;
  info.quasi_period = *second - *first;
  Elem c = e.states[*first].s.lead() / e.states[*second].s.lead();
  info.multiplier = c;
  size_t m = info.quasi_period;
  std::optional<long> order;
  if (F->kind() == FieldKind::prime)
    order = F->root_of_unity_order(c, static_cast<long>(F->characteristic()));
  else if (F->kind() == FieldKind::rationals)
    order = c.is_one() ? std::optional<long>(1) : (c == -F->one() ? std::optional<long>(2) : std::nullopt);
  else
    order = F->root_of_unity_order(c, 64L * F->ext_degree());
  if (m % 2 == 1) {
    info.period = c.is_one() ? m : 2 * m;
    info.status = PeriodStatus::periodic;
  } else if (order) {
    info.period = static_cast<size_t>(*order) * m;
    info.status = PeriodStatus::periodic;
  } else {
    info.status = PeriodStatus::quasi_periodic_aperiodic;
  }
  info.period_observed = c.is_one();
  // show the preperiod and two full periods
  size_t want = info.preperiod + 2 * std::max(info.period, m);
  while (e.a.size() < want) {
    st = surd_cf_step(e.states.back(), e.a.back());
    e.states.push_back(st);
    e.a.push_back(surd_floor(st, delta));
  }
  fill_continuants(e);
  return res;
}

PeriodResult detect_periodicity_sqrt(const Poly& D, int budget) {
  check_radicand(D);
  const Field& F = D.field();
  return detect_periodicity(Surd{Poly(F), one(F), D}, budget);
}

PellResult pell_solve(const Poly& D, int budget) {
  PellResult res;
  PeriodResult pr = detect_periodicity_sqrt(D, budget);
  res.info = pr.info;
  if (pr.info.status == PeriodStatus::none_found) return res;
  const Expansion& e = pr.expansion;
  // quasi-period multiples are the indices n >= 1 with s_n constant
  size_t m = 0;
  for (size_t n = 1; n < e.states.size(); ++n) {
    if (e.states[n].s.deg() == 0) {
      m = n;
      break;
    }
  }
  if (m == 0) return res;
  const Field& F = D.field();
  PellSolution sol;
  sol.index = m - 1;
  sol.x = e.p[m - 1];
  sol.y = e.q[m - 1];
  Poly v = sol.x * sol.x - D * sol.y * sol.y;
  if (v.deg() != 0) throw Error("Pell value is not a constant");
  Elem u = v.lead();
  if (auto t = F->sqrt(u)) {
    Elem ti = t->inv();
    sol.x = sol.x * ti;
    sol.y = sol.y * ti;
    sol.normalized = true;
  } else if (auto t2 = F->sqrt(-u)) {
    Elem ti = t2->inv();
    sol.x = sol.x * ti;
    sol.y = sol.y * ti;
    sol.normalized = true;
  }
  sol.unit = (sol.x * sol.x - D * sol.y * sol.y).lead();
  res.solution = sol;
  return res;
}

}  // namespace lcf
