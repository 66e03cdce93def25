#include "lcf/zaremba.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace lcf {

namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Euclid on (f, g) over F_p: normal iff every remainder drops the degree by one
bool normal_mod_p(const Coeffs& f, Coeffs g, std::uint64_t p) {
  Coeffs a = f;
  trim(g);
  while (true) {
    if (g.empty() || g.size() + 1 != a.size()) return false;
    if (g.size() == 1) return true;
    // a <- a mod g, with a linear quotient
    std::uint64_t li = inv_mod(g.back(), p);
    for (size_t top = a.size() - 1; top + 1 >= g.size(); --top) {
      std::uint64_t c = a[top] * li % p;
      if (c) {
        size_t sh = top + 1 - g.size();
        for (size_t i = 0; i < g.size(); ++i) a[sh + i] = (a[sh + i] + (p - c) * g[i]) % p;
      }
      if (top + 1 == g.size()) break;
    }
    trim(a);
    std::swap(a, g);
  }
}

Coeffs to_coeffs(const Poly& f) {
  Coeffs c;
  for (const auto& x : f.coeffs()) c.push_back(f.field()->index_of(x));
  return c;
}

// candidate number k in census order: c_0 is the most significant digit
Coeffs candidate(std::uint64_t k, std::uint64_t q, int d) {
  Coeffs c(static_cast<size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    c[static_cast<size_t>(i)] = k % q;
    k /= q;
  }
  return c;
}

Poly from_coeffs(const Field& F, const Coeffs& c) {
  std::vector<Elem> e;
  for (auto x : c) e.push_back(F->element(x));
  return Poly(F, e);
}

bool normal_by_hankel(const Poly& g, const Poly& f) {
  if (g.is_zero()) return false;
  int d = f.deg();
  auto s = laurent_from_rational(g, f);
  auto prof = hankel_profile(s, d);
  return static_cast<int>(prof.size()) == d;
}

std::uint64_t checked_pow(std::uint64_t q, int d, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < d; ++i) {
    if (r > cap / q) return cap + 1;
    r *= q;
  }
  return r;
}

std::vector<Elem> forbidden_values(const Expansion& e, const Elem& lambda) {
  std::vector<Elem> out;
  for (size_t n = 0; n < e.size(); ++n) {
    Elem qv = e.q[n].eval(lambda);
    if (!qv.is_zero()) out.push_back(-(e.p[n].eval(lambda) / qv));
  }
  return out;
}

}  // namespace

Elem determinant(const Field& F, std::vector<std::vector<Elem>> m) {
  size_t n = m.size();
  Elem det = F->one();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return F->zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Elem inv = m[col][col].inv();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Elem f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::vector<int> hankel_profile(const LaurentStream& alpha, int J) {
  for (int i = alpha.hi(); i >= 0; --i)
    if (!alpha.coeff(i).is_zero()) throw Error("Hankel profile needs ord(alpha) >= 1");
  const Field& F = alpha.field();
  std::vector<Elem> c(static_cast<size_t>(2 * J + 1), F->zero());
  for (int k = 1; k <= 2 * J; ++k) c[static_cast<size_t>(k)] = alpha.coeff(-k);
  std::vector<int> out;
  for (int j = 1; j <= J; ++j) {
    std::vector<std::vector<Elem>> H(static_cast<size_t>(j), std::vector<Elem>(static_cast<size_t>(j)));
    for (int r = 0; r < j; ++r)
      for (int k = 0; k < j; ++k) H[static_cast<size_t>(r)][static_cast<size_t>(k)] = c[static_cast<size_t>(r + k + 1)];
    if (!determinant(F, H).is_zero()) out.push_back(j);
  }
  return out;
}

bool is_normal_fraction(const Poly& g, const Poly& f) {
  if (g.is_zero() || f.deg() < 1 || g.deg() >= f.deg()) return false;
  if (poly_gcd(f, g).deg() > 0) return false;
  Expansion e = cf_expand_rational(g, f);
  for (size_t n = 1; n < e.size(); ++n)
    if (e.a[n].deg() != 1) return false;
  return true;
}

CensusReport orthogonal_multiplicity(const Poly& f, size_t witness_cap, unsigned workers, std::uint64_t max_candidates,
                                     const std::string& method) {
  const Field& F = f.field();
  if (F->kind() != FieldKind::prime) throw Error("orthogonal multiplicity needs a finite field");
  if (f.deg() < 1) throw Error("orthogonal multiplicity needs a non-constant f");
  if (method != "exhaustive" && method != "hankel") throw Error("unknown census method: " + method);
  std::uint64_t q = F->size();
  int d = f.deg();
  std::uint64_t total = checked_pow(q, d, max_candidates);
  if (total > max_candidates)
    throw Error("census of " + std::to_string(q) + "^" + std::to_string(d) +
                " candidates exceeds the budget; use sampling with hankel_profile instead");
  CensusReport rep;
  rep.field = F;
  rep.f = f;
  rep.witness_cap = witness_cap;
  rep.method = method;
  rep.candidates = total;
  workers = std::max(1u, workers);
  Coeffs fc = to_coeffs(f);
  struct Part {
    std::uint64_t count = 0;
    std::vector<Coeffs> wit;
  };
  std::vector<Part> parts(workers);
  auto run = [&](unsigned w) {
    std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    Part& part = parts[w];
    for (std::uint64_t k = lo; k < hi; ++k) {
      Coeffs g = candidate(k, q, d);
      bool ok;
      if (method == "exhaustive") {
        ok = normal_mod_p(fc, g, q);
      } else {
        ok = normal_by_hankel(from_coeffs(F, g), f);
      }
      if (!ok) continue;
      ++part.count;
      if (part.wit.size() < witness_cap) part.wit.push_back(g);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> th;
    for (unsigned w = 0; w < workers; ++w) th.emplace_back(run, w);
    for (auto& t : th) t.join();
  }
  for (auto& part : parts) {
    rep.multiplicity += part.count;
    for (auto& g : part.wit) {
      if (rep.witnesses.size() >= witness_cap) break;
      rep.witnesses.push_back(from_coeffs(F, g));
    }
  }
  return rep;
}

std::vector<std::pair<Poly, std::uint64_t>> census_all_monic(const Field& F, int d, unsigned workers) {
  if (F->kind() != FieldKind::prime) throw Error("census needs a finite field");
  std::uint64_t q = F->size();
  std::uint64_t nf = checked_pow(q, d, 10000000);
  std::vector<std::pair<Poly, std::uint64_t>> out(nf);
  workers = std::max(1u, workers);
  auto run = [&](unsigned w) {
    for (std::uint64_t k = w; k < nf; k += workers) {
      Coeffs fc = candidate(k, q, d);
      fc.push_back(1);
      CensusReport r = orthogonal_multiplicity(from_coeffs(F, fc), 0, 1);
      out[k] = {r.f, r.multiplicity};
    }
  };
  std::vector<std::thread> th;
  for (unsigned w = 0; w < workers; ++w) th.emplace_back(run, w);
  for (auto& t : th) t.join();
  return out;
}

mpz_class lauder_bound(std::uint64_t q, int d) {
  mpz_class a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), q - 1, static_cast<unsigned long>((d + 1) / 2));
  mpz_ui_pow_ui(b.get_mpz_t(), q, static_cast<unsigned long>(d / 2));
  return a * b;
}

std::vector<Elem> default_lambda_supply(const Field& F, size_t count) {
  std::vector<Elem> out;
  if (F->kind() == FieldKind::prime) {
    for (std::uint64_t i = 0; i < F->size() && out.size() < count; ++i) out.push_back(F->element(i));
    return out;
  }
  out.push_back(F->zero());
  for (long k = 1; out.size() < count; ++k) {
    out.push_back(F->from_int(k));
    if (out.size() < count) out.push_back(F->from_int(-k));
  }
  return out;
}

PartnerResult construct_partner_infinite(const Poly& f, const std::vector<Elem>& supply) {
  const Field& F = f.field();
  if (f.deg() < 1) throw Error("partner construction needs a non-constant f");
  PartnerResult res;
  Poly g = Poly::constant(F, 1);
  Expansion e = cf_expand_rational(g, f);
  int K = k_profile(e).K;
  res.K_steps.push_back(K);
  while (K > 1) {
    std::optional<Elem> pick;
    std::vector<Elem> hit;
    for (const auto& lam : supply) {
      bool ok = true;
      for (const auto& qn : e.q)
        if (qn.eval(lam).is_zero()) ok = false;
      if (ok) {
        pick = lam;
        break;
      }
      hit.push_back(lam);
    }
    if (!pick) {
      res.g = g;
      res.expansion = e;
      res.blocked = hit;
      res.reason = "lambda supply exhausted: every candidate is a root of some q_n";
      return res;
    }
    g = g * Poly::linear_root(F, *pick);
    res.lambdas.push_back(*pick);
    e = cf_expand_rational(g, f);
    int nk = k_profile(e).K;
    if (nk != K - 1) throw Error("K did not drop after multiplying by T - " + pick->str());
    K = nk;
    res.K_steps.push_back(K);
  }
  res.found = true;
  res.g = g;
  res.expansion = e;
  return res;
}

std::vector<Poly> reachable_partners(const Poly& f, const std::vector<Elem>& supply) {
  const Field& F = f.field();
  std::map<std::string, Poly> found;
  std::function<void(const Poly&)> walk = [&](const Poly& g) {
    Expansion e = cf_expand_rational(g, f);
    if (k_profile(e).K <= 1) {
      found.emplace(g.str(), g);
      return;
    }
    for (const auto& lam : supply) {
      bool ok = true;
      for (const auto& qn : e.q)
        if (qn.eval(lam).is_zero()) ok = false;
      if (ok) walk(g * Poly::linear_root(F, lam));
    }
  };
  walk(Poly::constant(F, 1));
  std::vector<Poly> out;
  for (auto& kv : found) out.push_back(kv.second);
  return out;
}

FoldedPartner folded_partner(const Poly& P, int d) {
  if (P.deg() != 1) throw Error("folded partner needs a linear P");
  if (d < 1) throw Error("folded partner needs d >= 1");
  const Field& F = P.field();
  FoldedPartner r;
  r.g = Poly(F);
  for (int j = 0; (1 << j) <= d; ++j) r.g += P.pow(static_cast<unsigned>(d - (d >> j)));
  r.f = P.pow(static_cast<unsigned>(d));
  r.expansion = cf_expand_rational(r.g, r.f);
  r.K = k_profile(r.expansion).K;
  return r;
}

std::vector<Poly> friesen_prefix_solve(const Poly& f, const std::vector<Poly>& prefix) {
  const Field& F = f.field();
  if (F->kind() != FieldKind::prime) throw Error("prefix solving needs a finite field");
  if (prefix.empty()) throw Error("empty prefix");
  int A = 0;
  for (const auto& a : prefix) {
    if (a.deg() < 1) throw Error("prefix entries must be non-constant");
    A += a.deg();
  }
  int d = f.deg();
  if (d < 2 * A) throw Error("prefix too long: deg f < 2A");
  long k = static_cast<long>(prefix.size());
  Expansion e = expansion_from_quotients(F, prefix, true);
  Poly u = e.p_at(k - 1), v = e.p_at(k - 2);
  Poly Qk = e.q_at(k - 1), Qk1 = e.q_at(k - 2);
  // u r + v s = f with deg s < deg u
  XGcd x = poly_xgcd(u, v);
  Poly vinv = x.t * x.g.lead().inv();
  Poly s = poly_divrem(f * vinv, u).r;
  Poly r = (f - v * s).exact_div(u);
  Poly g0 = Qk * r + Qk1 * s;
  std::vector<Poly> out;
  std::uint64_t q = F->size();
  int free = d - 2 * A;
  std::uint64_t n = checked_pow(q, free, 10000000);
  if (n > 10000000) throw Error("too many solutions to enumerate");
  for (std::uint64_t i = 0; i < n; ++i) {
    Poly g = g0 + from_coeffs(F, candidate(i, q, free));
    if (g.is_zero() || g.deg() >= d) continue;
    Expansion c = cf_expand_rational(f, g);
    bool ok = c.size() >= prefix.size();
    for (size_t j = 0; ok && j < prefix.size(); ++j) ok = c.a[j] == prefix[j];
    if (ok) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
  return out;
}

SplitsResult splits_construct(const Poly& f, const std::vector<Elem>& roots, const std::optional<std::vector<Elem>>& b) {
  const Field& F = f.field();
  size_t d = static_cast<size_t>(f.deg());
  if (f.deg() < 1) throw Error("split construction needs a non-constant f");
  if (roots.size() != d) throw Error("expected " + std::to_string(d) + " roots");
  Poly prod = Poly::constant(F, 1);
  for (const auto& l : roots) prod *= Poly::linear_root(F, l);
  if (prod * f.lead() != f) throw Error("the given roots do not split f");
  if (b && b->size() != d) throw Error("expected " + std::to_string(d) + " values of b");
  std::vector<Elem> cands = default_lambda_supply(F, F->kind() == FieldKind::prime ? F->size() : d + 3);

  SplitsResult res;
  std::vector<Elem> chosen;
  size_t deepest = 0;
  std::function<bool(size_t, const Poly&, const Poly&)> step = [&](size_t n, const Poly& g, const Poly& fn) -> bool {
    if (n == d) {
      res.g = g * f.lead();
      res.expansion = cf_expand_rational(res.g, f);
      return true;
    }
    Expansion e = g.is_zero() ? expansion_from_quotients(F, {Poly(F)}, true) : cf_expand_rational(g, fn);
    auto bad = forbidden_values(e, roots[n]);
    auto allowed = [&](const Elem& x) { return std::none_of(bad.begin(), bad.end(), [&](const Elem& y) { return x == y; }); };
    deepest = std::max(deepest, n + 1);
    std::vector<Elem> options = b ? std::vector<Elem>{(*b)[n]} : cands;
    for (const auto& x : options) {
      if (!allowed(x)) continue;
      chosen.push_back(x);
      Poly ng = g + fn * x;
      Poly nf = fn * Poly::linear_root(F, roots[n]);
      if (step(n + 1, ng, nf)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (step(0, Poly(F), Poly::constant(F, 1))) {
    res.found = true;
    res.b = chosen;
    return res;
  }
  res.blocking_step = deepest;
  res.reason = "no admissible b at step " + std::to_string(deepest) + " for any earlier choice";
  return res;
}

BaumSweetResult baum_sweet_normal_test(const LaurentStream& alpha, int depth) {
  const Field& F = alpha.field();
  if (F->kind() != FieldKind::prime || F->size() != 2) throw Error("Baum-Sweet test needs F2");
  for (int i = alpha.hi(); i >= 0; --i)
    if (!alpha.coeff(i).is_zero()) throw Error("Baum-Sweet test needs ord(alpha) >= 1");
  BaumSweetResult r;
  r.depth = depth;
  if (depth < 1 || !alpha.coeff(-1).is_one()) {
    r.failed_at = depth < 1 ? 0 : 1;
    r.normal = false;
    return r;
  }
  for (int i = 1; 2 * i + 1 <= depth; ++i) {
    if (!(alpha.coeff(-i) + alpha.coeff(-2 * i) + alpha.coeff(-2 * i - 1)).is_zero()) {
      r.failed_at = i;
      return r;
    }
  }
  r.normal = true;
  return r;
}

}  // namespace lcf
