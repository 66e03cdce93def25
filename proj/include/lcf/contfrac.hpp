#pragma once

// Regular continued fractions of Laurent series: expansion, continuants,
// rewriting of non-regular words, folding and unary transforms.

#include "lcf/laurent.hpp"

namespace lcf {

struct Expansion {
  Field field;
  std::vector<Poly> a;
  // raw continuants; p[n]/q[n] is the n-th convergent
  std::vector<Poly> p, q;
  bool terminated = false;
  bool budget_exhausted = false;
  // complete quotients (r_n + sqrt D)/s_n when expanded as a surd
  std::vector<Surd> states;
  std::string method;

  size_t size() const { return a.size(); }
  bool has_continuants() const { return !a.empty() && p.size() == a.size(); }
  // continuants scaled so that q_n is monic
  Poly p_monic(size_t n) const;
  Poly q_monic(size_t n) const;
  // q_n for n = -1, -2 seeds as well
  Poly p_at(long n) const;
  Poly q_at(long n) const;
};

struct KProfile {
  int K = 0;
  int ovK = 0;
  int window = 0;  // number of trailing quotients used for ovK
  int count = 0;   // quotients with index >= 1
};

// budget: maximal number of partial quotients
Expansion cf_expand(const LaurentStream& alpha, int budget, bool continuants = true);
Expansion cf_expand_rational(const Poly& A, const Poly& B, int budget = 1 << 20);
Expansion expansion_from_quotients(const Field& F, std::vector<Poly> a, bool terminated, bool budget_exhausted = false);

KProfile k_profile(const Expansion& e);

// C_n(a_0..a_{n-1}); C_0() = 1
Poly continuant_poly(const Field& F, const std::vector<Poly>& a);
// (p_n, q_n) of the finite word; throws when q_n = 0
RatFn cf_value(const Field& F, const std::vector<Poly>& a);

struct ConvergentCheck {
  bool convergent = false;
  // deg a_{next} = ord(p - alpha*q) - deg q; empty when p/q = alpha or the
  // order was not found within the scan
  std::optional<int> next_degree;
};
ConvergentCheck is_convergent(const Poly& p, const Poly& q, const LaurentStream& alpha, int scan = 256);

// regular expansion of the value of a word with possibly constant or zero
// entries at indices >= 1
Expansion normalize_to_regular(const Field& F, std::vector<Poly> a, int max_rewrites = 100000);

struct FoldSigns {
  Elem e1, e2, c;
};
struct FoldResult {
  Poly num, den;
  std::vector<Poly> word;
};
// plain: [a0, w, a, -rev(w)]; signed: [e1 a0, e1 w + c, e2 rev(w) - c^3]
FoldResult fold(const Poly& a0, const std::vector<Poly>& w, const Poly& a);
FoldResult fold_signed(const Poly& a0, const std::vector<Poly>& w, const FoldSigns& s);

Expansion transform_add(const Expansion& e, const Poly& a);
Expansion transform_scale(const Expansion& e, const Elem& c);
Expansion transform_invert(const Expansion& e);
Expansion transform_frobenius(const Expansion& e);
Expansion transform_substitute(const Expansion& e, const Poly& P);

struct Transferred {
  Poly u, v;
  size_t n = 0;       // index of the source convergent of alpha
  std::string rule;   // "general", "case1", "case2", "case3"
  std::optional<int> next_degree;  // empty when u/v is the exact value
};
// convergents of (A/B)*alpha obtained from those of alpha, sorted by deg v
std::vector<Transferred> mobius_convergent_transfer(const Expansion& e, const Poly& A, const Poly& B);

struct TailMatch {
  size_t n = 0, m = 0;
  Elem c;
  size_t overlap = 0;
};
// tails a_{n+j} = c^{(-1)^j} b_{m+j}; empty when no match with at least
// min_overlap compared quotients is found
std::optional<TailMatch> tail_equivalence(const Expansion& e1, const Expansion& e2, size_t min_overlap = 3);

}  // namespace lcf
