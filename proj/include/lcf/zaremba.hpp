#pragma once

// Normal rational functions g/f (all partial quotients after a_0 linear):
// Hankel determinants, orthogonal multiplicity censuses and explicit
// partner constructions.

#include <functional>

#include "lcf/contfrac.hpp"

namespace lcf {

// determinant of an n x n matrix over a field (Gaussian elimination)
Elem determinant(const Field& F, std::vector<std::vector<Elem>> m);

// indices j in 1..J with det H_j != 0, H_j = (c_{-(i+k+1)})_{0 <= i,k < j}
std::vector<int> hankel_profile(const LaurentStream& alpha, int J);

// g/f normal: gcd(f, g) = 1, deg g < deg f and every a_n (n >= 1) linear
bool is_normal_fraction(const Poly& g, const Poly& f);

struct CensusReport {
  Field field;
  Poly f;
  std::uint64_t multiplicity = 0;
  std::vector<Poly> witnesses;  // lexicographic in (c_0, c_1, ...)
  size_t witness_cap = 0;
  std::string method;  // "exhaustive" or "hankel"
  std::uint64_t candidates = 0;
};

// exhaustive count over all g with deg g < deg f; refuses when q^deg f
// exceeds max_candidates
CensusReport orthogonal_multiplicity(const Poly& f, size_t witness_cap = 16, unsigned workers = 1,
                                     std::uint64_t max_candidates = 10000000, const std::string& method = "exhaustive");

// m(f) for every monic f of degree d, in census order of f
std::vector<std::pair<Poly, std::uint64_t>> census_all_monic(const Field& F, int d, unsigned workers = 1);

// (q - 1)^ceil(d/2) q^floor(d/2)
mpz_class lauder_bound(std::uint64_t q, int d);

// 0, 1, -1, 2, -2, ... over Q; residue order over F_p
std::vector<Elem> default_lambda_supply(const Field& F, size_t count);

struct PartnerResult {
  bool found = false;
  Poly g;
  std::vector<Elem> lambdas;
  Expansion expansion;           // of g/f
  std::vector<int> K_steps;      // K after each multiplication, starting with 1/f
  std::vector<Elem> blocked;     // roots hit when the supply ran out
  std::string reason;
};

// multiplies 1/f by T - lambda, lambda avoiding the roots of every q_n,
// until K = 1
PartnerResult construct_partner_infinite(const Poly& f, const std::vector<Elem>& supply);
// every monic g reachable by some admissible lambda sequence from the supply
std::vector<Poly> reachable_partners(const Poly& f, const std::vector<Elem>& supply);

struct FoldedPartner {
  Poly g, f;
  Expansion expansion;
  int K = 0;
};
FoldedPartner folded_partner(const Poly& P, int d);

// all g with deg g < deg f such that f/g begins with the prefix
std::vector<Poly> friesen_prefix_solve(const Poly& f, const std::vector<Poly>& prefix);

struct SplitsResult {
  bool found = false;
  Poly g;
  std::vector<Elem> b;
  Expansion expansion;
  size_t blocking_step = 0;  // 1-based step with no admissible b, when not found
  std::string reason;
};
// roots in the chosen order (with multiplicity); when b is given it is
// checked instead of searched
SplitsResult splits_construct(const Poly& f, const std::vector<Elem>& roots,
                              const std::optional<std::vector<Elem>>& b = std::nullopt);

struct BaumSweetResult {
  bool normal = false;
  int depth = 0;       // coefficients c_-1 .. c_-depth inspected
  int failed_at = 0;   // i of the first failing relation, 0 when none
};
// normality of alpha with ord >= 1 over F_2 from its first `depth` coefficients
BaumSweetResult baum_sweet_normal_test(const LaurentStream& alpha, int depth);

}  // namespace lcf
