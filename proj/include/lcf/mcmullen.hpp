#pragma once

// Elements of K(T, sqrt D) with partial quotients of bounded degree:
// lifts of normal fractions through Pell solutions, periodic families,
// products by linear factors and Eisenstein-type choices of lambda.

#include <array>
#include <climits>

#include "lcf/reduction.hpp"

namespace lcf {

using Mat2 = std::array<Poly, 4>;  // row major

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_transpose(const Mat2& x);
Mat2 mat_pow(const Mat2& x, unsigned n);
Mat2 mat_identity(const Field& F);
Poly mat_trace(const Mat2& x);
Poly mat_det(const Mat2& x);
// tr^2 - 4 det
Poly mat_discriminant(const Mat2& x);
// M_{a_1} ... M_{a_k}, M_a = (a 1; 1 0)
Mat2 word_matrix(const Field& F, const std::vector<Poly>& word);

struct MercatLift {
  Poly D, X, Y, Z;
  bool y_flipped = false;  // Y negated so that ord(X + Y sqrt D) < 0
  Elem t, k;
  std::vector<Poly> a;     // Z/X = [0, a_1, ..., a_n]
  std::vector<Poly> word;  // period of the lift (not regular in general)
  Quad value;              // (X - kZ + Y sqrt D)/(kX)
  Quad mu;                 // 1 - 2tX^2 - 2tXY sqrt D
  bool eigen_ok = false;   // M (value, 1)^t = mu (value, 1)^t
  Expansion regular;       // regular expansion of value on the window
  int K_regular = 0, K_ZX = 0;
  bool K_bound_ok = false;
};
MercatLift mercat_lift(const Poly& D, const Poly& X, const Poly& Y, const Poly& Z, int budget);

struct FamilyMember {
  unsigned n = 0;
  std::vector<Poly> word;  // period of alpha_n (may contain constants)
  Mat2 P;                  // B A^n C (A^t)^n
  Quad value;
  bool trace_ok = false;         // tr P = tr(H A^n)^2 - 2 det A^n
  bool discriminant_ok = false;  // discr P = discr A * square
  int K_word = 0;                // K after absorbing constants in one period
};
struct MercatFamily {
  std::vector<Poly> base;  // a_0, a_1, ..., a_1
  std::string branch;      // "single", "detN=-1" or "detN=1"
  Mat2 A, B, C, H;
  std::vector<Poly> b_word, c_word;
  std::vector<FamilyMember> members;
};
// members for n = 0..n_max, computed in parallel
MercatFamily mercat_family(const Field& F, const std::vector<Poly>& word, unsigned n_max);

struct PipelineStep {
  Elem lambda;
  int K_before = 0, K_after = 0;
  bool avoided = false;  // q_n(lambda) != 0 on the window
};
struct PipelineResult {
  Poly D;
  std::vector<Elem> lambdas;
  Poly product;  // prod (T - lambda_i)
  std::vector<PipelineStep> steps;
  Expansion expansion;  // of product * sqrt D on the window
  KProfile profile;
  bool reached_one = false;
  std::string reason;
};
PipelineResult sqrt_multiplier_pipeline(const Poly& D, const std::vector<Elem>& supply, int budget);

struct ShiftResult {
  Quad value;  // (alpha + a)/(T - lambda)
  Expansion before, after;
  bool avoided = false;  // p_n(lambda) + a q_n(lambda) != 0 on the window
  int K_before = 0, K_after = 0;
  bool K_relation = false;  // K_after = max(K_before - 1, 1) when avoided
};
ShiftResult divide_shift(const Quad& alpha, const Elem& a, const Elem& lambda, int budget);

struct EisensteinResult {
  Field extension;  // Q[x]/(pi x^r - 1)
  Elem lambda;
  int window = 0;
  bool nonvanishing = false;  // q_n(lambda) != 0 for n < window
  size_t first_vanishing = 0;
  Expansion expansion;  // of (T - lambda) sqrt D over the extension
  KProfile profile;
};
EisensteinResult eisenstein_lambda(const Poly& D, std::uint64_t pi, int r, int budget);

}  // namespace lcf
