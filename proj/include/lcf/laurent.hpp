#pragma once

// Formal Laurent series in 1/T as lazily computed, memoized coefficient
// streams.

#include <functional>
#include <memory>

#include "lcf/algebra.hpp"
#include "lcf/quadratic.hpp"

namespace lcf {

class LaurentStream {
 public:
  class Impl;

  LaurentStream() = default;
  explicit LaurentStream(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

  const Field& field() const;
  // c_i = 0 for every i > hi()
  int hi() const;
  // coefficient of T^i
  Elem coeff(int i) const;
  // index of the leading nonzero coefficient, scanning at most `scan`
  // indices below hi(); empty when none is found (zero within the scan)
  std::optional<int> degree(int scan = 512) const;
  // exact value when known (rational functions and quadratic surds)
  const std::optional<Quad>& exact() const;
  bool perfect_square() const;

  // "c_N*T^N + ... (k terms shown)"
  std::string str(int k) const;

  // independent copy with an empty cache
  LaurentStream clone() const;

  const std::shared_ptr<Impl>& impl() const { return impl_; }

 private:
  std::shared_ptr<Impl> impl_;
};

LaurentStream laurent_from_poly(const Poly& f);
LaurentStream laurent_from_rational(const Poly& A, const Poly& B);
// canonical root: leading coefficient is the canonical field square root
LaurentStream laurent_sqrt(const Poly& D);
LaurentStream laurent_from_quad(const Quad& x);
LaurentStream laurent_add(const LaurentStream& a, const LaurentStream& b);
LaurentStream laurent_neg(const LaurentStream& a);
LaurentStream laurent_sub(const LaurentStream& a, const LaurentStream& b);
LaurentStream laurent_mul(const LaurentStream& a, const LaurentStream& b);
LaurentStream laurent_scale(const LaurentStream& a, const Elem& c);
LaurentStream laurent_mul_poly(const LaurentStream& a, const Poly& P);
LaurentStream laurent_div_poly(const LaurentStream& a, const Poly& P);
LaurentStream laurent_inverse(const LaurentStream& a);

struct PolyPart {
  Poly floor;
  LaurentStream frac;
};
PolyPart poly_part(const LaurentStream& a);

// compares coefficients of indices hi..hi-count+1 where hi is the larger
// of the two upper bounds; "prefix equality" only
bool prefix_equal(const LaurentStream& a, const LaurentStream& b, int count);

}  // namespace lcf
