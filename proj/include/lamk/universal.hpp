#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lamk/polynomial.hpp"

namespace lamk {

/// A lambda-ring universal polynomial in formal symbols lambda^i(x), lambda^j(y).
struct UniversalPolynomial {
  enum class Arity { Product, Compose };
  Arity arity;
  int n = 0;
  int m = 0;          // compose only
  int rank = 0;       // compose only: symbols lambda^i(x) with i > rank are zero
  /// Product: variables x1..xn, y1..yn (lambda^i(x) then lambda^i(y)).
  /// Compose: variables x1..x_rank.
  Polynomial expr;
  std::vector<std::string> symbols;
};

/// Upper limits on memoized universal polynomials.
struct UniversalCaps {
  int product = 12;
  int compose = 6;
};
const UniversalCaps& universal_caps();

/// lambda^n(x y) = P_n(lambda^1 x .. lambda^n x; lambda^1 y .. lambda^n y).
/// Memoized; concurrent readers are safe.
std::shared_ptr<const UniversalPolynomial> universal_product_poly(int n);

/// lambda^n(lambda^m(x)) in lambda^1 x .. lambda^{nm} x. A positive
/// rank_bound r additionally sets lambda^i(x) = 0 for i > r.
std::shared_ptr<const UniversalPolynomial> universal_compose_poly(int n, int m, int rank_bound = 0);

/// Power sum p_k in the elementary symmetric polynomials e_1..e_r (r variables).
Polynomial power_sum_in_elementary(int k, int r);

}  // namespace lamk
