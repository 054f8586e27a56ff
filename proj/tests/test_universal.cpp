#include <doctest.h>

#include "lamk/errors.hpp"
#include "lamk/universal.hpp"
#include "oracle.hpp"

using namespace lamk;
using oracle::Poly;

namespace {

// Roots a1..a3 (variables 0..2) and b1..b3 (variables 3..5).
constexpr std::size_t kVars = 6;
std::vector<Poly> roots(std::size_t offset) {
  return {Poly::var(kVars, offset), Poly::var(kVars, offset + 1), Poly::var(kVars, offset + 2)};
}

std::vector<Poly> padded(std::vector<Poly> e, int upto) {
  e.resize(static_cast<std::size_t>(upto) + 1, Poly{kVars, {}});
  return e;
}

}  // namespace

TEST_CASE("product polynomials agree with the split expansion") {
  const auto ea = padded(oracle::elementary(roots(0), kVars, 3), 6);
  const auto eb = padded(oracle::elementary(roots(3), kVars, 3), 6);
  std::vector<Poly> pairs;
  for (const auto& a : roots(0))
    for (const auto& b : roots(3)) pairs.push_back(a * b);
  const auto direct = oracle::elementary(pairs, kVars, 6);
  for (int n = 1; n <= 6; ++n) {
    const auto u = universal_product_poly(n);
    std::vector<Poly> values;
    for (int i = 1; i <= n; ++i) values.push_back(ea[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= n; ++i) values.push_back(eb[static_cast<std::size_t>(i)]);
    CHECK(oracle::substitute(u->expr, values, kVars) == direct[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("small product polynomials by hand") {
  // lambda^2(xy) = x1^2 y2 + x2 y1^2 - 2 x2 y2
  const auto u = universal_product_poly(2);
  const Polynomial x1 = Polynomial::variable(4, 0), x2 = Polynomial::variable(4, 1);
  const Polynomial y1 = Polynomial::variable(4, 2), y2 = Polynomial::variable(4, 3);
  CHECK(u->expr == x1 * x1 * y2 + x2 * y1 * y1 - x2 * y2 * Integer(2));
  CHECK(u->symbols.size() == 4);
}

TEST_CASE("composition polynomials agree with the split expansion") {
  const auto a = roots(0);
  const auto e = padded(oracle::elementary(a, kVars, 3), 20);
  for (int m = 1; m <= 3; ++m) {
    // roots of lambda^m(x): products over m-subsets of {a1, a2, a3}
    std::vector<Poly> sub;
    for (int mask = 0; mask < 8; ++mask)
      if (__builtin_popcount(static_cast<unsigned>(mask)) == m) {
        Poly p = Poly::constant(kVars, 1);
        for (int i = 0; i < 3; ++i)
          if (mask & (1 << i)) p = p * a[static_cast<std::size_t>(i)];
        sub.push_back(p);
      }
    const auto direct = oracle::elementary(sub, kVars, 4);
    for (int n = 1; n <= 4; ++n) {
      const auto u = universal_compose_poly(n, m, 3);
      std::vector<Poly> values(e.begin() + 1, e.begin() + 1 + u->rank);
      CHECK(oracle::substitute(u->expr, values, kVars) == direct[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("unbounded composition has nm symbols") {
  const auto u = universal_compose_poly(2, 2);
  CHECK(u->rank == 4);
  // lambda^1(lambda^m x) = lambda^m x
  const auto id = universal_compose_poly(1, 3);
  CHECK(id->expr == Polynomial::variable(static_cast<std::size_t>(id->rank), 2));
}

TEST_CASE("power sums via Newton identities") {
  // p_2 = e1^2 - 2 e2, p_3 = e1^3 - 3 e1 e2 + 3 e3
  const Polynomial e1 = Polynomial::variable(3, 0), e2 = Polynomial::variable(3, 1), e3 = Polynomial::variable(3, 2);
  CHECK(power_sum_in_elementary(2, 3) == e1 * e1 - e2 * Integer(2));
  CHECK(power_sum_in_elementary(3, 3) == e1.pow(3) - e1 * e2 * Integer(3) + e3 * Integer(3));
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS_AS(universal_product_poly(universal_caps().product + 1), InputError);
  CHECK_THROWS_AS(universal_compose_poly(universal_caps().compose + 1, 1), InputError);
  CHECK_THROWS_AS(universal_product_poly(-1), InputError);
}
