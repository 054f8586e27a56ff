#include <doctest.h>

#include <random>

#include "lamk/errors.hpp"
#include "lamk/operations.hpp"
#include "lamk/scheme.hpp"
#include "oracle.hpp"

using namespace lamk;

TEST_CASE("psi on line classes is the n-th power") {
  const auto model = LambdaRingModel::split(QuotientRing::create({"L"}));
  const auto L = model.element("L");
  for (int n = 1; n <= 5; ++n) {
    CHECK(adams_op(L, n, model) == L.pow(static_cast<unsigned>(n)));
    CHECK(adams_op_generating(L, n, model) == L.pow(static_cast<unsigned>(n)));
  }
  CHECK_THROWS_AS(adams_op(L, 0, model), InputError);
}

TEST_CASE("psi on a rank-2 free generator is the power sum") {
  const auto model = LambdaRingModel::free({{"x", 2, 2}});
  // p_3 = e1^3 - 3 e1 e2 + 3 e3 with e3 = 0
  CHECK(adams_op(model.element("x"), 3, model) == model.element("x^3 - 3*x*x_l2"));
}

TEST_CASE("gamma operations") {
  const auto model = LambdaRingModel::split(QuotientRing::create({"L"}));
  const auto x = model.element("L - 1");
  // gamma_t(L - 1) = 1 + (L - 1) t
  CHECK(gamma_op(x, 1, model) == x);
  CHECK(gamma_op(x, 2, model).is_zero());
  CHECK(gamma_op(x, 0, model) == model.one());
}

TEST_CASE("psi agrees with the ring-map oracle on P^3") {
  const auto p3 = projective_space(3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int t = 0; t < 10; ++t) {
    const auto x = p3.element(std::to_string(c(rng)) + "*h^2 + " + std::to_string(c(rng)) + "*h + " + std::to_string(c(rng)));
    const auto ls = oracle::line_sum(x.polynomial());
    const auto lam = oracle::lambda({3}, ls, 4);
    const auto lib = lambda_series(x, p3.model, 4);
    for (int n = 1; n <= 4; ++n) {
      CHECK(oracle::value({3}, adams_op(x, n, p3.model).polynomial()) == oracle::adams({3}, ls, n));
      CHECK(oracle::value({3}, lib[n].polynomial()) == lam[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("psi_2(h - 1) on P^1 and P^2") {
  // On P^1 this is 2h - 2; on P^2 the (h-1)^2 term survives.
  const auto p1 = projective_space(1), p2 = projective_space(2);
  CHECK(adams_op(p1.element("h-1"), 2, p1.model).to_string() == "2*h - 2");
  CHECK(adams_op(p2.element("h-1"), 2, p2.model).to_string() == "h^2 - 1");
}

TEST_CASE("divided lambda for a line class") {
  // N a line: lambda_{-1}(N) = 1 - N and lambda^n((1-N)) = (-N)^{n-1} (1 - N),
  // so lambda^n(N, 1) = (-N)^{n-1}.
  const auto model = LambdaRingModel::split(QuotientRing::create({"N"}));
  const DividedContext ctx(model, model.element("N"), 1);
  CHECK(ctx.lambda_minus_one() == model.element("1 - N"));
  for (int n = 1; n <= 4; ++n) {
    const auto expected = (n % 2 == 1 ? model.one() : -model.one()) * model.element("N").pow(static_cast<unsigned>(n - 1));
    CHECK(divided_lambda(ctx, model.one(), n) == expected);
  }
  CHECK_THROWS_AS(DividedContext(model, model.element("N + 1"), 1), InputError);
}

TEST_CASE("universal divided lambda times lambda_{-1} recovers lambda^n") {
  const auto model = LambdaRingModel::free({{"N", 2, 2}, {"x", 3, 3}});
  const DividedContext ctx(model, model.element("N"), 2);
  const auto x = model.element("x");
  const auto lifted = lambda_series(x * ctx.lambda_minus_one(), model, 3);
  for (int n = 1; n <= 3; ++n) CHECK(divided_lambda(ctx, x, n) * ctx.lambda_minus_one() == lifted[n]);
}

TEST_CASE("divided psi: the lifted denominator matches psi(i_* y) for a line conormal") {
  // For N a line and y = 1: psi_2(1 - N) = 1 - N^2 = (1 - N)(1 + N), so psi_2(N, 1) should be 1 + N.
  const auto model = LambdaRingModel::split(QuotientRing::create({"N"}));
  const DividedContext ctx(model, model.element("N"), 1);
  CHECK(divided_adams(ctx, model.one(), 2, AdamsDenominator::Lifted) == model.element("1 + N"));
  CHECK(divided_adams(ctx, model.one(), 2, AdamsDenominator::Printed) == model.element("2*N + 1"));
  CHECK(divided_adams(ctx, model.one(), 2, AdamsDenominator::Divided) == model.element("2*N + 1"));
}
