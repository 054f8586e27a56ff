#include <doctest.h>

#include "lamk/errors.hpp"
#include "lamk/lambda_ring.hpp"
#include "oracle.hpp"

using namespace lamk;
using oracle::Poly;

TEST_CASE("split line classes") {
  const auto ring = QuotientRing::create({"L", "M"});
  const auto model = LambdaRingModel::split(ring);
  const auto L = model.element("L"), M = model.element("M");
  const auto s = lambda_series(L + M, model, 3);
  CHECK(s[1] == L + M);
  CHECK(s[2] == L * M);
  CHECK(s[3].is_zero());
  // lambda_t(-L) = 1 / (1 + L t)
  const auto neg = lambda_series(-L, model, 3);
  CHECK(neg[3] == -(L * L * L));
  CHECK(lambda_op(L * M, 1, model) == L * M);
  CHECK(lambda_op(L * M, 2, model).is_zero());
  CHECK(augmentation(model.element("3*L*M - 2"), model) == 1);
}

TEST_CASE("lambda series of a sum is the product of series") {
  const auto model = LambdaRingModel::free({{"x", 2, 2}, {"y", 2, 2}});
  const auto x = model.element("x"), y = model.element("y");
  const auto sx = lambda_series(x, model, 4), sy = lambda_series(y, model, 4);
  CHECK(lambda_series(x + y, model, 4) == sx * sy);
  CHECK(lambda_series(x - y, model, 4) * sy == sx);
}

TEST_CASE("free generators against the split oracle") {
  // x of rank 3 with roots a1..a3, y of rank 3 with roots b1..b3
  const auto model = LambdaRingModel::free({{"x", 3, 3}, {"y", 3, 3}});
  const std::size_t nv = 6;
  std::vector<Poly> a{Poly::var(nv, 0), Poly::var(nv, 1), Poly::var(nv, 2)};
  std::vector<Poly> b{Poly::var(nv, 3), Poly::var(nv, 4), Poly::var(nv, 5)};
  const auto ea = oracle::elementary(a, nv, 3), eb = oracle::elementary(b, nv, 3);
  std::vector<Poly> values{ea[1], ea[2], ea[3], eb[1], eb[2], eb[3]};

  std::vector<Poly> prod, sq;
  for (const auto& p : a)
    for (const auto& q : b) prod.push_back(p * q);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) sq.push_back(a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)]);
  const auto dprod = oracle::elementary(prod, nv, 4);
  const auto dcomp = oracle::elementary(sq, nv, 4);

  const auto xy = lambda_series(model.element("x*y"), model, 4);
  const auto comp = lambda_series(model.symbol("x", 2), model, 4);
  for (int n = 1; n <= 4; ++n) {
    CHECK(oracle::substitute(xy[n].polynomial(), values, nv) == dprod[static_cast<std::size_t>(n)]);
    CHECK(oracle::substitute(comp[n].polynomial(), values, nv) == dcomp[static_cast<std::size_t>(n)]);
  }
  CHECK(model.symbol("x", 4).is_zero());
  CHECK(augmentation(model.symbol("x", 2), model) == 3);
}

TEST_CASE("model validation") {
  const auto ring = QuotientRing::create({"g", "g2"});
  CHECK_THROWS_AS(LambdaRingModel(ring, {LambdaGenerator{"g", GeneratorKind::Free, 2, 5, {0, 1}}}), InputError);
  CHECK_THROWS_AS(LambdaRingModel(ring, {LambdaGenerator{"g", GeneratorKind::Split, 1, 1, {0}}}), InputError);
  CHECK_THROWS_AS(LambdaRingModel(ring, {LambdaGenerator{"g", GeneratorKind::Free, 1, 0, {0, 1}}}), InputError);
  const auto model = LambdaRingModel::split(QuotientRing::create({"L"}));
  CHECK_THROWS_AS(lambda_series(model.one(), model, 0), InputError);
  CHECK_THROWS_AS(lambda_op(model.one(), 3, model, 2), TruncationError);
  CHECK_THROWS_AS(model.generator("M"), InputError);
}
