#include "lamk/operations.hpp"

#include <map>
#include <mutex>

#include "lamk/errors.hpp"

namespace lamk {

TruncatedSeries gamma_series(const RingElement& x, const LambdaRingModel& model, int order) {
  return series_substitute_gamma(lambda_series(x, model, order));
}

RingElement gamma_op(const RingElement& x, int n, const LambdaRingModel& model) {
  if (n < 0) throw InputError("gamma index must be non-negative");
  if (n == 0) return RingElement::from_integer(x.ring(), 1);
  return gamma_series(x, model, n)[n];
}

std::vector<RingElement> adams_ops(const RingElement& x, int nmax, const LambdaRingModel& model) {
  if (nmax < 1) throw InputError("Adams operations are defined for n >= 1");
  const auto lambda = lambda_series(x, model, nmax);
  std::vector<RingElement> psi(static_cast<std::size_t>(nmax) + 1, RingElement(x.ring()));
  for (int n = 1; n <= nmax; ++n) {
    // psi_n = (-1)^{n+1} [ n lambda^n + sum_{i=1}^{n-1} (-1)^i psi_i lambda^{n-i} ]
    RingElement acc = lambda[n] * Integer(n);
    for (int i = 1; i < n; ++i) {
      RingElement term = psi[i] * lambda[n - i];
      if (i % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    psi[n] = (n % 2 == 1) ? acc : -acc;
  }
  return psi;
}

RingElement adams_op(const RingElement& x, int n, const LambdaRingModel& model) {
  return adams_ops(x, n, model)[static_cast<std::size_t>(n)];
}

namespace {

// (-1)^{n+1} [t^{n-1}] (numerator' / denominator)
RingElement read_adams(const TruncatedSeries& numerator, const TruncatedSeries& denominator, int n) {
  const auto derivative = series_derivative(numerator.truncated(n));
  const auto quotient = derivative * series_inverse(denominator.truncated(n - 1));
  const RingElement& c = quotient[n - 1];
  return (n % 2 == 1) ? c : -c;
}

}  // namespace

RingElement adams_op_generating(const RingElement& x, int n, const LambdaRingModel& model) {
  if (n < 1) throw InputError("Adams operations are defined for n >= 1");
  const auto lambda = lambda_series(x, model, n);
  return read_adams(lambda, lambda, n);
}

DividedContext::DividedContext(LambdaRingModel model, RingElement n, int rank_bound)
    : model_(std::move(model)), n_(std::move(n)), d_(rank_bound), lambda_minus_one_(model_.ring()) {
  if (d_ < 0) throw InputError("rank bound must be non-negative");
  if (n_.ring() != model_.ring()) throw InputError("N does not belong to the model's ring");
  const auto series = lambda_series(n_, model_, d_ + 2);
  for (int k = d_ + 1; k <= d_ + 2; ++k)
    if (!series[k].is_zero())
      throw InputError("lambda^" + std::to_string(k) + "(N) is nonzero, so N violates the rank bound " +
                       std::to_string(d_));
  for (int k = 0; k <= d_; ++k) {
    if (k >= 1) lambdas_.push_back(series[k]);
    if (k % 2 == 0)
      lambda_minus_one_ += series[k];
    else
      lambda_minus_one_ -= series[k];
  }
}

namespace {
std::mutex divided_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const Polynomial>> divided_cache;
}  // namespace

std::shared_ptr<const Polynomial> universal_divided_lambda(int n, int d) {
  if (n < 0 || d < 0) throw InputError("divided lambda needs n >= 0 and d >= 0");
  const auto key = std::make_pair(n, d);
  {
    std::lock_guard lock(divided_mutex);
    if (auto it = divided_cache.find(key); it != divided_cache.end()) return it->second;
  }
  const int xr = std::max(n, 1);
  std::vector<FreeGeneratorSpec> gens;
  if (d > 0) gens.push_back({"N", d, 0});
  gens.push_back({"x", xr, 0});
  const auto model = LambdaRingModel::free(gens);
  RingElement lm1 = model.one();
  for (int k = 1; k <= d; ++k) {
    if (k % 2 == 0)
      lm1 += model.symbol("N", k);
    else
      lm1 -= model.symbol("N", k);
  }
  Polynomial quotient;
  if (n == 0) {
    quotient = Polynomial::constant(model.ring()->nvars(), 1);
  } else {
    const RingElement lifted = lambda_op(model.symbol("x", 1) * lm1, n, model);
    Polynomial remainder;
    quotient = lifted.polynomial().divide(lm1.polynomial(), remainder);
    if (!remainder.is_zero())
      throw DivisibilityViolation("lambda^" + std::to_string(n) + "(x lambda_{-1}(N)) is not divisible by lambda_{-1}(N)");
  }
  // Variables are N1..Nd then x1..x_xr; drop unused x-symbols beyond n.
  auto result = std::make_shared<Polynomial>(static_cast<std::size_t>(d + n));
  for (const auto& [m, c] : quotient) {
    Monomial w(static_cast<std::size_t>(d + n));
    for (int i = 0; i < d + n; ++i) w[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)];
    result->add_term(w, c);
  }
  std::lock_guard lock(divided_mutex);
  return divided_cache.try_emplace(key, std::move(result)).first->second;
}

TruncatedSeries divided_lambda_series(const DividedContext& ctx, const RingElement& x, int order) {
  const auto& model = ctx.model();
  if (x.ring() != model.ring()) throw InputError("x does not belong to the model's ring");
  if (order < 1) throw InputError("divided lambda series needs order >= 1");
  const auto xs = lambda_series(x, model, order);
  const int d = ctx.rank_bound();
  const auto one = model.one();
  const auto scale = [](const RingElement& e, const Integer& c) { return e * c; };
  TruncatedSeries out = TruncatedSeries::one(model.ring(), order);
  for (int n = 1; n <= order; ++n) {
    const auto q = universal_divided_lambda(n, d);
    std::vector<RingElement> values = ctx.lambdas();
    for (int j = 1; j <= n; ++j) values.push_back(xs[j]);
    out[n] = evaluate<RingElement>(*q, values, one, scale);
  }
  return out;
}

RingElement divided_lambda(const DividedContext& ctx, const RingElement& x, int n) {
  if (n < 0) throw InputError("lambda index must be non-negative");
  if (n == 0) return ctx.model().one();
  return divided_lambda_series(ctx, x, n)[n];
}

std::string to_string(AdamsDenominator d) {
  switch (d) {
    case AdamsDenominator::Printed:
      return "lambda(x)";
    case AdamsDenominator::Divided:
      return "lambda(N,x)";
    case AdamsDenominator::Lifted:
      return "lambda(x*lambda_-1(N))";
  }
  return "?";
}

RingElement divided_adams(const DividedContext& ctx, const RingElement& x, int n, AdamsDenominator denominator) {
  if (n < 1) throw InputError("Adams operations are defined for n >= 1");
  const auto& model = ctx.model();
  const auto numerator = divided_lambda_series(ctx, x, n);
  switch (denominator) {
    case AdamsDenominator::Printed:
      return read_adams(numerator, lambda_series(x, model, n), n);
    case AdamsDenominator::Divided:
      return read_adams(numerator, numerator, n);
    case AdamsDenominator::Lifted:
      return read_adams(numerator, lambda_series(x * ctx.lambda_minus_one(), model, n), n);
  }
  throw InputError("unknown denominator variant");
}

}  // namespace lamk
