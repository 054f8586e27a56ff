#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lamk/lambda_ring.hpp"

namespace lamk {

/// gamma_t(x) = lambda_{t/(1-t)}(x) to the given order.
TruncatedSeries gamma_series(const RingElement& x, const LambdaRingModel& model, int order);
RingElement gamma_op(const RingElement& x, int n, const LambdaRingModel& model);

/// Adams operation through the recursion
///   -n lambda^n(x) = (-1)^n psi_n(x) + (-1)^{n-1} psi_{n-1}(x) lambda^1(x) + ... + (-1) psi_1(x) lambda^{n-1}(x).
RingElement adams_op(const RingElement& x, int n, const LambdaRingModel& model);
/// psi_1(x) .. psi_nmax(x) by the same recursion; index 0 is unused.
std::vector<RingElement> adams_ops(const RingElement& x, int nmax, const LambdaRingModel& model);
/// Adams operation read off -t lambda_t'(x) / lambda_t(x) = sum psi_n(x) (-t)^n.
RingElement adams_op_generating(const RingElement& x, int n, const LambdaRingModel& model);

/// An element N with lambda^k(N) = 0 for k > d, together with lambda_{-1}(N).
class DividedContext {
 public:
  DividedContext(LambdaRingModel model, RingElement n, int rank_bound);

  const LambdaRingModel& model() const { return model_; }
  const RingElement& element() const { return n_; }
  int rank_bound() const { return d_; }
  const RingElement& lambda_minus_one() const { return lambda_minus_one_; }
  /// lambda^1(N) .. lambda^d(N).
  const std::vector<RingElement>& lambdas() const { return lambdas_; }

 private:
  LambdaRingModel model_;
  RingElement n_;
  int d_;
  RingElement lambda_minus_one_;
  std::vector<RingElement> lambdas_;
};

/// The universal quotient lambda^n(x lambda_{-1}(N)) / lambda_{-1}(N) in
/// variables N1..Nd, x1..xn (the lambda-symbols of N then of x), computed by
/// exact polynomial division in the free lambda-ring. Memoized.
std::shared_ptr<const Polynomial> universal_divided_lambda(int n, int d);

/// lambda^n(N, x): the universal quotient specialised to the model.
RingElement divided_lambda(const DividedContext& ctx, const RingElement& x, int n);
/// sum_k lambda^k(N, x) t^k to the given order.
TruncatedSeries divided_lambda_series(const DividedContext& ctx, const RingElement& x, int order);

/// Denominator of the generating function for psi_n(N, x):
///   Printed: lambda_t(x)
///   Divided: lambda_t(N, x)
///   Lifted:  lambda_t(x lambda_{-1}(N))
enum class AdamsDenominator { Printed, Divided, Lifted };
std::string to_string(AdamsDenominator d);

/// psi_n(N, x) from -t d/dt lambda_t(N, x) / denominator = sum psi_n(N, x) (-t)^n.
RingElement divided_adams(const DividedContext& ctx, const RingElement& x, int n,
                          AdamsDenominator denominator = AdamsDenominator::Lifted);

}  // namespace lamk
