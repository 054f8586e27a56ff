#include "lamk/series.hpp"

#include <algorithm>

#include "lamk/errors.hpp"

namespace lamk {

TruncatedSeries::TruncatedSeries(RingHandle ring, int order) : ring_(std::move(ring)) {
  if (order < 0) throw InputError("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, RingElement(ring_));
}

TruncatedSeries::TruncatedSeries(RingHandle ring, std::vector<RingElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("series needs at least a constant coefficient");
  for (const auto& c : coeffs_)
    if (c.ring() != ring_) throw InputError("series coefficient from a different ring");
}

TruncatedSeries TruncatedSeries::one(RingHandle ring, int order) {
  TruncatedSeries s(ring, order);
  s.coeffs_[0] = RingElement::from_integer(ring, 1);
  return s;
}

TruncatedSeries TruncatedSeries::linear(const RingElement& x, int order) {
  TruncatedSeries s = one(x.ring(), order);
  if (order >= 1) s.coeffs_[1] = x;
  return s;
}

const RingElement& TruncatedSeries::operator[](int k) const {
  if (k < 0 || k > order())
    throw TruncationError("coefficient t^" + std::to_string(k) + " beyond truncation order " +
                          std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(k)];
}

RingElement& TruncatedSeries::operator[](int k) {
  if (k < 0 || k > order())
    throw TruncationError("coefficient t^" + std::to_string(k) + " beyond truncation order " +
                          std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > this->order()) throw TruncationError("cannot extend a truncated series");
  return TruncatedSeries(ring_, std::vector<RingElement>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int t = std::min(a.order(), b.order());
  TruncatedSeries r(a.ring_, t);
  for (int k = 0; k <= t; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int t = std::min(a.order(), b.order());
  TruncatedSeries r(a.ring_, t);
  for (int k = 0; k <= t; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.ring_ != b.ring_) throw InputError("series over different rings");
  const int t = std::min(a.order(), b.order());
  TruncatedSeries r(a.ring_, t);
  for (int i = 0; i <= t; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= t; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const RingElement& c) const {
  TruncatedSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  const RingElement& a0 = a[0];
  const auto one = RingElement::from_integer(a.ring(), 1);
  Integer sign;
  if (a0 == one)
    sign = 1;
  else if (a0 == -one)
    sign = -1;
  else
    throw DivisionError("series constant term " + a0.to_string() + " is not +-1");
  const int t = a.order();
  TruncatedSeries inv(a.ring(), t);
  inv[0] = one * sign;
  for (int k = 1; k <= t; ++k) {
    RingElement acc(a.ring());
    for (int i = 1; i <= k; ++i)
      if (!a[i].is_zero() && !inv[k - i].is_zero()) acc += a[i] * inv[k - i];
    inv[k] = -acc * sign;
  }
  return inv;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
  const int t = a.order();
  if (t == 0) throw TruncationError("derivative of an order-0 series is undetermined");
  TruncatedSeries d(a.ring(), t - 1);
  for (int k = 1; k <= t; ++k) d[k - 1] = a[k] * Integer(k);
  return d;
}

TruncatedSeries series_pow(const TruncatedSeries& a, const Integer& e) {
  if (e < 0) return series_pow(series_inverse(a), -e);
  TruncatedSeries result = TruncatedSeries::one(a.ring(), a.order());
  if (e == 0) return result;
  // 1 + x t is raised in closed form: sum C(e, k) x^k t^k.
  bool linear = true;
  for (int k = 2; k <= a.order() && linear; ++k) linear = a[k].is_zero();
  if (linear && a[0] == RingElement::from_integer(a.ring(), 1) && a.order() >= 1) {
    RingElement xk = RingElement::from_integer(a.ring(), 1);
    for (int k = 1; k <= a.order(); ++k) {
      xk *= a[1];
      result[k] = xk * binomial(e, static_cast<unsigned long>(k));
    }
    return result;
  }
  TruncatedSeries base = a;
  Integer n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& inner) {
  if (!inner[0].is_zero()) throw InputError("inner series of a substitution must have zero constant term");
  const int t = std::min(a.order(), inner.order());
  TruncatedSeries result(a.ring(), t);
  result[0] = a[0];
  TruncatedSeries power = inner.truncated(t);
  for (int k = 1; k <= t; ++k) {
    if (!a[k].is_zero())
      for (int j = k; j <= t; ++j) result[j] += a[k] * power[j];
    if (k < t) power = power * inner.truncated(t);
  }
  return result;
}

TruncatedSeries series_substitute_gamma(const TruncatedSeries& a) {
  if (a[0] != RingElement::from_integer(a.ring(), 1)) throw InputError("gamma substitution requires constant term 1");
  // [t^n] (t/(1-t))^k = C(n-1, k-1)
  const int t = a.order();
  TruncatedSeries result(a.ring(), t);
  result[0] = a[0];
  for (int n = 1; n <= t; ++n)
    for (int k = 1; k <= n; ++k)
      if (!a[k].is_zero()) result[n] += a[k] * binomial(Integer(n - 1), static_cast<unsigned long>(k - 1));
  return result;
}

}  // namespace lamk
