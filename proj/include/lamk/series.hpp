#pragma once

#include <vector>

#include "lamk/quotient_ring.hpp"

namespace lamk {

/// Power series sum_{k<=T} a_k t^k with coefficients in a QuotientRing.
/// Every operation re-truncates its result; mixed orders truncate to the smaller one.
class TruncatedSeries {
 public:
  TruncatedSeries(RingHandle ring, int order);
  TruncatedSeries(RingHandle ring, std::vector<RingElement> coeffs);

  static TruncatedSeries one(RingHandle ring, int order);
  /// 1 + x t
  static TruncatedSeries linear(const RingElement& x, int order);

  const RingHandle& ring() const { return ring_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RingElement& operator[](int k) const;
  RingElement& operator[](int k);
  const std::vector<RingElement>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(int order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator*(const RingElement& c) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  RingHandle ring_;
  std::vector<RingElement> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Requires constant term +1 or -1; throws DivisionError otherwise.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// d/dt; the result has order T-1.
TruncatedSeries series_derivative(const TruncatedSeries& a);

/// a^e for any integer e (negative exponents go through series_inverse).
TruncatedSeries series_pow(const TruncatedSeries& a, const Integer& e);

/// a(u(t)) for an inner series u with zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& inner);

/// a(t / (1 - t)); requires constant term 1.
TruncatedSeries series_substitute_gamma(const TruncatedSeries& a);

}  // namespace lamk
