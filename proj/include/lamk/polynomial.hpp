#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace lamk {

using Integer = mpz_class;

/// Dense exponent vector over a fixed variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  std::uint64_t weighted_degree(std::span<const int> weights) const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic comparison; variable 0 is the largest.
/// Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Orders larger monomials first, so that iteration visits the leading term first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// Sparse polynomial with arbitrary-precision integer coefficients.
/// No zero coefficients are ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, GrlexDescending>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Integer& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Integer& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of the monomial 1.
  Integer constant_term() const;
  Integer coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const;
  const Integer& leading_coefficient() const;
  std::uint64_t degree() const;

  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Integer& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned e) const;

  /// Multiplies every monomial by m.
  Polynomial shifted(const Monomial& m, const Integer& c) const;

  /// Divides every coefficient by c; throws DivisibilityViolation if inexact.
  Polynomial divide_exact(const Integer& c) const;

  /// Multivariate division by a divisor whose leading coefficient is +-1.
  /// Returns the quotient and stores the remainder.
  Polynomial divide(const Polynomial& divisor, Polynomial& remainder) const;

  /// Drops terms whose weighted degree exceeds the bound.
  Polynomial truncated(std::span<const int> weights, std::uint64_t max_weight) const;

  /// Re-embeds into a ring with more variables (new ones appended at the end).
  Polynomial widened(std::size_t nvars, std::size_t offset = 0) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Evaluates p with variable i replaced by values[i] in any commutative ring R.
/// `one` is the multiplicative identity of R; `scale` multiplies R by an Integer.
template <class R, class Scale>
R evaluate(const Polynomial& p, std::span<const R> values, const R& one, Scale scale) {
  std::vector<std::vector<R>> powers(values.size());
  std::vector<bool> zero(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) zero[i] = values[i].is_zero();
  R result = one - one;
  for (const auto& [m, c] : p) {
    bool skip = false;
    for (std::size_t i = 0; i < m.nvars() && !skip; ++i) skip = m[i] > 0 && zero[i];
    if (skip) continue;
    R acc = one;
    bool first = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(values[i]);
      while (pw.size() < m[i]) pw.push_back(pw.back() * values[i]);
      acc = first ? pw[m[i] - 1] : acc * pw[m[i] - 1];
      first = false;
    }
    result += scale(acc, c);
  }
  return result;
}

/// Generalized binomial coefficient C(n, k) for any integer n and k >= 0.
Integer binomial(const Integer& n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace lamk
