#include "lamk/polynomial.hpp"

#include <cassert>
#include <numeric>

#include "lamk/errors.hpp"

namespace lamk {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::uint64_t Monomial::weighted_degree(std::span<const int> weights) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    d += static_cast<std::uint64_t>(exps_[i]) * static_cast<std::uint64_t>(weights[i]);
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exps_)
    if (e != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(other.nvars() == nvars());
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Polynomial Polynomial::constant(std::size_t nvars, const Integer& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial p(nvars);
  p.add_term(Monomial::variable(nvars, index), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Integer& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Integer Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw InputError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

const Integer& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw InputError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

std::uint64_t Polynomial::degree() const { return terms_.empty() ? 0 : leading_monomial().degree(); }

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  assert(m.nvars() == nvars_);
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw InputError("polynomial variable count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw InputError("polynomial variable count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw InputError("polynomial variable count mismatch");
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const Monomial& m, const Integer& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [t, v] : terms_) r.terms_.emplace(t * m, v * c);
  return r;
}

Polynomial Polynomial::divide_exact(const Integer& c) const {
  if (c == 0) throw DivisionError("division of a polynomial by zero");
  Polynomial r(nvars_);
  for (const auto& [m, v] : terms_) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
      throw DivisibilityViolation("coefficient not divisible by " + c.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    r.terms_.emplace(m, std::move(q));
  }
  return r;
}

Polynomial Polynomial::divide(const Polynomial& divisor, Polynomial& remainder) const {
  if (divisor.is_zero()) throw DivisionError("division by the zero polynomial");
  const Monomial& lead = divisor.leading_monomial();
  const Integer& lc = divisor.leading_coefficient();
  if (lc != 1 && lc != -1) throw DivisionError("divisor leading coefficient is not a unit");
  Polynomial quotient(nvars_);
  remainder = Polynomial(nvars_);
  Polynomial work = *this;
  while (!work.is_zero()) {
    auto [m, c] = *work.terms_.begin();
    if (lead.divides(m)) {
      Monomial q = lead.quotient_of(m);
      Integer qc = c * lc;  // lc is +-1, so c / lc == c * lc
      quotient.add_term(q, qc);
      work -= divisor.shifted(q, qc);
    } else {
      remainder.add_term(m, c);
      work.terms_.erase(work.terms_.begin());
    }
  }
  return quotient;
}

Polynomial Polynomial::truncated(std::span<const int> weights, std::uint64_t max_weight) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree(weights) <= max_weight) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::widened(std::size_t nvars, std::size_t offset) const {
  if (offset + nvars_ > nvars) throw InputError("cannot widen polynomial into fewer variables");
  Polynomial r(nvars);
  for (const auto& [m, c] : terms_) {
    Monomial w(nvars);
    for (std::size_t i = 0; i < nvars_; ++i) w[offset + i] = m[i];
    r.terms_.emplace(std::move(w), c);
  }
  return r;
}

Integer binomial(const Integer& n, unsigned long k) {
  Integer num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= (n - i);
  Integer den = factorial(k);
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace lamk
