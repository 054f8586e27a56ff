#include "lamk/quotient_ring.hpp"

#include <algorithm>
#include <cctype>

#include "lamk/errors.hpp"
#include "lamk/expression.hpp"

namespace lamk {

RingHandle QuotientRing::create(std::vector<std::string> names, std::vector<RewriteRule> rules, Options options) {
  std::shared_ptr<QuotientRing> ring(new QuotientRing());
  const std::size_t n = names.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& nm = names[i];
    const bool ident = !nm.empty() && !std::isdigit(static_cast<unsigned char>(nm[0])) &&
                       std::all_of(nm.begin(), nm.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
    if (!ident) throw InputError("variable name '" + nm + "' is not an identifier");
    for (std::size_t j = i + 1; j < n; ++j)
      if (nm == names[j]) throw InputError("duplicate variable name '" + nm + "'");
  }
  for (const auto& r : rules) {
    if (r.lead.nvars() != n || r.replacement.nvars() != n)
      throw InputError("rewrite rule does not match the ring's variable count");
    if (r.lead.is_one()) throw InputError("rewrite rule with constant leading monomial");
    for (const auto& [m, c] : r.replacement)
      if (grlex_compare(m, r.lead) >= 0)
        throw InputError("rewrite rule replacement is not smaller than its leading monomial");
  }
  ring->names_ = std::move(names);
  ring->rules_ = std::move(rules);
  ring->weights_ = options.weights.empty() ? std::vector<int>(n, 1) : std::move(options.weights);
  if (ring->weights_.size() != n) throw InputError("weight vector does not match the variable count");
  ring->truncation_ = options.truncation;
  ring->build_basis();
  return ring;
}

RingHandle QuotientRing::integers() {
  static const RingHandle z = create({});
  return z;
}

RewriteRule QuotientRing::rule_from_relation(const Polynomial& relation) {
  const Monomial lead = relation.leading_monomial();
  const Integer lc = relation.leading_coefficient();
  if (lc != 1 && lc != -1) throw InputError("relation leading coefficient must be +-1");
  Polynomial rest = relation - Polynomial::term(lead, lc);
  return {lead, -rest * lc};
}

std::optional<std::size_t> QuotientRing::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

const std::vector<Monomial>& QuotientRing::basis() const {
  if (!finite_) throw InputError("ring has no finite normal-form basis");
  return basis_;
}

std::optional<std::size_t> QuotientRing::basis_index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void QuotientRing::build_basis() {
  const std::size_t n = names_.size();
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& r : rules_) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (r.lead[i] > 0) ++support, var = i;
    if (support == 1 && (bound[var] == 0 || r.lead[var] < bound[var])) bound[var] = r.lead[var];
  }
  finite_ = std::all_of(bound.begin(), bound.end(), [](auto b) { return b > 0; });
  if (!finite_) return;

  // Enumerate the box below the pure-power bounds, keep irreducible monomials.
  Monomial m(n);
  for (;;) {
    bool reducible = false;
    for (const auto& r : rules_)
      if (r.lead.divides(m)) {
        reducible = true;
        break;
      }
    if (!reducible) basis_.push_back(m);
    std::size_t i = 0;
    while (i < n) {
      if (++m[i] < bound[i]) break;
      m[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(basis_.begin(), basis_.end(), [](const Monomial& a, const Monomial& b) { return grlex_compare(a, b) < 0; });
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);

  const std::size_t r = basis_.size();
  table_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Polynomial prod = reduce(Polynomial::term(basis_[i] * basis_[j], 1));
      std::vector<std::pair<std::size_t, Integer>> entry;
      for (const auto& [mono, c] : prod) entry.emplace_back(index_.at(mono), c);
      table_[i * r + j] = entry;
      table_[j * r + i] = std::move(entry);
    }
}

Polynomial QuotientRing::reduce(const Polynomial& p) const {
  if (p.nvars() != names_.size()) throw InputError("polynomial uses variables outside the ring");
  Polynomial result(names_.size());
  Polynomial work = p;
  if (truncation_) work = work.truncated(weights_, *truncation_);
  while (!work.is_zero()) {
    const Monomial m = work.leading_monomial();
    const Integer c = work.leading_coefficient();
    const RewriteRule* rule = nullptr;
    for (const auto& r : rules_)
      if (r.lead.divides(m)) {
        rule = &r;
        break;
      }
    work -= Polynomial::term(m, c);
    if (rule) {
      work += rule->replacement.shifted(rule->lead.quotient_of(m), c);
    } else {
      result.add_term(m, c);
    }
  }
  return result;
}

Polynomial QuotientRing::multiply(const Polynomial& a, const Polynomial& b) const {
  if (!finite_) {
    if (rules_.empty()) {
      Polynomial r = a * b;
      return truncation_ ? r.truncated(weights_, *truncation_) : r;
    }
    return reduce(a * b);
  }
  const std::size_t r = basis_.size();
  std::vector<std::pair<std::size_t, const Integer*>> ia, ib;
  for (const auto& [m, c] : a) ia.emplace_back(index_.at(m), &c);
  for (const auto& [m, c] : b) ib.emplace_back(index_.at(m), &c);
  std::vector<Integer> acc(r);
  Integer prod;
  for (const auto& [i, ca] : ia)
    for (const auto& [j, cb] : ib) {
      prod = *ca * *cb;
      for (const auto& [k, t] : table_[i * r + j]) acc[k] += prod * t;
    }
  return from_coordinates(acc);
}

std::vector<Integer> QuotientRing::coordinates(const Polynomial& normal_form) const {
  std::vector<Integer> out(basis().size());
  for (const auto& [m, c] : normal_form) {
    auto idx = basis_index(m);
    if (!idx) throw InputError("polynomial is not in normal form");
    out[*idx] = c;
  }
  return out;
}

Polynomial QuotientRing::from_coordinates(std::span<const Integer> coords) const {
  if (coords.size() != basis().size()) throw InputError("coordinate vector length does not match the ring rank");
  Polynomial p(names_.size());
  for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(basis_[i], coords[i]);
  return p;
}

// ---------------------------------------------------------------------------

RingElement::RingElement(RingHandle ring) : ring_(std::move(ring)), poly_(ring_->nvars()) {}

RingElement::RingElement(RingHandle ring, const Polynomial& p) : ring_(std::move(ring)), poly_(ring_->reduce(p)) {}

RingElement RingElement::from_integer(RingHandle ring, const Integer& c) {
  const auto n = ring->nvars();
  return RingElement(std::move(ring), Polynomial::constant(n, c));
}

RingElement RingElement::from_coordinates(RingHandle ring, std::span<const Integer> coords) {
  RingElement e(ring);
  e.poly_ = ring->from_coordinates(coords);
  return e;
}

RingElement RingElement::variable(RingHandle ring, std::size_t index) {
  const auto n = ring->nvars();
  return RingElement(std::move(ring), Polynomial::variable(n, index));
}

RingElement RingElement::parse(RingHandle ring, const std::string& text) {
  Polynomial p = parse_polynomial(text, ring->names());
  return RingElement(std::move(ring), p);
}

std::vector<Integer> RingElement::coordinates() const { return ring_->coordinates(poly_); }

std::string RingElement::to_string() const { return format_polynomial(poly_, ring_->names()); }

void RingElement::check_same_ring(const RingElement& o) const {
  if (ring_ != o.ring_) throw InputError("ring elements belong to different rings");
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same_ring(o);
  poly_ += o.poly_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_same_ring(o);
  poly_ -= o.poly_;
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  check_same_ring(o);
  if (poly_.is_zero()) return *this;
  if (o.poly_.is_zero()) {
    poly_ = Polynomial(ring_->nvars());
    return *this;
  }
  poly_ = ring_->multiply(poly_, o.poly_);
  return *this;
}

RingElement& RingElement::operator*=(const Integer& c) {
  poly_ *= c;
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  r.poly_ = -r.poly_;
  return r;
}

RingElement RingElement::pow(unsigned e) const {
  RingElement result = from_integer(ring_, 1);
  RingElement base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const RingElement& a, const RingElement& b) { return a.ring_ == b.ring_ && a.poly_ == b.poly_; }

RingElement normal_form(const Polynomial& p, const RingHandle& ring) { return RingElement(ring, p); }

}  // namespace lamk
