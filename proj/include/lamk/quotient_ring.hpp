#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lamk/polynomial.hpp"

namespace lamk {

/// leading monomial -> strictly smaller polynomial.
struct RewriteRule {
  Monomial lead;
  Polynomial replacement;
};

class QuotientRing;
using RingHandle = std::shared_ptr<const QuotientRing>;

/// A commutative ring Z[vars]/(relations) presented by a confluent rewrite
/// system, optionally truncated at a weighted degree. Immutable once built.
class QuotientRing {
 public:
  struct Options {
    std::vector<int> weights;                   // per variable, default 1
    std::optional<std::uint64_t> truncation;    // drop terms above this weighted degree
  };

  static RingHandle create(std::vector<std::string> names, std::vector<RewriteRule> rules = {},
                           Options options = {});
  static RingHandle integers();

  /// Turns "relation = 0" into "leading monomial -> rest"; the leading
  /// coefficient must be +-1.
  static RewriteRule rule_from_relation(const Polynomial& relation);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  std::optional<std::size_t> variable_index(const std::string& name) const;
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::span<const int> weights() const { return weights_; }
  const std::optional<std::uint64_t>& truncation() const { return truncation_; }

  /// True when the normal-form monomials form a finite Z-basis.
  bool finite() const { return finite_; }
  /// Normal-form basis in increasing grlex order (basis()[0] is 1). Finite rings only.
  const std::vector<Monomial>& basis() const;
  std::size_t rank() const { return basis_.size(); }
  std::optional<std::size_t> basis_index(const Monomial& m) const;

  /// Unique reduced representative; idempotent.
  Polynomial reduce(const Polynomial& p) const;
  /// Product of two normal forms, reduced.
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const;

  std::vector<Integer> coordinates(const Polynomial& normal_form) const;
  Polynomial from_coordinates(std::span<const Integer> coords) const;

 private:
  QuotientRing() = default;
  void build_basis();

  std::vector<std::string> names_;
  std::vector<RewriteRule> rules_;
  std::vector<int> weights_;
  std::optional<std::uint64_t> truncation_;
  bool finite_ = false;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, GrlexDescending> index_;
  // table_[i * rank + j] = normal form of basis_[i] * basis_[j] as (index, coefficient) pairs
  std::vector<std::vector<std::pair<std::size_t, Integer>>> table_;
};

/// Element of a QuotientRing, always held in normal form.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(RingHandle ring);
  RingElement(RingHandle ring, const Polynomial& p);

  static RingElement from_integer(RingHandle ring, const Integer& c);
  static RingElement from_coordinates(RingHandle ring, std::span<const Integer> coords);
  static RingElement variable(RingHandle ring, std::size_t index);
  static RingElement parse(RingHandle ring, const std::string& text);

  const RingHandle& ring() const { return ring_; }
  const Polynomial& polynomial() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  /// Integer coordinates over the normal-form basis (finite rings only).
  std::vector<Integer> coordinates() const;
  std::string to_string() const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  RingElement& operator*=(const Integer& c);
  RingElement operator-() const;
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator*(RingElement a, const Integer& c) { return a *= c; }
  friend RingElement operator*(const Integer& c, RingElement a) { return a *= c; }
  RingElement pow(unsigned e) const;

  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  void check_same_ring(const RingElement& o) const;
  RingHandle ring_;
  Polynomial poly_;
};

/// normal_form(p, ring): the unique reduced representative of p.
RingElement normal_form(const Polynomial& p, const RingHandle& ring);

}  // namespace lamk
