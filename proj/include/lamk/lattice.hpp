#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lamk/polynomial.hpp"

namespace lamk {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Row-style Hermite normal form: pivots strictly move right, pivot entries
/// positive, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns);

/// Nonzero diagonal of the Smith normal form, each dividing the next.
std::vector<Integer> smith_invariants(IntMatrix m, std::size_t columns);

/// A subgroup of Z^n, stored by its canonical HNF basis.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient_rank = 0) : ambient_(ambient_rank) {}

  static IntegerLattice from_generators(std::size_t ambient_rank, const IntMatrix& generators);
  static IntegerLattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const IntMatrix& basis() const { return basis_; }

  /// Integer coordinates of v over the basis rows, if v lies in the lattice.
  std::optional<IntVector> coordinates(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }
  bool contains(const IntegerLattice& other) const;

  IntegerLattice operator+(const IntegerLattice& other) const;
  IntegerLattice scaled(const Integer& c) const;
  IntegerLattice with_generators(const IntMatrix& more) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  IntMatrix basis_;
};

inline IntegerLattice lattice_from_generators(std::size_t ambient_rank, const IntMatrix& generators) {
  return IntegerLattice::from_generators(ambient_rank, generators);
}
inline bool lattice_member(const IntegerLattice& l, std::span<const Integer> v) { return l.contains(v); }
inline IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) { return a + b; }
inline bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) { return a == b; }

/// Structure of a finitely generated abelian group: Z^free_rank + sum Z/torsion[i].
struct GroupInvariants {
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  std::string to_string() const;
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

/// Invariants of ambient / sub; throws InputError unless sub is contained in ambient.
GroupInvariants quotient_invariants(const IntegerLattice& ambient, const IntegerLattice& sub);

}  // namespace lamk
