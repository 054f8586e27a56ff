#pragma once

#include <string>
#include <vector>

#include "lamk/lattice.hpp"
#include "lamk/scheme.hpp"

namespace lamk {

/// Coordinates of a finite-rank ring element as a lattice vector.
IntVector to_vector(const RingElement& x);
RingElement from_vector(const RingHandle& ring, const IntVector& v);

/// Smallest sub-lattice containing `lattice` and closed under multiplication
/// by the ring's basis monomials.
IntegerLattice module_closure(const RingHandle& ring, const IntegerLattice& lattice);

/// Span of all products a*b with a, b basis vectors of the two lattices.
IntegerLattice product_lattice(const RingHandle& ring, const IntegerLattice& a, const IntegerLattice& b);

/// ker(epsilon) as a lattice.
IntegerLattice augmentation_ideal(const LambdaRingModel& model);

/// A decreasing chain of lattices Fil^0 ⊇ Fil^1 ⊇ ... ⊇ Fil^maxQ.
class Filtration {
 public:
  enum class Kind { Gamma, Top };

  Filtration(Kind kind, std::string model_name, RingHandle ring, std::vector<IntegerLattice> levels,
             std::vector<CycleClass> sources = {});

  Kind kind() const { return kind_; }
  const std::string& model_name() const { return model_name_; }
  const RingHandle& ring() const { return ring_; }
  int max_q() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<CycleClass>& sources() const { return sources_; }

  /// Fil^q; the whole ring for q <= 0 and zero beyond max_q once the chain has reached zero.
  const IntegerLattice& level(int q) const;
  std::string level_name(int q) const;

 private:
  Kind kind_;
  std::string model_name_;
  RingHandle ring_;
  std::vector<IntegerLattice> levels_;
  std::vector<CycleClass> sources_;
  IntegerLattice zero_;
};

using GammaFiltration = Filtration;
using TopFiltration = Filtration;

/// Fil^q_gamma for q = 0..max_q: generated by products gamma^{i_1}(y_1)...gamma^{i_p}(y_p)
/// of augmentation-zero basis elements with i_j <= weight_cap and sum i_j >= q.
GammaFiltration gamma_filtration(const LambdaRingModel& model, const std::string& name, int max_q, int weight_cap);
/// Defaults: max_q = weight_cap = dimension + 1.
GammaFiltration gamma_filtration(const SchemeModel& scheme, int max_q = -1);

/// Fil^q_top: module closure of the catalogued cycle classes of codimension >= q.
TopFiltration top_filtration(const SchemeModel& scheme, int max_q = -1);

bool filtration_member(const RingElement& x, const IntegerLattice& level);

struct GradedPiece {
  GroupInvariants group;
  std::size_t rational_rank = 0;
};

/// Fil^q / Fil^{q+1}; throws std::logic_error if the chain is not decreasing there.
GradedPiece graded_piece(const Filtration& filtration, int q);

}  // namespace lamk
