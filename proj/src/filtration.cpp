#include "lamk/filtration.hpp"

#include <stdexcept>

#include "lamk/errors.hpp"

namespace lamk {

IntVector to_vector(const RingElement& x) { return x.coordinates(); }

RingElement from_vector(const RingHandle& ring, const IntVector& v) { return RingElement::from_coordinates(ring, v); }

IntegerLattice module_closure(const RingHandle& ring, const IntegerLattice& lattice) {
  const auto& basis = ring->basis();
  IntegerLattice current = lattice;
  for (;;) {
    IntMatrix gens;
    for (const auto& row : current.basis()) {
      const RingElement e = from_vector(ring, row);
      for (std::size_t i = 1; i < basis.size(); ++i) {
        IntVector v = to_vector(e * RingElement(ring, Polynomial::term(basis[i], 1)));
        if (!current.contains(v)) gens.push_back(std::move(v));
      }
    }
    if (gens.empty()) return current;
    current = current.with_generators(gens);
  }
}

IntegerLattice product_lattice(const RingHandle& ring, const IntegerLattice& a, const IntegerLattice& b) {
  IntMatrix gens;
  for (const auto& ra : a.basis()) {
    const RingElement ea = from_vector(ring, ra);
    for (const auto& rb : b.basis()) gens.push_back(to_vector(ea * from_vector(ring, rb)));
  }
  return IntegerLattice::from_generators(ring->rank(), gens);
}

IntegerLattice augmentation_ideal(const LambdaRingModel& model) {
  const auto& ring = model.ring();
  const auto& basis = ring->basis();
  IntMatrix gens;
  for (std::size_t i = 1; i < basis.size(); ++i) {
    RingElement b(ring, Polynomial::term(basis[i], 1));
    gens.push_back(to_vector(b - model.one() * augmentation(b, model)));
  }
  return IntegerLattice::from_generators(ring->rank(), gens);
}

Filtration::Filtration(Kind kind, std::string model_name, RingHandle ring, std::vector<IntegerLattice> levels,
                       std::vector<CycleClass> sources)
    : kind_(kind),
      model_name_(std::move(model_name)),
      ring_(std::move(ring)),
      levels_(std::move(levels)),
      sources_(std::move(sources)),
      zero_(ring_->rank()) {
  if (levels_.empty()) throw InputError("a filtration needs at least level 0");
}

const IntegerLattice& Filtration::level(int q) const {
  if (q <= 0) return levels_.front();
  if (q < static_cast<int>(levels_.size())) return levels_[static_cast<std::size_t>(q)];
  if (levels_.back().is_zero()) return zero_;
  throw TruncationError("filtration level " + std::to_string(q) + " beyond the computed range " +
                        std::to_string(max_q()));
}

std::string Filtration::level_name(int q) const {
  return std::string(kind_ == Kind::Gamma ? "gamma:" : "top:") + std::to_string(q);
}

GammaFiltration gamma_filtration(const LambdaRingModel& model, const std::string& name, int max_q, int weight_cap) {
  const auto& ring = model.ring();
  if (!ring->finite()) throw InputError("gamma filtration needs a ring with a finite normal-form basis");
  if (max_q < 0 || weight_cap < 1) throw InputError("gamma filtration bounds must be positive");
  const std::size_t rank = ring->rank();
  const auto& basis = ring->basis();

  // gamma^i(y_j) for the Z-basis y_j = b_j - epsilon(b_j) of ker(epsilon).
  std::vector<RingElement> gammas;
  std::vector<int> weights;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    RingElement b(ring, Polynomial::term(basis[j], 1));
    const RingElement y = b - model.one() * augmentation(b, model);
    const auto series = series_substitute_gamma(lambda_series(y, model, weight_cap));
    for (int i = 1; i <= weight_cap; ++i)
      if (!series[i].is_zero()) {
        gammas.push_back(series[i]);
        weights.push_back(i);
      }
  }

  std::vector<IntegerLattice> levels{IntegerLattice::full(rank)};
  for (int q = 1; q <= max_q; ++q) {
    // Every monomial of weight >= q factors as gamma^i(y) times a monomial of weight >= q - i.
    IntMatrix gens;
    for (std::size_t g = 0; g < gammas.size(); ++g) {
      const auto& prev = levels[static_cast<std::size_t>(std::max(q - weights[g], 0))];
      for (const auto& row : prev.basis()) gens.push_back(to_vector(gammas[g] * from_vector(ring, row)));
    }
    levels.push_back(module_closure(ring, IntegerLattice::from_generators(rank, gens)));
  }
  return Filtration(Filtration::Kind::Gamma, name, ring, std::move(levels));
}

GammaFiltration gamma_filtration(const SchemeModel& scheme, int max_q) {
  const int q = max_q < 0 ? scheme.dimension + 1 : max_q;
  return gamma_filtration(scheme.model, scheme.name, q, std::max(q, scheme.dimension + 1));
}

TopFiltration top_filtration(const SchemeModel& scheme, int max_q) {
  const auto& ring = scheme.ring();
  if (!ring->finite()) throw InputError("coniveau filtration needs a ring with a finite normal-form basis");
  if (scheme.cycles.empty()) throw InputError("model '" + scheme.name + "' carries no cycle classes");
  const int top = max_q < 0 ? scheme.dimension + 1 : max_q;
  std::vector<IntegerLattice> levels;
  for (int q = 0; q <= top; ++q) {
    IntMatrix gens;
    for (const auto& c : scheme.cycles)
      if (c.codim >= q) gens.push_back(to_vector(c.cls));
    levels.push_back(module_closure(ring, IntegerLattice::from_generators(ring->rank(), gens)));
  }
  return Filtration(Filtration::Kind::Top, scheme.name, ring, std::move(levels), scheme.cycles);
}

bool filtration_member(const RingElement& x, const IntegerLattice& level) { return level.contains(to_vector(x)); }

GradedPiece graded_piece(const Filtration& filtration, int q) {
  const auto& upper = filtration.level(q);
  const auto& lower = filtration.level(q + 1);
  if (!upper.contains(lower))
    throw std::logic_error("filtration is not decreasing between levels " + std::to_string(q) + " and " +
                           std::to_string(q + 1));
  GradedPiece piece;
  piece.group = quotient_invariants(upper, lower);
  piece.rational_rank = upper.rank() - lower.rank();
  return piece;
}

}  // namespace lamk
