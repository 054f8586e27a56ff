#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lamk/lambda_ring.hpp"
#include "lamk/operations.hpp"

namespace lamk {

/// A class [O_Z] of codimension `codim`, with a provenance label.
struct CycleClass {
  int codim = 0;
  std::string label;
  RingElement cls;
};

struct SchemeModel;
using SchemeHandle = std::shared_ptr<const SchemeModel>;

/// A regular closed immersion i: Y -> X of codimension `codim`, given by
/// its pushforward on the basis of K_0(Y), its pullback on the generators
/// of K_0(X), and the conormal class N in K_0(Y).
struct ClosedEmbedding {
  std::string source_name;
  int source_dimension = 0;
  LambdaRingModel source;
  SchemeHandle target;
  int codim = 0;
  std::vector<RingElement> pushforward_basis;    // one per source basis element
  std::vector<RingElement> pullback_generators;  // one per target ring variable
  RingElement conormal;

  RingElement pushforward(const RingElement& x) const;
  RingElement pullback(const RingElement& y) const;
  DividedContext conormal_context() const { return DividedContext(source, conormal, codim); }
};

/// K_0 of a regular scheme of dimension d, with catalogued cycle classes.
struct SchemeModel {
  std::string name;
  int dimension = 0;
  LambdaRingModel model;
  std::vector<CycleClass> cycles;
  std::vector<ClosedEmbedding> embeddings;

  const RingHandle& ring() const { return model.ring(); }
  RingElement element(const std::string& expression) const { return model.element(expression); }
};

constexpr int kProjectiveSpaceCap = 10;

/// Inverse of a unipotent element u = 1 + (nilpotent), as a finite geometric series.
RingElement unipotent_inverse(const RingElement& u);

/// Z[h]/((h-1)^{n+1}) with h split, cycles (1 - h^{-1})^q for 0 <= q <= n.
SchemeModel projective_space(int n);

/// Tensor product of the rings; codim p+q cycles are the products of the factors' cycles.
SchemeModel product_model(const SchemeModel& a, const SchemeModel& b);

/// P^{n-1} in P^n: i_*(h_Y^k) = h^k (1 - h^{-1}), h -> h_Y, N = h_Y^{-1}.
ClosedEmbedding hyperplane_embedding(int n);

/// Raises LoadError naming the first violated invariant.
void validate_scheme(const SchemeModel& scheme);
void validate_embedding(const ClosedEmbedding& embedding);

}  // namespace lamk
