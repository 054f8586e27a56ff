#pragma once

#include <string>
#include <vector>

#include "lamk/quotient_ring.hpp"
#include "lamk/series.hpp"

namespace lamk {

/// How a generator's lambda-operations are determined.
///  Split: a line class, lambda_t(g) = 1 + g t, augmentation 1.
///  Free: lambda^1(g)..lambda^r(g) are independent ring variables and
///        lambda^k(g) = 0 for k > r.
enum class GeneratorKind { Split, Free };

struct LambdaGenerator {
  std::string name;
  GeneratorKind kind = GeneratorKind::Split;
  int rank_bound = 1;
  Integer augmentation = 1;
  /// Ring variable holding lambda^i(g) at position i-1.
  std::vector<std::size_t> symbols;
};

struct FreeGeneratorSpec {
  std::string name;
  int rank_bound;
  Integer augmentation = 0;
};

/// A presented Z-augmented lambda-ring: a QuotientRing whose variables are
/// the lambda-symbols of a list of generators.
class LambdaRingModel {
 public:
  LambdaRingModel() = default;
  LambdaRingModel(RingHandle ring, std::vector<LambdaGenerator> generators);

  /// Every ring variable becomes a split line class.
  static LambdaRingModel split(RingHandle ring);

  /// Polynomial ring on the lambda-symbols of free generators, followed by
  /// extra split generators. lambda^1(g) is named g; lambda^i(g) is g_l<i>.
  static LambdaRingModel free(const std::vector<FreeGeneratorSpec>& free_generators,
                              const std::vector<std::string>& split_generators = {});

  const RingHandle& ring() const { return ring_; }
  const std::vector<LambdaGenerator>& generators() const { return generators_; }
  const LambdaGenerator& generator(const std::string& name) const;

  /// lambda^i(g) as an element (zero above the rank bound).
  RingElement symbol(const std::string& generator, int i) const;
  RingElement element(const std::string& expression) const { return RingElement::parse(ring_, expression); }
  RingElement one() const { return RingElement::from_integer(ring_, 1); }
  RingElement zero() const { return RingElement(ring_); }

  struct VariableRole {
    std::size_t generator;
    int lambda_index;
  };
  const VariableRole& role(std::size_t variable) const { return roles_.at(variable); }

 private:
  RingHandle ring_;
  std::vector<LambdaGenerator> generators_;
  std::vector<VariableRole> roles_;
};

/// lambda_t(x) to order T. Sums go to series products, negatives to inverses,
/// products and lambda-symbols through the universal polynomials.
TruncatedSeries lambda_series(const RingElement& x, const LambdaRingModel& model, int order);

/// lambda^n(x); the series is computed to order max(n, 1).
RingElement lambda_op(const RingElement& x, int n, const LambdaRingModel& model);
/// As above with an explicit truncation order; n > order raises TruncationError.
RingElement lambda_op(const RingElement& x, int n, const LambdaRingModel& model, int order);

/// Ring morphism to Z; lambda-symbols map to binomial(epsilon(g), i).
Integer augmentation(const RingElement& x, const LambdaRingModel& model);

/// lambda_t(a b) from lambda_t(a) and lambda_t(b) via the universal product polynomials.
TruncatedSeries lambda_product(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace lamk
