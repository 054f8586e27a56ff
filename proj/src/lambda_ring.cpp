#include "lamk/lambda_ring.hpp"

#include <map>

#include "lamk/errors.hpp"
#include "lamk/universal.hpp"

namespace lamk {

LambdaRingModel::LambdaRingModel(RingHandle ring, std::vector<LambdaGenerator> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  const std::size_t nv = ring_->nvars();
  std::vector<bool> claimed(nv, false);
  roles_.assign(nv, VariableRole{0, 0});
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    auto& gen = generators_[g];
    if (gen.kind == GeneratorKind::Split) {
      gen.rank_bound = 1;
      gen.augmentation = 1;
      if (gen.symbols.size() != 1) throw InputError("split generator '" + gen.name + "' needs exactly one variable");
    } else {
      if (gen.rank_bound < 1) throw InputError("free generator '" + gen.name + "' needs a positive rank bound");
      if (gen.symbols.size() != static_cast<std::size_t>(gen.rank_bound))
        throw InputError("free generator '" + gen.name + "' needs one variable per lambda-symbol");
      if (gen.augmentation < 0 || gen.augmentation > gen.rank_bound)
        throw InputError("augmentation of free generator '" + gen.name + "' must lie in [0, rank bound]");
    }
    for (std::size_t i = 0; i < gen.symbols.size(); ++i) {
      const auto v = gen.symbols[i];
      if (v >= nv || claimed[v]) throw InputError("lambda-symbol variable assigned twice or out of range");
      claimed[v] = true;
      roles_[v] = VariableRole{g, static_cast<int>(i) + 1};
    }
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (!claimed[v]) throw InputError("ring variable '" + ring_->names()[v] + "' has no lambda data");
}

LambdaRingModel LambdaRingModel::split(RingHandle ring) {
  std::vector<LambdaGenerator> gens;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    gens.push_back(LambdaGenerator{ring->names()[v], GeneratorKind::Split, 1, 1, {v}});
  return LambdaRingModel(std::move(ring), std::move(gens));
}

LambdaRingModel LambdaRingModel::free(const std::vector<FreeGeneratorSpec>& free_generators,
                                      const std::vector<std::string>& split_generators) {
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<LambdaGenerator> gens;
  for (const auto& spec : free_generators) {
    LambdaGenerator g{spec.name, GeneratorKind::Free, spec.rank_bound, spec.augmentation, {}};
    for (int i = 1; i <= spec.rank_bound; ++i) {
      g.symbols.push_back(names.size());
      names.push_back(i == 1 ? spec.name : spec.name + "_l" + std::to_string(i));
      weights.push_back(i);
    }
    gens.push_back(std::move(g));
  }
  for (const auto& s : split_generators) {
    gens.push_back(LambdaGenerator{s, GeneratorKind::Split, 1, 1, {names.size()}});
    names.push_back(s);
    weights.push_back(1);
  }
  auto ring = QuotientRing::create(std::move(names), {}, QuotientRing::Options{std::move(weights), std::nullopt});
  return LambdaRingModel(std::move(ring), std::move(gens));
}

const LambdaGenerator& LambdaRingModel::generator(const std::string& name) const {
  for (const auto& g : generators_)
    if (g.name == name) return g;
  throw InputError("unknown generator '" + name + "'");
}

RingElement LambdaRingModel::symbol(const std::string& name, int i) const {
  const auto& g = generator(name);
  if (i < 0) throw InputError("negative lambda index");
  if (i == 0) return one();
  if (i > g.rank_bound) return zero();
  return RingElement::variable(ring_, g.symbols[static_cast<std::size_t>(i - 1)]);
}

TruncatedSeries lambda_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.ring() != b.ring()) throw InputError("series over different rings");
  const int t = std::min(a.order(), b.order());
  const auto& ring = a.ring();
  TruncatedSeries r = TruncatedSeries::one(ring, t);
  bool a_linear = true, b_linear = true;
  for (int k = 2; k <= t; ++k) {
    a_linear = a_linear && a[k].is_zero();
    b_linear = b_linear && b[k].is_zero();
  }
  if (a_linear && b_linear) {
    // Product of line-like elements stays line-like.
    if (t >= 1) r[1] = a[1] * b[1];
    return r;
  }
  const auto one = RingElement::from_integer(ring, 1);
  const auto scale = [](const RingElement& e, const Integer& c) { return e * c; };
  for (int k = 1; k <= t; ++k) {
    const auto u = universal_product_poly(k);
    std::vector<RingElement> values;
    for (int i = 1; i <= k; ++i) values.push_back(a[i]);
    for (int i = 1; i <= k; ++i) values.push_back(b[i]);
    r[k] = evaluate<RingElement>(u->expr, values, one, scale);
  }
  return r;
}

namespace {

TruncatedSeries variable_series(const LambdaRingModel& model, std::size_t var, int order) {
  const auto& ring = model.ring();
  const auto& role = model.role(var);
  const auto& gen = model.generators()[role.generator];
  if (gen.kind == GeneratorKind::Split) return TruncatedSeries::linear(RingElement::variable(ring, var), order);
  // lambda^k(lambda^i(g)) through the composition polynomial on g's symbols.
  const auto one = RingElement::from_integer(ring, 1);
  const auto scale = [](const RingElement& e, const Integer& c) { return e * c; };
  TruncatedSeries s = TruncatedSeries::one(ring, order);
  for (int k = 1; k <= order; ++k) {
    const auto u = universal_compose_poly(k, role.lambda_index, gen.rank_bound);
    std::vector<RingElement> values;
    for (int j = 1; j <= u->rank; ++j)
      values.push_back(j <= gen.rank_bound ? RingElement::variable(ring, gen.symbols[static_cast<std::size_t>(j - 1)])
                                           : RingElement(ring));
    s[k] = evaluate<RingElement>(u->expr, values, one, scale);
  }
  return s;
}

}  // namespace

TruncatedSeries lambda_series(const RingElement& x, const LambdaRingModel& model, int order) {
  if (order < 1) throw InputError("lambda series needs truncation order >= 1");
  const auto& ring = model.ring();
  if (x.ring() != ring) throw InputError("element does not belong to the model's ring");
  std::map<std::size_t, TruncatedSeries> var_cache;
  auto var_series = [&](std::size_t v) -> const TruncatedSeries& {
    auto it = var_cache.find(v);
    if (it == var_cache.end()) it = var_cache.emplace(v, variable_series(model, v, order)).first;
    return it->second;
  };

  TruncatedSeries result = TruncatedSeries::one(ring, order);
  for (const auto& [m, c] : x.polynomial()) {
    std::optional<TruncatedSeries> mono;
    for (std::size_t v = 0; v < m.nvars(); ++v)
      for (std::uint32_t e = 0; e < m[v]; ++e)
        mono = mono ? lambda_product(*mono, var_series(v)) : var_series(v);
    if (!mono) mono = TruncatedSeries::linear(RingElement::from_integer(ring, 1), order);
    result = result * series_pow(*mono, c);
  }
  return result;
}

RingElement lambda_op(const RingElement& x, int n, const LambdaRingModel& model) {
  if (n < 0) throw InputError("lambda index must be non-negative");
  if (n == 0) return RingElement::from_integer(x.ring(), 1);
  return lambda_series(x, model, n)[n];
}

RingElement lambda_op(const RingElement& x, int n, const LambdaRingModel& model, int order) {
  if (n > order)
    throw TruncationError("lambda^" + std::to_string(n) + " requested beyond truncation order " + std::to_string(order));
  return lambda_op(x, n, model);
}

Integer augmentation(const RingElement& x, const LambdaRingModel& model) {
  const auto& ring = model.ring();
  if (x.ring() != ring) throw InputError("element does not belong to the model's ring");
  std::vector<Integer> values(ring->nvars());
  for (std::size_t v = 0; v < values.size(); ++v) {
    const auto& role = model.role(v);
    const auto& gen = model.generators()[role.generator];
    values[v] = binomial(gen.augmentation, static_cast<unsigned long>(role.lambda_index));
  }
  Integer total = 0;
  for (const auto& [m, c] : x.polynomial()) {
    Integer t = c;
    for (std::size_t v = 0; v < m.nvars() && t != 0; ++v)
      for (std::uint32_t e = 0; e < m[v]; ++e) t *= values[v];
    total += t;
  }
  return total;
}

}  // namespace lamk
