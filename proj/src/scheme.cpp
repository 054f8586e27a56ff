#include "lamk/scheme.hpp"

#include <cctype>
#include <map>

#include "lamk/errors.hpp"
#include "lamk/filtration.hpp"

namespace lamk {

namespace {

RingElement evaluate_into(const Polynomial& p, const std::vector<RingElement>& values, const RingHandle& ring) {
  const auto one = RingElement::from_integer(ring, 1);
  const auto scale = [](const RingElement& e, const Integer& c) { return e * c; };
  return evaluate<RingElement>(p, values, one, scale);
}

std::string stem_of(const std::string& name) {
  std::size_t end = name.size();
  while (end > 1 && std::isdigit(static_cast<unsigned char>(name[end - 1]))) --end;
  return name.substr(0, end);
}

}  // namespace

RingElement unipotent_inverse(const RingElement& u) {
  const auto& ring = u.ring();
  const auto one = RingElement::from_integer(ring, 1);
  // u^{-1} = sum_k (1 - u)^k, which terminates when 1 - u is nilpotent.
  const RingElement n = one - u;
  RingElement term = one, sum = one;
  const std::size_t limit = ring->finite() ? ring->rank() + 1 : 64;
  for (std::size_t k = 1; k <= limit; ++k) {
    term *= n;
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw InputError("element " + u.to_string() + " is not unipotent");
}

SchemeModel projective_space(int n) {
  if (n < 0 || n > kProjectiveSpaceCap)
    throw InputError("projective space dimension " + std::to_string(n) + " outside [0, " +
                     std::to_string(kProjectiveSpaceCap) + "]");
  const Polynomial h_minus_one = Polynomial::variable(1, 0) - Polynomial::constant(1, 1);
  auto ring = QuotientRing::create({"h"}, {QuotientRing::rule_from_relation(h_minus_one.pow(static_cast<unsigned>(n + 1)))});
  SchemeModel s{"P" + std::to_string(n), n, LambdaRingModel::split(ring), {}, {}};
  const RingElement one = s.model.one();
  const RingElement hyperplane = one - unipotent_inverse(RingElement::variable(ring, 0));
  RingElement power = one;
  for (int q = 0; q <= n; ++q) {
    s.cycles.push_back(CycleClass{q, "linear subspace codim " + std::to_string(q), power});
    power *= hyperplane;
  }
  return s;
}

SchemeModel product_model(const SchemeModel& a, const SchemeModel& b) {
  const auto& ra = a.ring();
  const auto& rb = b.ring();
  if (!ra->finite() || !rb->finite()) throw InputError("product of models needs finite-rank rings");
  const std::size_t na = ra->nvars(), n = na + rb->nvars();

  std::vector<std::string> names = ra->names();
  names.insert(names.end(), rb->names().begin(), rb->names().end());
  // Rename with a running index per stem when the factors share a stem (h, h -> h1, h2).
  std::map<std::string, int> seen;
  for (const auto& nm : names) ++seen[stem_of(nm)];
  bool clash = false;
  for (const auto& [nm, c] : seen) clash = clash || c > 1;
  if (clash) {
    std::map<std::string, int> counter;
    for (auto& nm : names) {
      const std::string stem = stem_of(nm);
      nm = stem + std::to_string(++counter[stem]);
    }
  }

  std::vector<RewriteRule> rules;
  const auto widen = [n](const Monomial& m, std::size_t offset) {
    Monomial w(n);
    for (std::size_t i = 0; i < m.nvars(); ++i) w[offset + i] = m[i];
    return w;
  };
  for (const auto& r : ra->rules()) rules.push_back(RewriteRule{widen(r.lead, 0), r.replacement.widened(n, 0)});
  for (const auto& r : rb->rules()) rules.push_back(RewriteRule{widen(r.lead, na), r.replacement.widened(n, na)});
  std::vector<int> weights(ra->weights().begin(), ra->weights().end());
  weights.insert(weights.end(), rb->weights().begin(), rb->weights().end());
  auto ring = QuotientRing::create(names, rules, QuotientRing::Options{weights, std::nullopt});

  std::vector<LambdaGenerator> gens;
  for (auto g : a.model.generators()) {
    g.name = names[g.symbols.front()];
    gens.push_back(g);
  }
  for (auto g : b.model.generators()) {
    for (auto& v : g.symbols) v += na;
    g.name = names[g.symbols.front()];
    gens.push_back(g);
  }
  SchemeModel s{a.name + "x" + b.name, a.dimension + b.dimension, LambdaRingModel(ring, gens), {}, {}};
  for (const auto& ca : a.cycles)
    for (const auto& cb : b.cycles) {
      const RingElement x = normal_form(ca.cls.polynomial().widened(n, 0), ring);
      const RingElement y = normal_form(cb.cls.polynomial().widened(n, na), ring);
      s.cycles.push_back(CycleClass{ca.codim + cb.codim, ca.label + " x " + cb.label, x * y});
    }
  return s;
}

RingElement ClosedEmbedding::pushforward(const RingElement& x) const {
  if (x.ring() != source.ring()) throw InputError("pushforward argument is not in the source ring");
  const auto coords = x.coordinates();
  RingElement r(target->ring());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) r += pushforward_basis.at(i) * coords[i];
  return r;
}

RingElement ClosedEmbedding::pullback(const RingElement& y) const {
  if (y.ring() != target->ring()) throw InputError("pullback argument is not in the target ring");
  return evaluate_into(y.polynomial(), pullback_generators, source.ring());
}

ClosedEmbedding hyperplane_embedding(int n) {
  if (n < 1) throw InputError("hyperplane embedding needs n >= 1");
  auto target = std::make_shared<const SchemeModel>(projective_space(n));
  const SchemeModel y = projective_space(n - 1);
  ClosedEmbedding e;
  e.source_name = y.name;
  e.source_dimension = y.dimension;
  e.source = y.model;
  e.target = target;
  e.codim = 1;
  const auto& tr = target->ring();
  const RingElement h = RingElement::variable(tr, 0);
  const RingElement koszul = target->model.one() - unipotent_inverse(h);
  for (const auto& m : y.ring()->basis()) e.pushforward_basis.push_back(h.pow(m[0]) * koszul);
  const RingElement hy = RingElement::variable(y.ring(), 0);
  e.pullback_generators = {hy};
  e.conormal = unipotent_inverse(hy);
  return e;
}

void validate_scheme(const SchemeModel& scheme) {
  const auto& ring = scheme.ring();
  const auto fail = [&](const std::string& what) {
    throw LoadError("model '" + scheme.name + "' violates invariant: " + what);
  };
  if (!ring->finite()) fail("ring must have a finite normal-form basis");
  if (scheme.dimension < 0) fail("dimension must be non-negative");

  // nilpotency degree of ker(epsilon): I^d != 0 and I^{d+1} = 0
  const IntegerLattice ideal = augmentation_ideal(scheme.model);
  IntegerLattice power = IntegerLattice::full(ring->rank());
  int degree = 0;
  while (!power.is_zero()) {
    if (degree > scheme.dimension) break;
    power = degree == 0 ? ideal : product_lattice(ring, power, ideal);
    ++degree;
  }
  // after the loop power = I^degree; the degree at which it first vanishes is d + 1
  if (!power.is_zero() || degree != scheme.dimension + 1)
    fail("dimension " + std::to_string(scheme.dimension) + " must equal the nilpotency degree of the augmentation ideal");

  for (const auto& c : scheme.cycles) {
    if (c.cls.ring() != ring) fail("cycle '" + c.label + "' is not an element of the model's ring");
    if (c.codim < 0 || c.codim > scheme.dimension)
      fail("cycle '" + c.label + "' has codimension outside [0, dimension]");
    if (c.codim >= 1 && augmentation(c.cls, scheme.model) != 0)
      fail("cycle '" + c.label + "' of codimension >= 1 must have augmentation 0");
  }
  for (const auto& e : scheme.embeddings) validate_embedding(e);
}

void validate_embedding(const ClosedEmbedding& e) {
  const auto fail = [&](const std::string& what) {
    throw LoadError("embedding of '" + e.source_name + "' violates invariant: " + what);
  };
  if (!e.target) fail("missing target model");
  const auto& sr = e.source.ring();
  const auto& tr = e.target->ring();
  if (!sr->finite() || !tr->finite()) fail("rings must have finite normal-form bases");
  if (e.pushforward_basis.size() != sr->rank()) fail("pushforward must be given on every source basis element");
  if (e.pullback_generators.size() != tr->nvars()) fail("pullback must be given on every target generator");
  if (e.codim < 1) fail("codimension must be positive");

  // pullback respects the target relations
  for (const auto& r : tr->rules()) {
    const Polynomial rel = Polynomial::term(r.lead, 1) - r.replacement;
    if (!evaluate_into(rel, e.pullback_generators, sr).is_zero()) fail("pullback is not a ring morphism");
  }
  // projection formula on basis pairs
  for (const auto& tm : tr->basis()) {
    const RingElement s(tr, Polynomial::term(tm, 1));
    const RingElement ps = e.pullback(s);
    for (const auto& sm : sr->basis()) {
      const RingElement x(sr, Polynomial::term(sm, 1));
      const RingElement lhs = e.pushforward(ps * x), rhs = s * e.pushforward(x);
      if (!(lhs == rhs))
        fail("projection formula fails for s = " + s.to_string() + ", x = " + x.to_string() + ": " + lhs.to_string() +
             " != " + rhs.to_string());
    }
  }
  const auto top = top_filtration(*e.target);
  if (!filtration_member(e.pushforward(e.source.one()), top.level(e.codim)))
    fail("pushforward of 1 must lie in coniveau level " + std::to_string(e.codim));
  if (augmentation(e.conormal, e.source) != e.codim) fail("conormal class must have rank equal to the codimension");
  try {
    (void)e.conormal_context();
  } catch (const InputError&) {
    fail("conormal class must satisfy lambda^k(N) = 0 for k > codimension");
  }
}

}  // namespace lamk
