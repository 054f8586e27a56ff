#include "lamk/model_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "lamk/errors.hpp"
#include "lamk/expression.hpp"

namespace lamk {

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"P0",    "P1",    "P2",    "P3",    "P4",    "P5",   "P1xP1",
                                              "P2xP1", "P3xP1", "P4xP1", "P2xP2", "P3xP2", "P1xP1xP1"};
  return names;
}

std::optional<SchemeModel> builtin_model(const std::string& name) {
  static const std::regex shape("P(\\d{1,2})(xP\\d{1,2})*");
  if (!std::regex_match(name, shape)) return std::nullopt;
  std::optional<SchemeModel> result;
  std::stringstream in(name);
  std::string factor;
  while (std::getline(in, factor, 'x')) {
    SchemeModel p = projective_space(std::stoi(factor.substr(1)));
    result = result ? product_model(*result, p) : std::move(p);
  }
  return result;
}

namespace {

using nlohmann::json;

RingElement parse_in(const RingHandle& ring, const std::string& text, const std::string& where) {
  try {
    return RingElement::parse(ring, text);
  } catch (const InputError& e) {
    throw LoadError(where + ": " + e.what());
  }
}

template <class T>
T field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw LoadError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw LoadError(where + ": field '" + std::string(key) + "' has the wrong type");
  }
}

}  // namespace

SchemeModel parse_model_description(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("model description is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw LoadError("model description must be a JSON object");

  const auto name = field<std::string>(doc, "name", "model");
  const auto dimension = field<int>(doc, "dimension", name);
  const auto generators = field<json>(doc, "generators", name);
  if (!generators.is_array()) throw LoadError(name + ": 'generators' must be an array");

  // Each generator g is a split line class with (g - 1)^relationDegree = 0.
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& g : generators) {
    names.push_back(field<std::string>(g, "name", name + " generator"));
    degrees.push_back(field<int>(g, "relationDegree", name + " generator '" + names.back() + "'"));
    if (degrees.back() < 1) throw LoadError(name + ": relationDegree of '" + names.back() + "' must be positive");
  }
  std::vector<RewriteRule> rules;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const Polynomial base = Polynomial::variable(names.size(), i) - Polynomial::constant(names.size(), 1);
    rules.push_back(QuotientRing::rule_from_relation(base.pow(static_cast<unsigned>(degrees[i]))));
  }
  RingHandle ring;
  try {
    ring = QuotientRing::create(names, rules);
  } catch (const InputError& e) {
    throw LoadError(name + ": " + e.what());
  }

  SchemeModel s{name, dimension, LambdaRingModel::split(ring), {}, {}};
  if (doc.contains("cycles")) {
    for (const auto& c : doc.at("cycles")) {
      const auto label = field<std::string>(c, "label", name + " cycle");
      const auto where = name + " cycle '" + label + "'";
      s.cycles.push_back(CycleClass{field<int>(c, "codim", where), label,
                                    parse_in(ring, field<std::string>(c, "polynomial", where), where)});
    }
  }
  if (doc.contains("embeddings")) {
    for (const auto& e : doc.at("embeddings")) {
      const auto target_name = field<std::string>(e, "target", name + " embedding");
      const auto where = name + " embedding into '" + target_name + "'";
      auto target = builtin_model(target_name);
      if (!target) throw LoadError(where + ": target must be a builtin model");
      ClosedEmbedding emb;
      emb.source_name = name;
      emb.source_dimension = dimension;
      emb.source = s.model;
      emb.target = std::make_shared<const SchemeModel>(std::move(*target));
      emb.codim = emb.target->dimension - dimension;
      const auto& tr = emb.target->ring();

      const auto table = field<json>(e, "pushforward", where);
      emb.pushforward_basis.assign(ring->rank(), RingElement(tr));
      std::vector<bool> given(ring->rank(), false);
      for (const auto& [mono, value] : table.items()) {
        const RingElement m = parse_in(ring, mono, where + " pushforward key");
        const auto idx = m.polynomial().size() == 1 && m.polynomial().leading_coefficient() == 1
                             ? ring->basis_index(m.polynomial().leading_monomial())
                             : std::nullopt;
        if (!idx) throw LoadError(where + ": pushforward key '" + mono + "' is not a basis monomial");
        if (!value.is_string()) throw LoadError(where + ": pushforward values must be polynomial strings");
        emb.pushforward_basis[*idx] = parse_in(tr, value.get<std::string>(), where + " pushforward");
        given[*idx] = true;
      }
      for (std::size_t i = 0; i < given.size(); ++i)
        if (!given[i])
          throw LoadError(where + ": pushforward missing for basis monomial " +
                          format_monomial(ring->basis()[i], ring->names()));

      // Default pullback sends each target generator to the source generator of the same name.
      for (const auto& var : tr->names()) {
        std::string image = var;
        if (e.contains("pullback") && e.at("pullback").contains(var)) image = e.at("pullback").at(var).get<std::string>();
        emb.pullback_generators.push_back(parse_in(ring, image, where + " pullback of '" + var + "'"));
      }
      emb.conormal = parse_in(ring, field<std::string>(e, "conormal", where), where + " conormal");
      s.embeddings.push_back(std::move(emb));
    }
  }
  validate_scheme(s);
  return s;
}

SchemeModel load_model(const std::string& description) {
  if (auto b = builtin_model(description)) {
    validate_scheme(*b);
    return std::move(*b);
  }
  std::ifstream in(description);
  if (!in) throw InputError("unknown model '" + description + "': not a builtin name and not a readable file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model_description(buffer.str());
}

}  // namespace lamk
