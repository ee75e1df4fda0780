#include "kzero/kring_io.hpp"

#include <stdexcept>

namespace kzero {

using nlohmann::json;

json terms_to_json(const SparseTerms& terms) {
  json out = json::array();
  for (const auto& [m, c] : terms) out.push_back({{"exponents", m}, {"coefficient", c}});
  return out;
}

SparseTerms terms_from_json(const json& doc, std::size_t num_vars, std::size_t width) {
  if (!doc.is_array()) throw std::invalid_argument("terms must be an array");
  SparseTerms out;
  for (const auto& t : doc) {
    const auto m = t.at("exponents").get<Monomial>();
    const auto c = t.at("coefficient").get<std::vector<Int>>();
    if (m.size() != num_vars || c.size() != width) throw std::invalid_argument("term has the wrong shape");
    if (!out.emplace(m, c).second) throw std::invalid_argument("duplicate exponent tuple in terms");
  }
  return out;
}

json algebra_to_json(const PresentedAlgebra& algebra) {
  json vars = json::array();
  for (std::size_t i = 0; i < algebra.num_vars(); ++i)
    vars.push_back({{"name", algebra.var_names()[i]},
                    {"bound", algebra.bounds()[i]},
                    {"rule", terms_to_json(algebra.rules()[i].terms())}});
  const auto& p = algebra.provenance();
  json prov = {{"kind", p.kind}, {"r", p.r}, {"note", p.note}};
  if (p.ambient) prov["ambient"] = p.ambient->mults();
  return {{"base", algebra.base()->name()},
          {"irreducibles", algebra.base()->names()},
          {"free_rank", algebra.free_rank()},
          {"provenance", prov},
          {"variables", vars}};
}

AlgebraPtr algebra_from_json(const json& doc, const TablePtr& base) {
  if (doc.at("base").get<std::string>() != base->name())
    throw std::invalid_argument("algebra document is over " + doc.at("base").get<std::string>() + ", not " +
                                base->name());
  const auto& vars = doc.at("variables");
  const std::size_t r = vars.size();
  std::vector<std::string> names;
  std::vector<int> bounds;
  std::vector<Polynomial> rules;
  for (const auto& v : vars) {
    names.push_back(v.at("name").get<std::string>());
    bounds.push_back(v.at("bound").get<int>());
    Polynomial rule(base, r);
    for (const auto& [m, c] : terms_from_json(v.at("rule"), r, base->size())) rule.add_term(m, c);
    rules.push_back(std::move(rule));
  }
  Provenance prov;
  if (doc.contains("provenance")) {
    const auto& p = doc["provenance"];
    prov.kind = p.value("kind", "");
    prov.r = p.value("r", 0);
    prov.note = p.value("note", "");
    if (p.contains("ambient")) prov.ambient = VirtualCharacter(base, p["ambient"].get<std::vector<Int>>());
  }
  return PresentedAlgebra::create(base, std::move(names), std::move(bounds), std::move(rules), std::move(prov));
}

json element_to_json(const AlgebraElement& x) {
  SparseTerms terms;
  for (const auto& [m, c] : x.terms()) terms.emplace(m, c.mults());
  return {{"terms", terms_to_json(terms)}};
}

AlgebraElement element_from_json(const json& doc, const AlgebraPtr& algebra) {
  Polynomial p(algebra->base(), algebra->num_vars());
  for (const auto& [m, c] : terms_from_json(doc.at("terms"), algebra->num_vars(), algebra->base()->size()))
    p.add_term(m, c);
  return reduce(p, algebra);
}

}  // namespace kzero
