#include "kzero/table_io.hpp"

#include "kzero/catalog.hpp"

#include <fstream>
#include <sstream>

namespace kzero {

using nlohmann::json;

namespace {

Int exact_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ValidationError("document format", what + " must be an exact integer");
  return v.get<Int>();
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw ValidationError("document format", where + " is missing field '" + key + "'");
  return obj.at(key);
}

}  // namespace

json table_to_json(const CharacterTable& table) {
  const auto& g = table.group();
  json classes = json::array();
  for (const auto& c : g.classes) classes.push_back({{"label", c.label}, {"size", c.size}});
  json rows = json::array();
  for (const auto& row : table.rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(std::vector<Int>(v.coeffs().begin(), v.coeffs().end()));
    rows.push_back(std::move(r));
  }
  json names = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) names.push_back(table.irreducible_name(i));
  return {{"group",
           {{"name", g.name}, {"order", g.order}, {"exponent", g.exponent}, {"classes", classes}, {"power_map", g.power_map}}},
          {"table", {{"degrees", table.degrees()}, {"names", names}, {"rows", rows}}}};
}

TablePtr table_from_json(const json& doc) {
  const json& gj = field(doc, "group", "document");
  const json& tj = field(doc, "table", "document");
  FiniteGroupData g;
  g.name = field(gj, "name", "group").get<std::string>();
  g.order = exact_int(field(gj, "order", "group"), "group.order");
  g.exponent = static_cast<int>(exact_int(field(gj, "exponent", "group"), "group.exponent"));
  if (g.exponent < 1) throw ValidationError("group exponent", "exponent must be positive");
  for (const auto& c : field(gj, "classes", "group")) {
    g.classes.push_back({field(c, "label", "class").get<std::string>(), exact_int(field(c, "size", "class"), "class size")});
  }
  for (const auto& row : field(gj, "power_map", "group")) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(static_cast<int>(exact_int(v, "power_map entry")));
    g.power_map.push_back(std::move(r));
  }
  std::vector<Int> degrees;
  for (const auto& d : field(tj, "degrees", "table")) degrees.push_back(exact_int(d, "degree"));
  std::vector<std::string> names;
  if (tj.contains("names"))
    for (const auto& n : tj.at("names")) names.push_back(n.get<std::string>());
  std::vector<std::vector<CyclotomicInteger>> rows;
  for (const auto& row : field(tj, "rows", "table")) {
    std::vector<CyclotomicInteger> r;
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        r.push_back(CyclotomicInteger::constant(g.exponent, v.get<Int>()));
        continue;
      }
      if (!v.is_array() || v.size() != static_cast<std::size_t>(g.exponent))
        throw ValidationError("document format", "character value must be a coefficient vector of length exponent");
      std::vector<Int> coeffs;
      for (const auto& x : v) coeffs.push_back(exact_int(x, "character coefficient"));
      r.emplace_back(g.exponent, std::move(coeffs));
    }
    rows.push_back(std::move(r));
  }
  return CharacterTable::create(std::move(g), std::move(rows), std::move(degrees), std::move(names));
}

TablePtr load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table document '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError("document format", std::string("malformed table document: ") + e.what());
  }
  return table_from_json(doc);
}

TablePtr load_table(const std::string& source) {
  if (in_catalog(source)) return catalog_table(source);
  return load_table_file(source);
}

}  // namespace kzero
