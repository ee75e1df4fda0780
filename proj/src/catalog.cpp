#include "kzero/catalog.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace kzero {

namespace {

using PowerRule = std::function<int(int k)>;

FiniteGroupData make_group(std::string name, Int order, int exponent, std::vector<ConjugacyClass> classes,
                           const std::vector<PowerRule>& power) {
  FiniteGroupData g{std::move(name), order, exponent, std::move(classes), {}};
  for (const auto& rule : power) {
    std::vector<int> row;
    for (int k = 0; k < exponent; ++k) row.push_back(rule(k));
    g.power_map.push_back(std::move(row));
  }
  return g;
}

std::vector<std::vector<CyclotomicInteger>> integer_rows(int e, const std::vector<std::vector<Int>>& rows) {
  std::vector<std::vector<CyclotomicInteger>> out;
  for (const auto& r : rows) {
    std::vector<CyclotomicInteger> row;
    for (Int v : r) row.push_back(CyclotomicInteger::constant(e, v));
    out.push_back(std::move(row));
  }
  return out;
}

// Class of x^k for x of order `ord`: identity when ord | k, else `self`, with
// an optional override for specific residues.
PowerRule cyclic_rule(int ord, int self, std::map<int, int> overrides = {}) {
  return [=](int k) {
    const int r = k % ord;
    if (r == 0) return 0;
    if (auto it = overrides.find(r); it != overrides.end()) return it->second;
    return self;
  };
}

TableData cyclic(int n) {
  std::vector<ConjugacyClass> classes;
  std::vector<PowerRule> power;
  for (int c = 0; c < n; ++c) {
    classes.push_back({c == 0 ? "1" : (c == 1 ? "g" : "g^" + std::to_string(c)), 1});
    power.push_back([=](int k) { return (c * k) % n; });
  }
  std::vector<std::vector<CyclotomicInteger>> rows;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    std::vector<CyclotomicInteger> row;
    for (int c = 0; c < n; ++c) row.push_back(CyclotomicInteger::root(n, static_cast<Int>(i) * c));
    rows.push_back(std::move(row));
    if (i == 0)
      names.push_back("triv");
    else if (n == 2)
      names.push_back("eps");
    else
      names.push_back("w" + std::to_string(i));
  }
  return {make_group("C" + std::to_string(n), n, n, std::move(classes), power), std::move(rows),
          std::vector<Int>(static_cast<std::size_t>(n), 1), std::move(names)};
}

TableData symmetric3() {
  auto g = make_group("S3", 6, 6, {{"1", 1}, {"(12)", 3}, {"(123)", 2}},
                      {cyclic_rule(1, 0), cyclic_rule(2, 1), cyclic_rule(3, 2)});
  return {std::move(g), integer_rows(6, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}), {1, 1, 2}, {"triv", "sgn", "std"}};
}

TableData symmetric4() {
  auto g = make_group("S4", 24, 12, {{"1", 1}, {"(12)", 6}, {"(12)(34)", 3}, {"(123)", 8}, {"(1234)", 6}},
                      {cyclic_rule(1, 0), cyclic_rule(2, 1), cyclic_rule(2, 2), cyclic_rule(3, 3),
                       cyclic_rule(4, 4, {{2, 2}})});
  return {std::move(g),
          integer_rows(12, {{1, 1, 1, 1, 1}, {1, -1, 1, 1, -1}, {2, 0, 2, -1, 0}, {3, 1, -1, 0, -1}, {3, -1, -1, 0, 1}}),
          {1, 1, 2, 3, 3},
          {"triv", "sgn", "two", "std", "stdsgn"}};
}

std::vector<std::vector<Int>> order8_rows() {
  return {{1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}};
}

TableData dihedral4() {
  auto g = make_group("D4", 8, 4, {{"1", 1}, {"r2", 1}, {"r", 2}, {"s", 2}, {"sr", 2}},
                      {cyclic_rule(1, 0), cyclic_rule(2, 1), cyclic_rule(4, 2, {{2, 1}}), cyclic_rule(2, 3),
                       cyclic_rule(2, 4)});
  return {std::move(g), integer_rows(4, order8_rows()), {1, 1, 1, 1, 2}, {"triv", "a", "b", "c", "two"}};
}

TableData quaternion8() {
  auto g = make_group("Q8", 8, 4, {{"1", 1}, {"-1", 1}, {"i", 2}, {"j", 2}, {"k", 2}},
                      {cyclic_rule(1, 0), cyclic_rule(2, 1), cyclic_rule(4, 2, {{2, 1}}), cyclic_rule(4, 3, {{2, 1}}),
                       cyclic_rule(4, 4, {{2, 1}})});
  return {std::move(g), integer_rows(4, order8_rows()), {1, 1, 1, 1, 2}, {"triv", "a", "b", "c", "two"}};
}

TableData alternating4() {
  const int e = 6;
  auto g = make_group("A4", 12, e, {{"1", 1}, {"(12)(34)", 3}, {"(123)", 4}, {"(132)", 4}},
                      {cyclic_rule(1, 0), cyclic_rule(2, 1), cyclic_rule(3, 2, {{2, 3}}), cyclic_rule(3, 3, {{2, 2}})});
  auto c = [&](Int v) { return CyclotomicInteger::constant(e, v); };
  auto w = [&](Int k) { return CyclotomicInteger::root(e, 2 * k); };  // zeta_3 = zeta_6^2
  std::vector<std::vector<CyclotomicInteger>> rows{
      {c(1), c(1), c(1), c(1)}, {c(1), c(1), w(1), w(2)}, {c(1), c(1), w(2), w(1)}, {c(3), c(-1), c(0), c(0)}};
  return {std::move(g), std::move(rows), {1, 1, 1, 3}, {"triv", "w", "wbar", "three"}};
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
  for (const char* s : {"S3", "S4", "D4", "Q8", "A4"}) names.emplace_back(s);
  return names;
}

bool in_catalog(const std::string& name) {
  for (const auto& n : catalog_names())
    if (n == name) return true;
  return false;
}

TableData catalog_data(const std::string& name) {
  if (name == "S3") return symmetric3();
  if (name == "S4") return symmetric4();
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion8();
  if (name == "A4") return alternating4();
  if (name.size() >= 2 && name[0] == 'C') {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 1 && n <= 12) return cyclic(n);
  }
  throw std::invalid_argument("unknown catalog group '" + name + "'");
}

TablePtr catalog_table(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, TablePtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto t = build_table(catalog_data(name));
  cache.emplace(name, t);
  return t;
}

}  // namespace kzero
