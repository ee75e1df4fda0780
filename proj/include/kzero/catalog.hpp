#pragma once

#include "kzero/rep_ring.hpp"

#include <string>
#include <vector>

namespace kzero {

/// Catalog identifiers: C1..C12, S3, S4, D4, Q8, A4.
std::vector<std::string> catalog_names();
bool in_catalog(const std::string& name);

/// Validated catalog table. Repeated calls return the same table object.
TablePtr catalog_table(const std::string& name);

/// Raw catalog data before validation (used to build corrupted variants in tests).
struct TableData {
  FiniteGroupData group;
  std::vector<std::vector<CyclotomicInteger>> rows;
  std::vector<Int> degrees;
  std::vector<std::string> names;
};
TableData catalog_data(const std::string& name);

inline TablePtr build_table(TableData d) {
  return CharacterTable::create(std::move(d.group), std::move(d.rows), std::move(d.degrees), std::move(d.names));
}

}  // namespace kzero
