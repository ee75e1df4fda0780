#pragma once

/**
 * @file kring_io.hpp
 * @brief JSON documents for presented algebras and their elements.
 *
 * Terms are emitted in lexicographic exponent order and variables in index
 * order, so equal inputs give byte-identical documents.
 *
 *   {"base": "C2", "free_rank": 2, "provenance": {...},
 *    "variables": [{"name": "t", "bound": 1,
 *                   "rule": [{"exponents": [0], "coefficient": [0, -1]}, ...]}]}
 */

#include "kzero/kring.hpp"

#include <json.hpp>

namespace kzero {

nlohmann::json terms_to_json(const SparseTerms& terms);
SparseTerms terms_from_json(const nlohmann::json& doc, std::size_t num_vars, std::size_t width);

nlohmann::json algebra_to_json(const PresentedAlgebra& algebra);
/// Rebuilds an algebra over `base`; rule validation runs again on load.
AlgebraPtr algebra_from_json(const nlohmann::json& doc, const TablePtr& base);

nlohmann::json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const nlohmann::json& doc, const AlgebraPtr& algebra);

}  // namespace kzero
