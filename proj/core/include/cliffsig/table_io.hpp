#pragma once

#include <nlohmann/json.hpp>

#include "cliffsig/product_table.hpp"

namespace cliffsig {

// Table document:
//   { "n": int, "provenance": string, "squares": [+/-1...],
//     "entries": [[I, J, sign, K], ...] }
// entries sorted by (I, J); integers only, bit-exact and reproducible.
nlohmann::ordered_json table_to_json(const ProductTable& t);

// Parsed table document, kept independent of ProductTable so corrupted
// files can still be loaded and reported against a freshly built table.
struct TableDocument {
  int n = 0;
  std::string provenance;
  std::vector<int> squares;
  std::vector<std::array<long long, 4>> entries;  // I, J, sign, K
};

TableDocument table_document_from_json(const nlohmann::json& j);

struct DocumentCheck {
  bool ok = false;
  std::string message;
};

// Compares a document entry-for-entry against the base table of the
// document's own square pattern (every vee/tilt/composed table exported by
// this workbench equals that base table). Names the first mismatching
// blade pair on failure.
DocumentCheck verify_table_document(const TableDocument& doc);

}  // namespace cliffsig
