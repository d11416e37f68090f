#include "cliffsig/table_io.hpp"

#include <array>

namespace cliffsig {

nlohmann::ordered_json table_to_json(const ProductTable& t) {
  nlohmann::ordered_json doc;
  doc["n"] = t.dim();
  doc["provenance"] = t.provenance();
  doc["squares"] = t.squares();
  auto entries = nlohmann::ordered_json::array();
  const BladeMask blades = 1u << t.dim();
  for (BladeMask i = 0; i < blades; ++i) {
    for (BladeMask j = 0; j < blades; ++j) {
      TableEntry e = t.entry(i, j);
      entries.push_back({i, j, e.sign, e.mask});
    }
  }
  doc["entries"] = std::move(entries);
  return doc;
}

TableDocument table_document_from_json(const nlohmann::json& j) {
  TableDocument doc;
  doc.n = j.at("n").get<int>();
  doc.provenance = j.value("provenance", "");
  doc.squares = j.at("squares").get<std::vector<int>>();
  for (const auto& row : j.at("entries")) {
    if (!row.is_array() || row.size() != 4) {
      throw std::invalid_argument("table entry rows must be [I, J, sign, K]");
    }
    doc.entries.push_back({row[0].get<long long>(), row[1].get<long long>(),
                           row[2].get<long long>(), row[3].get<long long>()});
  }
  return doc;
}

DocumentCheck verify_table_document(const TableDocument& doc) {
  if (doc.n < 1 || static_cast<int>(doc.squares.size()) != doc.n) {
    return {false, "inconsistent dimension/squares in table document"};
  }
  Signature sig = signature_from_squares(doc.squares);
  ProductTable reference = ProductTable::base(sig);
  const long long blades = 1ll << doc.n;
  if (static_cast<long long>(doc.entries.size()) != blades * blades) {
    return {false, "table document has " + std::to_string(doc.entries.size()) +
                       " entries, expected " + std::to_string(blades * blades)};
  }
  for (const auto& row : doc.entries) {
    const auto& [i, j, sign, k] = row;
    if (i < 0 || i >= blades || j < 0 || j >= blades) {
      return {false, "entry with out-of-range blade pair"};
    }
    TableEntry e = reference.entry(static_cast<BladeMask>(i),
                                   static_cast<BladeMask>(j));
    if (e.sign != sign || e.mask != static_cast<BladeMask>(k)) {
      return {false, "verify_isomorphism mismatch at blade pair (" +
                         blade_name(static_cast<BladeMask>(i)) + ", " +
                         blade_name(static_cast<BladeMask>(j)) +
                         "): document has (" + std::to_string(sign) + ", " +
                         blade_name(static_cast<BladeMask>(k)) +
                         "), expected (" + std::to_string(e.sign) + ", " +
                         blade_name(e.mask) + ")"};
    }
  }
  return {true, "table matches base" + squares_string(doc.squares) +
                    " on all " + std::to_string(blades * blades) +
                    " blade pairs"};
}

}  // namespace cliffsig
