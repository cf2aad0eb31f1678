#include "cyclicity/serialize.hpp"

namespace cyclicity {

Json to_json(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Json table = Json::array();
  for (Element a = 0; a < n; ++a) {
    const auto r = g.row(a);
    table.push_back(Json(std::vector<Element>(r.begin(), r.end())));
  }
  Json doc;
  doc["order"] = n;
  doc["identity"] = g.identity();
  doc["table"] = std::move(table);
  doc["label"] = g.label();
  return doc;
}

FiniteGroup group_from_json(const Json& doc, std::size_t cap) {
  try {
    const auto n = doc.at("order").get<std::size_t>();
    const auto identity = doc.at("identity").get<Element>();
    const Json& rows = doc.at("table");
    if (!rows.is_array() || rows.size() != n)
      throw InvalidGroup("deserialize: table must have 'order' rows");
    if (n > cap)
      throw CapExceeded("deserialize: order " + std::to_string(n) + " exceeds table cap " +
                        std::to_string(cap));
    std::vector<Element> table;
    table.reserve(n * n);
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != n)
        throw InvalidGroup("deserialize: every row must have 'order' entries");
      for (const Json& e : row) table.push_back(e.get<Element>());
    }
    std::string label = doc.contains("label") ? doc.at("label").get<std::string>() : std::string();
    return FiniteGroup(n, std::move(table), identity, std::move(label), cap);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidGroup(std::string("deserialize: ") + e.what());
  }
}

std::string serialize(const FiniteGroup& g) { return to_json(g).dump(); }

FiniteGroup deserialize(std::string_view text, std::size_t cap) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidGroup(std::string("deserialize: ") + e.what());
  }
  return group_from_json(doc, cap);
}

}  // namespace cyclicity
