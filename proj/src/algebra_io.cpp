#include "stonework/algebra_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace stonework {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw ArgumentError("algebra file: not a well-formed JSON document");
  if (!doc.is_object())
    throw ArgumentError("algebra file: top level must be an object");
  return doc;
}

std::vector<std::string> string_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw ArgumentError(std::string("algebra file: missing array field '") + key + "'");
  std::vector<std::string> out;
  for (const json& item : doc[key]) {
    if (!item.is_string())
      throw ArgumentError(std::string("algebra file: '") + key +
                          "' must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

FiniteAlgebra parse_table_form(const json& doc) {
  const std::vector<std::string> names = string_array(doc, "elements");
  const std::size_t n = names.size();
  if (n == 0) throw ArgumentError("algebra file: 'elements' must not be empty");

  std::unordered_map<std::string, ElementId> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(names[i], static_cast<ElementId>(i)).second)
      throw ArgumentError("algebra file: duplicate element name '" + names[i] + "'");
  }
  auto resolve = [&](const json& v, const char* where) -> ElementId {
    if (!v.is_string())
      throw ArgumentError(std::string("algebra file: ") + where +
                          " entries must be element names");
    auto it = index.find(v.get<std::string>());
    if (it == index.end())
      throw ArgumentError(std::string("algebra file: ") + where + " refers to '" +
                          v.get<std::string>() + "', which is not in 'elements'");
    return it->second;
  };

  auto parse_table = [&](const char* key) -> std::vector<ElementId> {
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != n)
      throw ArgumentError(std::string("algebra file: '") + key + "' must be an array of " +
                          std::to_string(n) + " rows");
    std::vector<ElementId> table;
    table.reserve(n * n);
    for (const json& row : doc[key]) {
      if (!row.is_array() || row.size() != n)
        throw ArgumentError(std::string("algebra file: every '") + key +
                            "' row must have " + std::to_string(n) + " entries");
      for (const json& cell : row) table.push_back(resolve(cell, key));
    }
    return table;
  };

  std::vector<ElementId> join = parse_table("join");
  std::vector<ElementId> meet = parse_table("meet");

  if (!doc.contains("not") || !doc["not"].is_array() || doc["not"].size() != n)
    throw ArgumentError("algebra file: 'not' must be an array of " +
                        std::to_string(n) + " entries");
  std::vector<ElementId> comp;
  comp.reserve(n);
  for (const json& cell : doc["not"]) comp.push_back(resolve(cell, "not"));

  if (!doc.contains("zero") || !doc.contains("one"))
    throw ArgumentError("algebra file: table form requires 'zero' and 'one'");
  const ElementId zero = resolve(doc["zero"], "zero");
  const ElementId one = resolve(doc["one"], "one");

  return FiniteAlgebra(names, std::move(join), std::move(meet), std::move(comp),
                       zero, one);
}

}  // namespace

FiniteAlgebra parse_algebra(const std::string& text, std::size_t carrier_cap) {
  const json doc = parse_document(text);
  if (!doc.contains("type") || !doc["type"].is_string())
    throw ArgumentError("algebra file: missing string field 'type'");
  const std::string type = doc["type"].get<std::string>();
  if (type == "powerset")
    return PowerSetAlgebra(string_array(doc, "ground")).materialize(carrier_cap);
  if (type == "table") {
    FiniteAlgebra algebra = parse_table_form(doc);
    if (algebra.size() > carrier_cap)
      throw SizeError("algebra file: carrier of " + std::to_string(algebra.size()) +
                      " elements exceeds the cap " + std::to_string(carrier_cap));
    return algebra;
  }
  throw ArgumentError("algebra file: unknown type '" + type +
                      "' (expected \"powerset\" or \"table\")");
}

FiniteAlgebra load_algebra_file(const std::string& path, std::size_t carrier_cap) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open algebra file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str(), carrier_cap);
}

std::string algebra_to_table_document(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  json doc;
  doc["type"] = "table";
  doc["elements"] = a.names();
  doc["zero"] = a.name_of(a.zero());
  doc["one"] = a.name_of(a.one());
  json join = json::array(), meet = json::array(), comp = json::array();
  for (ElementId x = 0; x < n; ++x) {
    json jrow = json::array(), mrow = json::array();
    for (ElementId y = 0; y < n; ++y) {
      jrow.push_back(a.name_of(a.join_raw(x, y)));
      mrow.push_back(a.name_of(a.meet_raw(x, y)));
    }
    join.push_back(std::move(jrow));
    meet.push_back(std::move(mrow));
    comp.push_back(a.name_of(a.complement_raw(x)));
  }
  doc["join"] = std::move(join);
  doc["meet"] = std::move(meet);
  doc["not"] = std::move(comp);
  return doc.dump(2) + "\n";
}

std::string powerset_to_document(const PowerSetAlgebra& a) {
  json doc;
  doc["type"] = "powerset";
  doc["ground"] = a.ground();
  return doc.dump(2) + "\n";
}

}  // namespace stonework
