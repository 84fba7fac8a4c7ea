#include "bipoisson/bracket_io.hpp"

#include <set>

#include "bipoisson/errors.hpp"
#include "bipoisson/tensor_io.hpp"

namespace bipoisson {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json table_to_json(const BracketTable& t) {
  ordered_json doc;
  doc["N"] = t.dim();
  if (t.lambda()) {
    doc["lambda"] = to_string(*t.lambda());
  } else {
    doc["lambda"] = nullptr;
  }
  doc["restricted"] = t.is_restricted();
  ordered_json entries = ordered_json::array();
  const auto& m = t.coords().members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      const Polynomial& e = t.upper(a, b);
      if (!e.is_zero()) entries.push_back({{"u", m[a].name()}, {"v", m[b].name()}, {"poly", e.to_string()}});
    }
  doc["entries"] = std::move(entries);
  return doc;
}

BracketTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("N") || !j["N"].is_number_integer()) throw ParseError("missing integer field 'N'");
  const int n = j["N"].get<int>();
  if (n < 2 || n > VarId::kMaxDim) throw ParseError("N out of range: " + std::to_string(n));
  bool restricted = false;
  if (j.contains("restricted")) {
    if (!j["restricted"].is_boolean()) throw ParseError("'restricted' must be a boolean");
    restricted = j["restricted"].get<bool>();
  }
  std::optional<Rational> lambda;
  if (j.contains("lambda") && !j["lambda"].is_null()) {
    if (j["lambda"].is_string()) {
      lambda = parse_rational(j["lambda"].get<std::string>());
    } else if (j["lambda"].is_number_integer()) {
      lambda = Rational(j["lambda"].get<long>());
    } else {
      throw ParseError("'lambda' must be a rational string");
    }
  }
  BracketTable t(restricted ? CoordSet::restricted(n) : CoordSet::full(n), lambda);
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("missing array field 'entries'");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("poly") || !e["u"].is_string() ||
        !e["v"].is_string() || !e["poly"].is_string()) {
      throw ParseError("table entry needs string fields 'u', 'v', 'poly'");
    }
    VarId u = VarId::parse(e["u"].get<std::string>());
    VarId v = VarId::parse(e["v"].get<std::string>());
    auto a = t.coords().index_of(u), b = t.coords().index_of(v);
    if (!a || !b) throw ParseError("coordinate " + (a ? v.name() : u.name()) + " is not part of this table");
    Polynomial p = Polynomial::parse(e["poly"].get<std::string>());
    for (VarId w : p.variables()) {
      if (w.is_coordinate() && !t.coords().contains(w)) {
        throw ParseError("entry {" + u.name() + "," + v.name() + "} involves foreign coordinate " + w.name());
      }
    }
    if (*a == *b) {
      if (!p.is_zero()) throw ParseError("nonzero diagonal entry {" + u.name() + "," + u.name() + "}");
      continue;
    }
    if (!seen.insert(std::minmax(*a, *b)).second) {
      throw ParseError("pair {" + u.name() + "," + v.name() + "} listed twice");
    }
    t.set(*a, *b, std::move(p));
  }
  return t;
}

BracketTable load_table(const std::filesystem::path& path) {
  const json doc = read_json_file(path);
  try {
    return table_from_json(doc);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace bipoisson
