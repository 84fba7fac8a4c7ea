#include "bipoisson/tensor_io.hpp"

#include <fstream>
#include <sstream>

#include "bipoisson/errors.hpp"

namespace bipoisson {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(PairSymmetry s) {
  switch (s) {
    case PairSymmetry::Skew: return "skew";
    case PairSymmetry::Sym: return "sym";
    case PairSymmetry::None: return "none";
  }
  return "none";
}

PairSymmetry detect_symmetry(const Tensor4& t) {
  Tensor4 swapped = t.pair_swapped();
  if (swapped == Polynomial(-1) * t) return PairSymmetry::Skew;
  if (swapped == t) return PairSymmetry::Sym;
  return PairSymmetry::None;
}

namespace {

int index_field(const json& e, const char* key, int n) {
  if (!e.contains(key) || !e[key].is_number_integer()) {
    throw ParseError(std::string("entry lacks integer field '") + key + "'");
  }
  int v = e[key].get<int>();
  if (v < 1 || v > n) throw ParseError(std::string("index '") + key + "' = " + std::to_string(v) + " outside 1..N");
  return v;
}

Polynomial coeff_field(const json& e) {
  if (!e.contains("coeff")) throw ParseError("entry lacks 'coeff'");
  const json& c = e["coeff"];
  if (c.is_number_integer()) return Polynomial(Rational(c.get<long>()));
  if (c.is_string()) return Polynomial::parse(c.get<std::string>());
  throw ParseError("'coeff' must be a string or an integer");
}

int dim_field(const json& j) {
  if (!j.is_object() || !j.contains("N") || !j["N"].is_number_integer()) throw ParseError("missing integer field 'N'");
  int n = j["N"].get<int>();
  if (n < 1 || n > VarId::kMaxDim) throw ParseError("N out of range: " + std::to_string(n));
  return n;
}

const json& entries_field(const json& j) {
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("missing array field 'entries'");
  return j["entries"];
}

}  // namespace

ordered_json tensor_to_json(const Tensor4& t) {
  PairSymmetry sym = detect_symmetry(t);
  ordered_json doc;
  doc["N"] = t.dim();
  doc["symmetry"] = to_string(sym);
  ordered_json entries = ordered_json::array();
  for (const auto& [idx, v] : t.entries()) {
    if (sym != PairSymmetry::None && std::make_pair(idx[0], idx[1]) > std::make_pair(idx[2], idx[3])) continue;
    entries.push_back({{"i", idx[0]}, {"j", idx[1]}, {"k", idx[2]}, {"l", idx[3]}, {"coeff", v.to_string()}});
  }
  doc["entries"] = std::move(entries);
  return doc;
}

Tensor4 tensor_from_json(const json& j) {
  const int n = dim_field(j);
  PairSymmetry sym = PairSymmetry::None;
  if (j.contains("symmetry")) {
    if (!j["symmetry"].is_string()) throw ParseError("'symmetry' must be a string");
    const std::string s = j["symmetry"].get<std::string>();
    if (s == "skew") {
      sym = PairSymmetry::Skew;
    } else if (s == "sym") {
      sym = PairSymmetry::Sym;
    } else if (s != "none") {
      throw ParseError("unknown symmetry '" + s + "'");
    }
  }
  std::map<Index4, Polynomial> slots;
  auto put = [&](int i, int k1, int k2, int k3, const Polynomial& v) {
    Index4 idx{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(k1), static_cast<std::uint8_t>(k2),
               static_cast<std::uint8_t>(k3)};
    auto [it, fresh] = slots.emplace(idx, v);
    if (!fresh && !(it->second == v)) {
      throw ParseError("conflicting values for entry " + format_index(idx) + ": " + it->second.to_string() +
                       " and " + v.to_string());
    }
  };
  for (const json& e : entries_field(j)) {
    if (!e.is_object()) throw ParseError("tensor entry must be an object");
    int i = index_field(e, "i", n), jj = index_field(e, "j", n), k = index_field(e, "k", n), l = index_field(e, "l", n);
    Polynomial v = coeff_field(e);
    put(i, jj, k, l, v);
    if (sym == PairSymmetry::Sym) put(k, l, i, jj, v);
    if (sym == PairSymmetry::Skew) put(k, l, i, jj, -v);
  }
  Tensor4 t(n);
  for (auto& [idx, v] : slots) t.set(idx[0], idx[1], idx[2], idx[3], std::move(v));
  return t;
}

ordered_json matrix_to_json(const MatrixX& m) {
  ordered_json doc;
  doc["N"] = m.dim();
  ordered_json entries = ordered_json::array();
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j)
      if (m.at(i, j) != 0) entries.push_back({{"i", i}, {"j", j}, {"coeff", to_string(m.at(i, j))}});
  doc["entries"] = std::move(entries);
  return doc;
}

MatrixX matrix_from_json(const json& j) {
  const int n = dim_field(j);
  MatrixX m(n);
  std::map<std::pair<int, int>, Rational> seen;
  for (const json& e : entries_field(j)) {
    if (!e.is_object()) throw ParseError("matrix entry must be an object");
    int i = index_field(e, "i", n), jj = index_field(e, "j", n);
    Polynomial p = coeff_field(e);
    if (!p.is_constant()) throw ParseError("matrix entries must be rational numbers");
    Rational v = p.constant_term();
    auto [it, fresh] = seen.emplace(std::make_pair(i, jj), v);
    if (!fresh && it->second != v) throw ParseError("conflicting values for matrix entry");
    m.at(i, jj) = v;
  }
  return m;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const ordered_json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

Tensor4 load_tensor(const std::filesystem::path& path) {
  const json doc = read_json_file(path);
  try {
    return tensor_from_json(doc);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

MatrixX load_matrix(const std::filesystem::path& path) {
  const json doc = read_json_file(path);
  try {
    return matrix_from_json(doc);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace bipoisson
