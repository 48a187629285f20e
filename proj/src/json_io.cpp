#include "ultratree/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ultratree/error.hpp"

namespace ultratree::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string() || item.get<std::string>().empty())
      throw Error(ErrorCode::ParseError, std::string(what) + " entries must be non-empty strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

bool is_negative_literal(const json& j) {
  if (j.is_number_integer() && !j.is_number_unsigned()) return j.get<std::int64_t>() < 0;
  if (j.is_number_float()) return j.get<double>() < 0;
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    auto pos = s.find_first_not_of(" \t");
    return pos != std::string::npos && s[pos] == '-';
  }
  return false;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Rational(j.get<std::uint64_t>());
  throw Error(ErrorCode::ParseError, "expected a non-negative rational, got " + j.dump());
}

json to_json(const Tree& tree) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : tree.edges()) {
    auto a = tree.name(e.a);
    auto b = tree.name(e.b);
    if (b < a) std::swap(a, b);
    edges.emplace_back(std::move(a), std::move(b));
  }
  std::sort(edges.begin(), edges.end());
  json out;
  out["vertices"] = tree.names();
  out["edges"] = json::array();
  for (const auto& [a, b] : edges) out["edges"].push_back({a, b});
  return out;
}

json to_json(const LabeledTree& lt) {
  json out = to_json(lt.tree());
  out["labels"] = json::object();
  for (VertexIndex v = 0; v < lt.tree().order(); ++v) out["labels"][lt.tree().name(v)] = lt.label(v).str();
  return out;
}

json to_json(const FiniteUltrametricSpace& space) {
  json out;
  out["points"] = space.points();
  out["dist"] = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < space.size(); ++j) row.push_back(space(i, j).str());
    out["dist"].push_back(std::move(row));
  }
  return out;
}

Tree tree_from_json(const json& j) {
  auto vertices = string_list(field(j, "vertices"), "vertices");
  const json& edges_json = field(j, "edges");
  if (!edges_json.is_array()) throw Error(ErrorCode::ParseError, "edges must be an array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : edges_json) {
    auto pair = string_list(e, "edge");
    if (pair.size() != 2) throw Error(ErrorCode::ParseError, "each edge must list exactly two vertices");
    edges.emplace_back(pair[0], pair[1]);
  }
  return validate_tree(std::move(vertices), edges);
}

LabeledTree labeled_tree_from_json(const json& j) {
  Tree tree = tree_from_json(j);
  const json& labels = field(j, "labels");
  if (!labels.is_object()) throw Error(ErrorCode::ParseError, "labels must be an object");
  std::vector<std::optional<Rational>> values(tree.order());
  for (const auto& [name, value] : labels.items()) {
    auto idx = tree.find(name);
    if (!idx) throw Error(ErrorCode::UnknownVertex, "label for unknown vertex '" + name + "'");
    values[*idx] = rational_from_json(value);
  }
  std::vector<Rational> dense;
  for (VertexIndex v = 0; v < tree.order(); ++v) {
    if (!values[v]) throw Error(ErrorCode::ParseError, "vertex '" + tree.name(v) + "' has no label");
    dense.push_back(*values[v]);
  }
  return LabeledTree(std::move(tree), Labeling(std::move(dense)));
}

FiniteUltrametricSpace space_from_json(const json& j) {
  auto points = string_list(field(j, "points"), "points");
  const json& rows = field(j, "dist");
  if (!rows.is_array() || rows.size() != points.size())
    throw Error(ErrorCode::ParseError, "dist must be an array with one row per point");
  DistanceMatrix dist(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != points.size())
      throw Error(ErrorCode::ParseError, "dist row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (is_negative_literal(rows[i][k]))
        throw Error(ErrorCode::PositivityViolation,
                    "d(" + points[i] + "," + points[k] + ") is negative");
      dist(i, k) = rational_from_json(rows[i][k]);
    }
  }
  return validate_ultrametric(std::move(points), std::move(dist));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

std::string distance_csv(const FiniteUltrametricSpace& space) {
  std::ostringstream out;
  for (const auto& p : space.points()) out << ',' << p;
  out << '\n';
  for (std::size_t i = 0; i < space.size(); ++i) {
    out << space.point(i);
    for (std::size_t k = 0; k < space.size(); ++k) out << ',' << space(i, k).str();
    out << '\n';
  }
  return out.str();
}

}  // namespace ultratree::io
