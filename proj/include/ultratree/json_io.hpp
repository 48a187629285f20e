#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ultratree/labeling.hpp"
#include "ultratree/space.hpp"
#include "ultratree/tree.hpp"

namespace ultratree::io {

using json = nlohmann::json;

/// {"vertices": [...], "edges": [["a","b"], ...]}; edges written with the
/// lexicographically smaller name first, sorted.
json to_json(const Tree& tree);
/// Tree fields plus "labels": {"a": "3", "b": "5/2", ...}.
json to_json(const LabeledTree& lt);
/// {"points": [...], "dist": [["0","2",...], ...]}.
json to_json(const FiniteUltrametricSpace& space);

/// Rationals are read from "p" / "p/q" strings or non-negative JSON integers.
/// Errors: ParseError for malformed input, plus the validation errors of the
/// underlying constructor (HasCycle, StrongTriangleViolation, ...).
Tree tree_from_json(const json& j);
LabeledTree labeled_tree_from_json(const json& j);
/// Negative entries raise PositivityViolation.
FiniteUltrametricSpace space_from_json(const json& j);
Rational rational_from_json(const json& j);

/// Errors: ParseError (unreadable file or invalid JSON).
json read_json_file(const std::filesystem::path& path);
/// Errors: ParseError when the file cannot be written.
void write_json_file(const std::filesystem::path& path, const json& j);

/// Distance matrix as CSV with a header row and column of point names.
std::string distance_csv(const FiniteUltrametricSpace& space);

}  // namespace ultratree::io
