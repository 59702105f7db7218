#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zlab/algebra.hpp"

namespace zlab {

/// Algebra file format, version 1:
///   {"format": "zlab-algebra", "version": 1,
///    "name": "2_b", "size": 2, "table": [[1, 1], [0, 1]]}
/// table[i][j] = i -> j and element 0 is the constant. "format" and
/// "version" are optional on input. A file may hold one object or an array.
inline constexpr int kAlgebraFormatVersion = 1;

nlohmann::json algebra_to_json(const FiniteZroupoid& alg);

/// Throws DataError on missing fields, wrong shapes or out-of-range entries.
FiniteZroupoid algebra_from_json(const nlohmann::json& j);

/// Parses text holding one algebra object or an array of them.
std::vector<FiniteZroupoid> parse_algebras(std::string_view text);

std::vector<FiniteZroupoid> load_algebras(const std::filesystem::path& path);

/// A catalog name (T1, 2_s, 2_b, A3, A4) or a path to an algebra file.
/// Throws NameError when it is neither.
std::vector<FiniteZroupoid> load_algebra_source(std::string_view source);

}  // namespace zlab
