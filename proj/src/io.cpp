#include "zlab/io.hpp"

#include <fstream>
#include <sstream>

#include "zlab/error.hpp"

namespace zlab {

using nlohmann::json;

json algebra_to_json(const FiniteZroupoid& alg) {
  return json{{"format", "zlab-algebra"},
              {"version", kAlgebraFormatVersion},
              {"name", alg.name()},
              {"size", alg.size()},
              {"table", alg.rows()}};
}

FiniteZroupoid algebra_from_json(const json& j) {
  if (!j.is_object()) throw DataError("algebra must be a JSON object");
  if (j.contains("format") && j["format"] != "zlab-algebra")
    throw DataError("unknown algebra format " + j["format"].dump());
  if (j.contains("version") && j["version"] != kAlgebraFormatVersion)
    throw DataError("unsupported algebra format version " + j["version"].dump());
  if (!j.contains("table") || !j["table"].is_array())
    throw DataError("algebra needs a \"table\" array");

  const std::string name = j.value("name", std::string("unnamed"));
  const auto& rows = j["table"];
  const std::size_t n = rows.size();
  if (j.contains("size")) {
    if (!j["size"].is_number_unsigned() || j["size"].get<std::size_t>() != n)
      throw DataError("algebra '" + name + "': \"size\" does not match the table");
  }
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw DataError("algebra '" + name + "': row " + std::to_string(i) + " must have " +
                      std::to_string(n) + " entries");
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw DataError("algebra '" + name + "': table entries must be integers");
      cells.push_back(v.get<Element>());
    }
  }
  return FiniteZroupoid(name, n, std::move(cells));
}

std::vector<FiniteZroupoid> parse_algebras(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
  std::vector<FiniteZroupoid> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(algebra_from_json(item));
  } else {
    out.push_back(algebra_from_json(j));
  }
  return out;
}

std::vector<FiniteZroupoid> load_algebras(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebras(buf.str());
}

std::vector<FiniteZroupoid> load_algebra_source(std::string_view source) {
  if (catalog().contains(source)) return {catalog_algebra(source)};
  const std::filesystem::path path{std::string(source)};
  if (std::filesystem::exists(path)) return load_algebras(path);
  throw NameError("'" + std::string(source) + "' is neither a catalog algebra nor a file");
}

}  // namespace zlab
