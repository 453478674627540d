#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "entwine/entmod.hpp"
#include "entwine/structures.hpp"

namespace entwine::io {

using nlohmann::json;

/// Malformed or inconsistent input; the CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseContext {
  /// Reinterprets every scalar in this field instead of the file's own.
  std::optional<Field> field;
  /// Directory against which string references to other files resolve.
  std::filesystem::path base_dir;
};

json read_file(const std::filesystem::path& path);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
/// FNV-1a 64 over the compact dump, as 16 hex digits.
std::string digest(const json& j);

json to_json(Field f);
Field field_from_json(const json& j, const ParseContext& ctx);

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Field f);
json to_json(const Vec& v);
Vec vec_from_json(const json& j, Field f, std::size_t expected);
json to_json(const Mat& m);
Mat mat_from_json(const json& j, Field f, std::size_t rows, std::size_t cols);
json to_json(const ValidationReport& r);

json to_json(const FiniteAlgebra& a);
json to_json(const FiniteCoalgebra& c);
json to_json(const FiniteBialgebra& h);
json to_json(const Entwining& e);
json to_json(const ModuleCoalgebra& mc);
json to_json(const ComoduleAlgebra& ca);
json to_json(const DoiHopfDatum& d);
json to_json(const EntwinedModule& m);

FiniteAlgebra algebra_from_json(const json& j, const ParseContext& ctx);
FiniteCoalgebra coalgebra_from_json(const json& j, const ParseContext& ctx);
FiniteBialgebra bialgebra_from_json(const json& j, const ParseContext& ctx);
/// Accepts an inline object or a string path relative to ctx.base_dir.
Entwining entwining_from_json(const json& j, const ParseContext& ctx);
ModuleCoalgebra module_coalgebra_from_json(const json& j, const FiniteBialgebra& h, const ParseContext& ctx);
ComoduleAlgebra comodule_algebra_from_json(const json& j, const ParseContext& ctx);
DoiHopfDatum doi_hopf_from_json(const json& j, const ParseContext& ctx);
EntwinedModule entwined_module_from_json(const json& j, const ParseContext& ctx);

/// The "kind" member, or ParseError when absent.
std::string kind_of(const json& j);

}  // namespace entwine::io
