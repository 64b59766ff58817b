#pragma once

#include "hk/table.hpp"

#include <filesystem>
#include <string>
#include <variant>

namespace hk {

/// Loaded HSF content: either a hyperstructure or a system table.
using Structure = std::variant<FiniteHyperTable, FiniteSystemTable>;

struct HsfError : std::runtime_error {
    explicit HsfError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a .hsf file (UTF-8 JSON).  Malformed syntax raises HsfError with a
/// line number; invariant violations raise ValidationError naming the axiom.
Structure parse_structure(const std::filesystem::path& path);
Structure parse_structure_text(const std::string& text, const std::string& origin = "<string>");

json to_hsf_json(const FiniteHyperTable& t);
json to_hsf_json(const FiniteSystemTable& t);
std::string serialize_structure(const Structure& s);
void write_structure(const Structure& s, const std::filesystem::path& path);

} // namespace hk
