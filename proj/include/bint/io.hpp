#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bint/derivation.hpp"

namespace bint {

/// Malformed derivation file (bad JSON, unknown rule, unparsable sequent).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json to_json(const Derivation& d);
Derivation from_json(const nlohmann::ordered_json& j);

/// File text: two-space indented JSON plus a trailing newline.
std::string write_derivation(const Derivation& d);
Derivation read_derivation(std::string_view text);

Derivation load_derivation(const std::filesystem::path& path);
void save_derivation(const std::filesystem::path& path, const Derivation& d);
std::string read_file(const std::filesystem::path& path);

/// Indented tree, root first, one node per line.
std::string format_tree(const Derivation& d);
/// Nested \infer[label]{conclusion}{premises} markup.
std::string latex_tree(const Derivation& d);

}  // namespace bint
