#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "infref/model.hpp"

namespace infref {

using Json = nlohmann::json;

Json diagram_to_json(const InfluenceDiagram& diagram);
/// Resolves variable names and builds the diagram; throws ParseError naming
/// the offending field. Does not check probabilistic invariants (see validate).
InfluenceDiagram diagram_from_json(const Json& doc);
/// Parse + validate in one pass; parse failures become report errors.
ValidationReport validate_document(const Json& doc);

Json policy_to_json(const InfluenceDiagram& diagram, const Policy& policy);
Policy policy_from_json(const InfluenceDiagram& diagram, const Json& doc);

Json context_to_json(const InfluenceDiagram& diagram, const Context& ctx);
Context context_from_json(const InfluenceDiagram& diagram, const Json& doc);

/// Serialized text with a trailing newline; stable across runs.
std::string dump(const Json& doc);

std::string read_text(const std::filesystem::path& path);
Json read_json(const std::filesystem::path& path);
/// Writes via a temporary sibling file and rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

InfluenceDiagram load_diagram(const std::filesystem::path& path);
void save_diagram(const std::filesystem::path& path, const InfluenceDiagram& diagram);

}  // namespace infref
