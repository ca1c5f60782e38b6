#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vknot/composition.hpp"
#include "vknot/volume.hpp"

namespace vknot::tools {

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;
};

/// Single JSON document, newline terminated.
std::string render_json(const Report& r);
/// Indented "key: value" lines.
std::string render_text(const Report& r);

enum class KindChoice { Auto, Nonsingular, Singular };

/// Gauss code, "@path" holding one, or a catalog name (leading digit).
/// The result is in canonical form, so arcs refer to the serialized text.
Diagram resolve_diagram(const std::string& input);

/// Built-in table, or the file at `path` when given.
std::vector<VolumeEntry> resolve_table(const std::optional<std::string>& path);

Report cmd_analyze(const std::string& input);

struct ComposeArgs {
  std::string code1, arc1, code2, arc2;
  KindChoice kind = KindChoice::Auto;
  bool orientation_matched = true;
  std::optional<std::string> table;
};
Report cmd_compose(const ComposeArgs& args);

Report cmd_double(const std::string& code, const std::string& arc, const std::optional<std::string>& table);

struct SequenceArgs {
  std::string code1, arc1, code2, arc2;
  int i = 1;
  int j = 1;
};
Report cmd_sequence(const SequenceArgs& args);

/// Without `load`, reports the built-in table.
Report cmd_table(const std::optional<std::string>& load);

/// Bound for two table entries, dispatched on their cork kinds.
Report cmd_bound(const std::string& id1, const std::string& id2, const std::optional<std::string>& table);
/// Cusp bound n * v3.
Report cmd_bound_cusps(int n);

/// Real as a JSON number carrying 15 significant digits.
Json real_json(Real x);

}  // namespace vknot::tools
