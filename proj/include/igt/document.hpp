#pragma once

#include "igt/game_forms.hpp"
#include "igt/influence_game.hpp"
#include "igt/simple_graph.hpp"

#include <map>
#include <string>
#include <string_view>
#include <variant>

namespace igt {

using Payload = std::variant<InfluenceGame, WeightedGame, ExplicitGame, SimpleGraph>;

/// A JSON document holding one payload under the key "influence_game",
/// "weighted_game", "explicit_game" or "graph", plus "format_version": 1
/// and an optional string map "metadata".
struct GameDocument {
    int format_version = 1;
    Payload payload;
    std::map<std::string, std::string> metadata;
};

/// Syntax errors carry line and column, schema errors the field path
/// (InputError); type invariants are enforced by the payload constructors
/// (ValidationError).
GameDocument parse_document(std::string_view text);
/// Canonical form: sorted keys, sorted ids, sorted edges and coalitions,
/// two-space indent, trailing newline.
std::string emit_document(const GameDocument &doc);

GameDocument load_document(const std::string &path);

std::string payload_kind(const Payload &p);

} // namespace igt
