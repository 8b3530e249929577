#pragma once

#include "boxlogic/polytope.hpp"

#include <json.hpp>

#include <string>

namespace boxlogic {

/// Box-world spec file: {"left":{"inputs":[k1,...]},"right":{"inputs":[...]}}
/// with optional per-input "labels" arrays (mapped to 0-based indices on
/// ingestion and otherwise ignored by the core). InputError names the
/// missing or malformed field.
std::pair<BoxSpec, BoxSpec> parse_box_spec(const nlohmann::json& j);
std::pair<BoxSpec, BoxSpec> load_box_spec(const std::string& path);

/// Logic export: ground-set size, factor structure, the family as sorted
/// hex-encoded bit vectors, and atom indices.
nlohmann::json logic_to_json(const ConcreteLogic& logic);

/// Hasse diagram of the family under inclusion, in DOT.
std::string logic_to_dot(const ConcreteLogic& logic, const std::string& name);

/// Behavior files: {"left":{"inputs":[...]},"right":{...},
/// "contexts":{"a,b":[entries...]}} with 1-based context keys and row-major
/// rational entries ("p/q" strings, integers, or [p,q] pairs).
nlohmann::json behavior_to_json(const Behavior& b);
Behavior behavior_from_json(const nlohmann::json& j);
Behavior load_behavior(const std::string& path);

nlohmann::json polytope_to_json(const StatePolytope& p);

/// Event expressions for the CLI: terms "[a:SET, b:SET]" where SET is "*",
/// one outcome, or "{o1,o2,...}", combined with "+" (disjoint union) and
/// prefix "~" (complement); parentheses group. Inputs are 1-based, outcomes
/// 0-based. Non-disjoint unions are rejected.
EventId parse_event_expr(const BoxWorld& w, const std::string& text);

} // namespace boxlogic
