#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and DOT views of trace and orbit results.
 *
 * Numbers serialize as exact string literals ("3/5+4/5i"), never as
 * floats, so every document round-trips through parse_number.
 */

#include <json.hpp>

#include "lrforest/forest.hpp"

namespace lrforest {

/// {"root": "...", "word": "...", "chain": ["...", ...]}
nlohmann::ordered_json to_json(const TraceResult& trace);

/// Nested {"value": "...", "left": ..., "right": ...}; null past the depth.
nlohmann::ordered_json to_json(const OrbitTree& tree);

/// Directed graph with edge labels "L" and "R"; nodes named by their
/// exact literals, emitted in preorder (left before right).
std::string to_dot(const OrbitTree& tree);

} // namespace lrforest
