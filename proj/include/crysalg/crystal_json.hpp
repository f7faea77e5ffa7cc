#ifndef CRYSALG_CRYSTAL_JSON_HPP
#define CRYSALG_CRYSTAL_JSON_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "crysalg/crystal.hpp"

namespace crysalg {

using Json = nlohmann::ordered_json;

/// Canonical JSON form: nodes sorted by id, edges by (color, from).
Json crystal_to_json(const Crystal& c);

/// Parses the canonical form; throws std::invalid_argument on malformed
/// input.  eps/phi are taken from the explicit table when present, else
/// derived seminormally.
Crystal crystal_from_json(const Json& j);

/// DOT export: one edge per (i, f_i), edge label = color, node label "id | wt".
std::string crystal_to_dot(const Crystal& c);

}  // namespace crysalg

#endif
