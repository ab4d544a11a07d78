#pragma once

#include <string>

#include <json.hpp>

#include "nashres/arcs.hpp"
#include "nashres/presentation.hpp"

namespace nashres {

using Json = nlohmann::ordered_json;

/// { "d": n, "hypersurfaces": [ { "var": "x", "b": 2, "f": "x^2 - z^3" } ], "base": [...] }
/// "base" and "name" are optional; "b" may be omitted and is then read off f.
LocalPresentation parse_presentation(const Json& j);
LocalPresentation load_presentation(const std::string& path);
Json presentation_to_json(const LocalPresentation& p);

/// { "precision": n | "exact", "coords": { "x": "t^3", "z": "t^2" } }
Arc parse_arc(const Json& j);
Arc load_arc(const std::string& path);
Json arc_to_json(const Arc& a);

/// Reads a file and parses it as JSON, reporting syntax errors as ParseError.
Json load_json(const std::string& path);
Json parse_json_text(const std::string& text);

/// Comma-separated rationals, e.g. "0,0,5" or "1/2,-3".
Point parse_point(const std::string& text);

}  // namespace nashres
