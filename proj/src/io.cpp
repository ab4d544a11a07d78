#include "nashres/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "nashres/error.hpp"
#include "nashres/parse.hpp"

namespace nashres {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed, const std::string& what) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw ValidationError(what + ": unknown key \"" + it.key() + "\"");
}

const Json& require(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(what + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t require_count(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ValidationError(what + " must be a non-negative integer");
  return v.get<std::size_t>();
}

MultiPoly parse_field(const Json& v, const std::string& what) {
  if (!v.is_string()) throw ValidationError(what + " must be a polynomial string");
  try {
    return parse_poly(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(what + ": " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" at line")),
                     e.line(), e.column());
  }
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("invalid JSON", line, col);
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

LocalPresentation parse_presentation(const Json& j) {
  const std::string what = "presentation";
  if (!j.is_object()) throw ValidationError(what + " must be a JSON object");
  reject_unknown_keys(j, {"d", "hypersurfaces", "base", "name"}, what);
  const std::size_t d = require_count(require(j, "d", what), "\"d\"");
  std::vector<std::string> base;
  if (j.contains("base")) {
    if (!j.at("base").is_array()) throw ValidationError("\"base\" must be an array of variable names");
    for (const auto& v : j.at("base")) {
      if (!v.is_string()) throw ValidationError("\"base\" entries must be strings");
      base.push_back(v.get<std::string>());
    }
  }
  const Json& hs = require(j, "hypersurfaces", what);
  if (!hs.is_array() || hs.empty()) throw ValidationError("\"hypersurfaces\" must be a non-empty array");
  std::vector<LocalPresentation::Input> inputs;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string where = "hypersurface " + std::to_string(i);
    const Json& h = hs[i];
    if (!h.is_object()) throw ValidationError(where + " must be an object");
    reject_unknown_keys(h, {"var", "b", "f"}, where);
    const Json& var = require(h, "var", where);
    if (!var.is_string()) throw ValidationError(where + ": \"var\" must be a string");
    std::uint32_t b = 0;
    if (h.contains("b")) b = static_cast<std::uint32_t>(require_count(h.at("b"), where + ": \"b\""));
    inputs.push_back({var.get<std::string>(), b, parse_field(require(h, "f", where), where + " \"f\"")});
  }
  return LocalPresentation(d, base, inputs);
}

LocalPresentation load_presentation(const std::string& path) { return parse_presentation(load_json(path)); }

Json presentation_to_json(const LocalPresentation& p) {
  Json j;
  j["d"] = p.d();
  j["base"] = p.base_vars();
  Json hs = Json::array();
  for (const auto& h : p.hypersurfaces()) hs.push_back({{"var", h.var}, {"b", h.b}, {"f", h.original.to_string()}});
  j["hypersurfaces"] = hs;
  return j;
}

Arc parse_arc(const Json& j) {
  const std::string what = "arc";
  if (!j.is_object()) throw ValidationError("arc must be a JSON object");
  reject_unknown_keys(j, {"precision", "coords"}, what);
  std::optional<std::size_t> precision;
  const Json& pj = require(j, "precision", what);
  if (pj.is_string()) {
    if (pj.get<std::string>() != "exact") throw ValidationError("arc precision must be an integer or \"exact\"");
  } else {
    precision = require_count(pj, "arc precision");
    if (*precision == 0) throw ValidationError("arc precision must be positive");
  }
  const Json& cj = require(j, "coords", what);
  if (!cj.is_object() || cj.empty()) throw ValidationError("arc coords must be a non-empty object");
  std::map<std::string, PowerSeries> coords;
  for (auto it = cj.begin(); it != cj.end(); ++it) {
    MultiPoly p = parse_field(it.value(), "coordinate " + it.key());
    for (const auto& v : p.support())
      if (v != "t") throw ValidationError("coordinate " + it.key() + " uses " + v + "; arcs are polynomials in t");
    coords.emplace(it.key(), PowerSeries::from_poly(p, precision));
  }
  return Arc(std::move(coords));
}

Arc load_arc(const std::string& path) { return parse_arc(load_json(path)); }

Json arc_to_json(const Arc& a) {
  Json j;
  const auto p = a.precision();
  if (p)
    j["precision"] = *p;
  else
    j["precision"] = "exact";
  Json coords = Json::object();
  for (const auto& v : a.variables()) {
    const PowerSeries s = p ? a.at(v).truncated_to(*p) : a.at(v);
    coords[v] = s.to_poly().to_string();
  }
  j["coords"] = coords;
  return j;
}

Point parse_point(const std::string& text) {
  Point out;
  std::stringstream ss(text);
  std::string item;
  std::size_t col = 1;
  while (std::getline(ss, item, ',')) {
    MultiPoly p = [&] {
      try {
        return parse_poly(item);
      } catch (const ParseError& e) {
        throw ParseError("invalid point coordinate", 1, col + e.column() - 1);
      }
    }();
    if (!p.is_constant()) throw ParseError("point coordinates must be rational numbers", 1, col);
    out.push_back(p.is_zero() ? Rational(0) : p.terms().begin()->second);
    col += item.size() + 1;
  }
  if (out.empty()) throw ParseError("empty point", 1, 1);
  return out;
}

}  // namespace nashres
