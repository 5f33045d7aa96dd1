#ifndef MATROIDLAB_JSON_IO_HPP
#define MATROIDLAB_JSON_IO_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "matroidlab/backends.hpp"
#include "matroidlab/chroma.hpp"
#include "matroidlab/constructions.hpp"
#include "matroidlab/element_set.hpp"
#include "matroidlab/errors.hpp"
#include "matroidlab/exchange.hpp"
#include "matroidlab/matroid.hpp"
#include "matroidlab/necklace.hpp"
#include "matroidlab/rational.hpp"
#include "matroidlab/simplicial.hpp"
#include "matroidlab/union.hpp"

namespace matroidlab {

using Json = nlohmann::json;

// Canonical serialization: keys sorted (the default map-backed document),
// two-space indent, trailing newline. Reserializing a canonical file is a
// byte-identical round trip.
inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline void require_object(const Json& j, const std::string& what) {
  if (!j.is_object()) throw InvalidInputError(what + " must be a JSON object");
}

inline void require_keys(const Json& j, const std::string& what,
                         const std::vector<std::string>& keys) {
  for (const auto& k : keys)
    if (!j.contains(k)) throw InvalidInputError(what + " is missing key \"" + k + "\"");
  for (const auto& [k, v] : j.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      throw InvalidInputError(what + " has an unexpected key \"" + k + "\"");
}

inline int get_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInputError(what + " must be an integer");
  return j.get<int>();
}

inline std::vector<int> get_int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInputError(what + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(get_int(v, what + " entry"));
  return out;
}

}  // namespace detail

inline std::vector<int> json_int_list(const Json& j, const std::string& what) {
  return detail::get_int_list(j, what);
}

template <int Words>
BasicElementSet<Words> json_to_set(const Json& j, int universe, const std::string& what) {
  BasicElementSet<Words> out(universe);
  for (int e : detail::get_int_list(j, what)) {
    if (e < 0 || e >= universe)
      throw InvalidInputError(what + " element " + std::to_string(e) + " outside universe of size " +
                              std::to_string(universe));
    out.insert(e);
  }
  return out;
}

template <int Words>
Json set_to_json(const BasicElementSet<Words>& s) {
  Json out = Json::array();
  for (int e = s.min_element(); e >= 0; e = s.next_element(e + 1)) out.push_back(e);
  return out;
}

// Kind-tagged matroid description, nested under "of" / "parts" for the
// derived constructions.
template <int Words>
BasicMatroidPtr<Words> parse_matroid(const Json& j) {
  using Set = BasicElementSet<Words>;
  detail::require_object(j, "matroid description");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw InvalidInputError("matroid description needs a string \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();

  auto ground_of = [&](const char* key) {
    int n = detail::get_int(j.at(key), std::string("\"") + key + "\"");
    if (n < 0 || n > Set::kCapacity)
      throw InvalidInputError("ground size " + std::to_string(n) + " outside capacity " +
                              std::to_string(Set::kCapacity));
    return n;
  };
  auto family_of = [&](const char* key, int n) {
    if (!j.at(key).is_array()) throw InvalidInputError(std::string(key) + " must be an array");
    std::vector<Set> out;
    for (const auto& part : j.at(key)) out.push_back(json_to_set<Words>(part, n, key));
    return out;
  };

  if (kind == "uniform") {
    detail::require_keys(j, "uniform matroid", {"kind", "ground", "rank"});
    return std::make_shared<BasicUniformMatroid<Words>>(ground_of("ground"),
                                                        detail::get_int(j.at("rank"), "\"rank\""));
  }
  if (kind == "graphic") {
    detail::require_keys(j, "graphic matroid", {"kind", "vertices", "edges"});
    int v = detail::get_int(j.at("vertices"), "\"vertices\"");
    std::vector<std::pair<int, int>> edges;
    if (!j.at("edges").is_array()) throw InvalidInputError("\"edges\" must be an array");
    for (const auto& e : j.at("edges")) {
      auto pair = detail::get_int_list(e, "edge");
      if (pair.size() != 2) throw InvalidInputError("each edge needs exactly two endpoints");
      edges.emplace_back(pair[0], pair[1]);
    }
    return std::make_shared<BasicGraphicMatroid<Words>>(v, std::move(edges));
  }
  if (kind == "linear_gf") {
    detail::require_keys(j, "linear matroid", {"kind", "prime", "rows"});
    if (!j.at("rows").is_array()) throw InvalidInputError("\"rows\" must be an array");
    std::vector<std::vector<long long>> rows;
    for (const auto& r : j.at("rows")) {
      rows.emplace_back();
      for (int v : detail::get_int_list(r, "matrix row")) rows.back().push_back(v);
    }
    return std::make_shared<BasicLinearMatroidGF<Words>>(
        detail::get_int(j.at("prime"), "\"prime\""), std::move(rows));
  }
  if (kind == "linear_q") {
    detail::require_keys(j, "linear matroid", {"kind", "rows"});
    if (!j.at("rows").is_array()) throw InvalidInputError("\"rows\" must be an array");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j.at("rows")) {
      if (!r.is_array()) throw InvalidInputError("matrix row must be an array");
      rows.emplace_back();
      for (const auto& v : r) {
        if (v.is_number_integer())
          rows.back().emplace_back(v.get<long long>());
        else if (v.is_string())
          rows.back().push_back(parse_rational(v.get<std::string>()));
        else
          throw InvalidInputError("matrix entries are integers or rational strings");
      }
    }
    return std::make_shared<BasicLinearMatroidQ<Words>>(std::move(rows));
  }
  if (kind == "transversal") {
    detail::require_keys(j, "transversal matroid", {"kind", "ground", "family"});
    int n = ground_of("ground");
    return std::make_shared<BasicTransversalMatroid<Words>>(n, family_of("family", n));
  }
  if (kind == "laminar") {
    detail::require_keys(j, "laminar matroid", {"kind", "ground", "family", "capacities"});
    int n = ground_of("ground");
    return std::make_shared<BasicLaminarMatroid<Words>>(
        n, family_of("family", n), detail::get_int_list(j.at("capacities"), "\"capacities\""));
  }
  if (kind == "explicit_bases") {
    detail::require_keys(j, "explicit matroid", {"kind", "ground", "bases"});
    int n = ground_of("ground");
    return std::make_shared<BasicExplicitBasesMatroid<Words>>(n, family_of("bases", n));
  }
  if (kind == "dual") {
    detail::require_keys(j, "dual", {"kind", "of"});
    return std::make_shared<BasicDualMatroid<Words>>(parse_matroid<Words>(j.at("of")));
  }
  if (kind == "restrict") {
    detail::require_keys(j, "restriction", {"kind", "of", "keep"});
    auto inner = parse_matroid<Words>(j.at("of"));
    auto keep = json_to_set<Words>(j.at("keep"), inner->ground_size(), "\"keep\"");
    return std::make_shared<BasicRestrictMatroid<Words>>(inner, keep);
  }
  if (kind == "contract") {
    detail::require_keys(j, "contraction", {"kind", "of", "away"});
    auto inner = parse_matroid<Words>(j.at("of"));
    auto away = json_to_set<Words>(j.at("away"), inner->ground_size(), "\"away\"");
    return std::make_shared<BasicContractMatroid<Words>>(inner, away);
  }
  if (kind == "direct_sum" || kind == "join") {
    detail::require_keys(j, kind, {"kind", "parts"});
    if (!j.at("parts").is_array() || j.at("parts").empty())
      throw InvalidInputError("\"parts\" must be a nonempty array");
    std::vector<BasicMatroidPtr<Words>> parts;
    for (const auto& p : j.at("parts")) parts.push_back(parse_matroid<Words>(p));
    if (kind == "direct_sum")
      return std::make_shared<BasicDirectSumMatroid<Words>>(std::move(parts));
    return std::make_shared<BasicJoinMatroid<Words>>(std::move(parts));
  }
  if (kind == "blowup") {
    detail::require_keys(j, "blow-up", {"kind", "of", "copies"});
    auto inner = parse_matroid<Words>(j.at("of"));
    auto copies = detail::get_int_list(j.at("copies"), "\"copies\"");
    return std::make_shared<BasicBlowUpMatroid<Words, Words>>(inner, copies);
  }
  throw InvalidInputError("unknown matroid kind \"" + kind + "\"");
}

// Top-level file shape: {"matroid": {...}}.
template <int Words>
BasicMatroidPtr<Words> load_matroid(const Json& doc) {
  detail::require_object(doc, "matroid file");
  detail::require_keys(doc, "matroid file", {"matroid"});
  return parse_matroid<Words>(doc.at("matroid"));
}

// Complex file shape: {"vertices": n, "facets": [[...]]}, vertices 1-based.
template <int Words>
BasicComplex<Words> parse_complex(const Json& doc) {
  detail::require_object(doc, "complex file");
  detail::require_keys(doc, "complex file", {"vertices", "facets"});
  int n = detail::get_int(doc.at("vertices"), "\"vertices\"");
  if (n < 0 || n + 1 > BasicElementSet<Words>::kCapacity)
    throw InvalidInputError("vertex count outside capacity");
  if (!doc.at("facets").is_array()) throw InvalidInputError("\"facets\" must be an array");
  std::vector<BasicElementSet<Words>> facets;
  for (const auto& f : doc.at("facets")) {
    auto labels = detail::get_int_list(f, "facet");
    BasicElementSet<Words> s(n + 1);
    for (int v : labels) {
      if (v < 1 || v > n)
        throw InvalidInputError("facet vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(n));
      s.insert(v);
    }
    facets.push_back(s);
  }
  return BasicComplex<Words>(n + 1, facets);
}

template <int Words>
Json complex_to_json(const BasicComplex<Words>& c) {
  Json facets = Json::array();
  for (const auto& f : c.facets()) facets.push_back(set_to_json(f));
  return Json{{"vertices", c.universe() - 1}, {"facets", facets}};
}

// Grid necklaces are nested arrays of colors, outermost axis first.
inline GridNecklace parse_grid(const Json& j) {
  std::vector<int> dims;
  const Json* level = &j;
  while (level->is_array()) {
    if (level->empty()) throw InvalidInputError("grid axes must be nonempty");
    dims.push_back(static_cast<int>(level->size()));
    level = &(*level)[0];
  }
  if (dims.empty()) throw InvalidInputError("a grid is a nested array of colors");

  std::vector<int> cells;
  std::function<void(const Json&, std::size_t)> walk = [&](const Json& node, std::size_t depth) {
    if (depth == dims.size()) {
      cells.push_back(detail::get_int(node, "grid cell"));
      return;
    }
    if (!node.is_array() || static_cast<int>(node.size()) != dims[depth])
      throw InvalidInputError("grid is not rectangular");
    for (const auto& child : node) walk(child, depth + 1);
  };
  walk(j, 0);
  return GridNecklace(std::move(dims), std::move(cells));
}

template <int Words>
Json covering_to_json(const BasicWCovering<Words>& cov) {
  Json classes = Json::array();
  for (const auto& [idx, cls] : cov.classes)
    classes.push_back(Json{{"matroid", idx}, {"elements", set_to_json(cls)}});
  return Json{{"classes", classes}, {"weight", cov.weight}};
}

template <int Words>
Json coloring_to_json(const BasicProperColoring<Words>& col) {
  Json classes = Json::array();
  for (const auto& [color, cls] : col.classes)
    classes.push_back(Json{{"color", color}, {"elements", set_to_json(cls)}});
  return Json{{"classes", classes}, {"weight", col.weight}};
}

inline Json splitting_to_json(const Splitting& s) {
  return Json{{"cuts", s.cuts}, {"axis_cuts", s.axis_cuts}, {"parts", s.part_of}};
}

inline Json moves_to_json(const std::vector<ExchangeMove>& moves) {
  Json out = Json::array();
  for (const auto& m : moves)
    out.push_back(Json{{"i", m.i}, {"j", m.j}, {"e", m.e}, {"f", m.f}});
  return out;
}

// Every command answers with this envelope on standard output.
inline Json envelope(bool ok, Json result, std::optional<Json> witness, double elapsed_ms) {
  Json out{{"ok", ok}, {"result", std::move(result)}, {"elapsed_ms", elapsed_ms}};
  if (witness) out["witness"] = std::move(*witness);
  return out;
}

inline void validate_envelope(const Json& j) {
  detail::require_object(j, "result envelope");
  if (!j.contains("ok") || !j.at("ok").is_boolean())
    throw InvalidInputError("envelope needs a boolean \"ok\"");
  if (!j.contains("result")) throw InvalidInputError("envelope needs a \"result\"");
  if (!j.contains("elapsed_ms") || !j.at("elapsed_ms").is_number())
    throw InvalidInputError("envelope needs a numeric \"elapsed_ms\"");
  for (const auto& [k, v] : j.items())
    if (k != "ok" && k != "result" && k != "elapsed_ms" && k != "witness")
      throw InvalidInputError("envelope has an unexpected key \"" + k + "\"");
  if (!j.at("ok").get<bool>() && !j.contains("witness"))
    throw InvalidInputError("failing envelope without a witness");
}

}  // namespace matroidlab

#endif
