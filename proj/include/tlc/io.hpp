#pragma once

// JSON (de)serialization for the construction types and JSON Lines helpers.
// Round trips are exact; malformed input surfaces as std::invalid_argument
// with a short reason, never as a raw parser exception.

#include <tlc/gluing.hpp>
#include <tlc/homology.hpp>
#include <tlc/simplicial_complex.hpp>
#include <tlc/tree_of_simplices.hpp>

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlc {

using json = nlohmann::json;

inline json to_json(const SimplicialComplex& K) {
  json j;
  j["facets"] = K.facets;
  return j;
}

inline json to_json(const TreeOfSimplices& T) {
  json atts = json::array();
  for (const auto& a : T.attachments) atts.push_back({a.parent, a.facet});
  return json{{"d", T.d}, {"attachments", atts}};
}

inline json to_json(const GluingMove& m) {
  json vm = json::array();
  for (auto [u, v] : m.vmap) vm.push_back({u, v});
  return json{{"a", m.cell_a}, {"b", m.cell_b}, {"map", vm}};
}

inline json to_json(const LocalConstruction& lc) {
  json moves = json::array();
  for (const auto& m : lc.moves) moves.push_back(to_json(m));
  return json{{"d", lc.tree.d},
              {"t", lc.t},
              {"tree", to_json(lc.tree)},
              {"moves", moves}};
}

inline json to_json(const HomologyProfile& H) {
  return json{{"dim", H.dim}, {"betti", H.betti}, {"torsion", H.torsion}};
}

namespace detail {
[[noreturn]] inline void bad_json(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    bad_json(std::string(what) + ": " + e.what());
  }
}
}  // namespace detail

inline SimplicialComplex complex_from_json(const json& j) {
  return detail::guarded("complex", [&] {
    return from_faces(j.at("facets").get<std::vector<Face>>());
  });
}

inline TreeOfSimplices tree_from_json(const json& j) {
  return detail::guarded("tree", [&] {
    TreeOfSimplices T;
    T.d = j.at("d").get<int>();
    for (const auto& a : j.at("attachments")) {
      if (!a.is_array() || a.size() != 2) detail::bad_json("tree: attachment");
      TreeOfSimplices::Attachment att;
      att.parent = a[0].get<int>();
      att.facet = a[1].get<Face>();
      T.attachments.push_back(std::move(att));
    }
    return T;
  });
}

inline GluingMove move_from_json(const json& j) {
  return detail::guarded("move", [&] {
    GluingMove m;
    m.cell_a = j.at("a").get<int>();
    m.cell_b = j.at("b").get<int>();
    for (const auto& p : j.at("map")) {
      if (!p.is_array() || p.size() != 2) detail::bad_json("move: map entry");
      m.vmap.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return m;
  });
}

inline LocalConstruction construction_from_json(const json& j) {
  return detail::guarded("construction", [&] {
    LocalConstruction lc;
    lc.tree = tree_from_json(j.at("tree"));
    lc.t = j.at("t").get<int>();
    if (j.contains("d") && j.at("d").get<int>() != lc.tree.d)
      detail::bad_json("construction: d disagrees with tree");
    for (const auto& m : j.at("moves")) lc.moves.push_back(move_from_json(m));
    return lc;
  });
}

inline json parse_json(const std::string& text) {
  return detail::guarded("parse", [&] { return json::parse(text); });
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("json: cannot open " + path);
  return detail::guarded("parse",
                         [&] { return json::parse(in); });
}

inline void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("json: cannot write " + path);
  out << j.dump(2) << "\n";
}

inline std::vector<json> load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("json: cannot open " + path);
  std::vector<json> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_json(line));
  }
  return out;
}

}  // namespace tlc
