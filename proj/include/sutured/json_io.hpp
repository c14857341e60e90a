#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "sutured/dividing.hpp"
#include "sutured/gluing.hpp"

namespace sutured {

using Json = nlohmann::json;

namespace detail {

inline const std::vector<std::pair<Mark, const char*>>& mark_keys() {
  static const std::vector<std::pair<Mark, const char*>> keys{
      {Mark::FPlus, "F_plus"}, {Mark::FMinus, "F_minus"}, {Mark::AlphaPlus, "alpha_plus"}, {Mark::AlphaMinus, "alpha_minus"}};
  return keys;
}

inline int json_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw StructuralError(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline std::vector<int> json_ints(const Json& j, const char* what) {
  if (!j.is_array()) throw StructuralError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(json_int(x, what));
  return out;
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw StructuralError(std::string("missing field ") + key);
  return j.at(key);
}

}  // namespace detail

inline Json surface_to_json(const SuturedSurface& s) {
  const Complex& c = s.complex();
  Json j;
  j["vertices"] = Json::array();
  for (int v = 0; v < c.vertex_count(); ++v) j["vertices"].push_back(v);
  j["halfedges"] = Json::array();
  for (int h = 0; h < c.halfedge_count(); ++h) j["halfedges"].push_back({{"id", h}, {"twin", c.twin(h)}, {"head", c.head(h)}});
  j["faces"] = c.faces();
  Json marks = Json::object();
  for (auto [m, key] : detail::mark_keys()) marks[key] = s.vertices_with(m);
  j["marks"] = marks;
  return j;
}

/// Throws StructuralError on malformed input; surface validity is left to validate().
inline SuturedSurface surface_from_json(const Json& j) {
  std::vector<int> verts = detail::json_ints(detail::field(j, "vertices"), "vertices");
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i] != static_cast<int>(i)) throw StructuralError("vertices must be 0, 1, ..., n-1");
  const Json& hs = detail::field(j, "halfedges");
  if (!hs.is_array()) throw StructuralError("halfedges must be an array");
  const int H = static_cast<int>(hs.size());
  std::vector<int> head(H, -1), twin(H, -1);
  std::vector<char> seen(H, 0);
  for (const auto& e : hs) {
    int id = detail::json_int(detail::field(e, "id"), "halfedge id");
    if (id < 0 || id >= H || seen[id]) throw StructuralError("halfedge ids must be 0, 1, ..., m-1 without repeats");
    seen[id] = 1;
    head[id] = detail::json_int(detail::field(e, "head"), "head");
    twin[id] = detail::json_int(detail::field(e, "twin"), "twin");
  }
  const Json& fs = detail::field(j, "faces");
  if (!fs.is_array()) throw StructuralError("faces must be an array");
  std::vector<std::vector<int>> faces;
  for (const auto& f : fs) faces.push_back(detail::json_ints(f, "face"));
  const int V = static_cast<int>(verts.size());
  std::vector<Mark> marks(V, Mark::None);
  const Json& mj = detail::field(j, "marks");
  for (auto [m, key] : detail::mark_keys()) {
    if (!mj.contains(key)) continue;
    for (int v : detail::json_ints(mj.at(key), key)) {
      if (v < 0 || v >= V) throw StructuralError("marked vertex out of range");
      if (marks[v] != Mark::None) throw StructuralError("vertex carries two marks");
      marks[v] = m;
    }
  }
  return SuturedSurface(Complex(V, head, twin, faces), marks);
}

/// Surface JSON extended by K and per-face signs.
inline Json dividing_set_to_json(const SuturedSurface& s, const DividingSet& k) {
  Json j = surface_to_json(s);
  j["K"] = k.K;
  Json signs = Json::object();
  for (std::size_t f = 0; f < k.sign.size(); ++f) signs[std::to_string(f)] = k.sign[f] > 0 ? "+" : "-";
  j["signs"] = signs;
  return j;
}

inline std::pair<SuturedSurface, DividingSet> dividing_set_from_json(const Json& j) {
  SuturedSurface s = surface_from_json(j);
  DividingSet k;
  k.K = detail::json_ints(detail::field(j, "K"), "K");
  for (int h : k.K)
    if (h < 0 || h >= s.complex().halfedge_count()) throw StructuralError("K uses a missing halfedge");
  const Json& sj = detail::field(j, "signs");
  if (!sj.is_object()) throw StructuralError("signs must map face ids to \"+\" or \"-\"");
  k.sign.assign(s.complex().face_count(), 0);
  for (const auto& [key, val] : sj.items()) {
    int f = -1;
    try {
      std::size_t used = 0;
      f = std::stoi(key, &used);
      if (used != key.size()) f = -1;
    } catch (const std::logic_error&) {
    }
    if (f < 0 || f >= s.complex().face_count()) throw StructuralError("sign for a missing face " + key);
    if (val != "+" && val != "-") throw StructuralError("face signs must be \"+\" or \"-\"");
    k.sign[f] = val == "+" ? 1 : -1;
  }
  for (int x : k.sign)
    if (!x) throw StructuralError("every face needs a sign");
  return {s, k};
}

/// The vertex map is derived from gamma and gamma'; it is emitted for readers.
inline Json gluing_to_json(const Complex& c, const Gluing& g) {
  Json j;
  j["gamma"] = g.gamma;
  j["gamma_prime"] = g.gamma_prime;
  Json vm = Json::object();
  if (auto m = gluing_vertex_map(c, g))
    for (auto [u, v] : *m) vm[std::to_string(u)] = v;
  j["vertex_map"] = vm;
  return j;
}

/// A vertex_map, when present, must agree with the one the arcs determine.
inline Gluing gluing_from_json(const Complex& c, const Json& j) {
  Gluing g;
  g.gamma = detail::json_ints(detail::field(j, "gamma"), "gamma");
  g.gamma_prime = detail::json_ints(detail::field(j, "gamma_prime"), "gamma_prime");
  for (const auto* arc : {&g.gamma, &g.gamma_prime})
    for (int h : *arc)
      if (h < 0 || h >= c.halfedge_count()) throw StructuralError("gluing uses a missing halfedge");
  if (g.gamma.size() != g.gamma_prime.size()) throw StructuralError("gamma and gamma_prime differ in length");
  if (j.contains("vertex_map")) {
    const Json& vm = j.at("vertex_map");
    if (!vm.is_object()) throw StructuralError("vertex_map must be an object");
    std::map<int, int> given;
    for (const auto& [key, val] : vm.items()) {
      try {
        given[std::stoi(key)] = detail::json_int(val, "vertex_map value");
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const StructuralError*>(&e)) throw;
        throw StructuralError("vertex_map keys must be vertex ids");
      }
    }
    auto derived = gluing_vertex_map(c, g);
    if (!given.empty() && (!derived || given != *derived)) throw StructuralError("vertex_map disagrees with gamma and gamma_prime");
  }
  return g;
}

}  // namespace sutured
