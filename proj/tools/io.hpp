#pragma once

// JSON file formats read and written by the command-line tool.
//
// A field that names another document may hold either a path (resolved
// against the directory of the file that mentions it) or the document inline.

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "raag/raag.hpp"

namespace raag::io {

using nlohmann::json;
namespace fs = std::filesystem;

struct Document {
  json     value;
  fs::path dir;  // for resolving nested paths
};

inline Document read_document(fs::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::invalid_input, "cannot open " + path.string());
  }
  try {
    return {json::parse(in), path.parent_path()};
  } catch (json::exception const& e) {
    throw Error(ErrorKind::syntax_error, path.string() + ": " + e.what());
  }
}

// Follows a path-valued field, or returns the inline value.
inline Document resolve(Document const& parent, json const& field) {
  if (field.is_string()) {
    return read_document(parent.dir / field.get<std::string>());
  }
  return {field, parent.dir};
}

inline json const& require(json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::invalid_input, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

inline std::string as_string(json const& j, char const* what) {
  if (!j.is_string()) {
    throw Error(ErrorKind::invalid_input, std::string(what) + " must be a string");
  }
  return j.get<std::string>();
}

inline std::map<std::string, std::string> string_map(json const& j, char const* what) {
  if (!j.is_object()) {
    throw Error(ErrorKind::invalid_input, std::string(what) + " must be an object");
  }
  std::map<std::string, std::string> out;
  for (auto const& [k, v] : j.items()) {
    out.emplace(k, as_string(v, what));
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////////
// Graphs and graph maps

inline Graph graph_from_json(json const& j) {
  auto const& vs = require(j, "vertices");
  auto const& es = require(j, "edges");
  if (!vs.is_array() || !es.is_array()) {
    throw Error(ErrorKind::invalid_input, "vertices and edges must be arrays");
  }
  std::vector<std::string> vertices;
  for (auto const& v : vs) {
    vertices.push_back(as_string(v, "vertex"));
  }
  std::vector<Edge> edges;
  for (auto const& e : es) {
    if (!e.is_array() || e.size() != 2) {
      throw Error(ErrorKind::invalid_input, "an edge is a pair of vertex names");
    }
    edges.emplace_back(as_string(e[0], "edge endpoint"), as_string(e[1], "edge endpoint"));
  }
  return validate_graph(vertices, edges);
}

inline json graph_to_json(Graph const& g) {
  json edges = json::array();
  for (auto const& [u, v] : g.named_edges()) {
    edges.push_back({u, v});
  }
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

inline Graph load_graph(fs::path const& path) {
  return graph_from_json(read_document(path).value);
}

inline GraphHom hom_from_document(Document const& doc) {
  auto src = graph_from_json(resolve(doc, require(doc.value, "source")).value);
  auto dst = graph_from_json(resolve(doc, require(doc.value, "target")).value);
  return validate_hom(src, dst, string_map(require(doc.value, "map"), "map"));
}

inline GraphHom load_graph_hom(fs::path const& path) {
  return hom_from_document(read_document(path));
}

////////////////////////////////////////////////////////////////////////////////
// Groups

// A plain graph gives the default handle; {"graph", "generators"} gives a
// handle exposing the named words.
inline GroupHandle handle_from_document(Document const& doc) {
  auto const& j = doc.value;
  if (j.is_object() && j.contains("generators")) {
    auto g = graph_from_json(resolve(doc, require(j, "graph")).value);
    std::vector<std::pair<std::string, Word>> exposed;
    auto const& gens = require(j, "generators");
    if (!gens.is_object()) {
      throw Error(ErrorKind::invalid_input, "generators must map names to words");
    }
    for (auto const& [name, text] : gens.items()) {
      if (!is_valid_name(name)) {
        throw Error(ErrorKind::invalid_name, name);
      }
      exposed.emplace_back(name, parse_word(g, as_string(text, "generator word")));
    }
    return GroupHandle(g, exposed);
  }
  return GroupHandle(graph_from_json(j));
}

inline GroupHandle load_handle(fs::path const& path) {
  return handle_from_document(read_document(path));
}

inline json handle_to_json(GroupHandle const& h) {
  if (h.is_default()) {
    return graph_to_json(h.graph());
  }
  json gens = json::object();
  for (std::size_t i = 0; i < h.num_generators(); ++i) {
    gens[h.generator_name(i)] = to_string(h.generator(i));
  }
  return {{"graph", graph_to_json(h.graph())}, {"generators", gens}};
}

// {"images": {generator: word}}; "map" is accepted as a synonym.
inline GroupHom group_hom_from_document(GroupHandle const& src, GroupHandle const& dst,
                                        Document const& doc) {
  auto const& j   = doc.value;
  auto const& raw = j.contains("images") ? j.at("images") : require(j, "map");
  std::map<std::string, Word> images;
  for (auto const& [name, text] : string_map(raw, "image")) {
    images.emplace(name, parse_word(dst.graph(), text));
  }
  return group_hom(src, dst, images);
}

////////////////////////////////////////////////////////////////////////////////
// Coalgebras and presentations

inline CoalgebraMap coalgebra_from_document(Document const& doc) {
  auto group = handle_from_document(resolve(doc, require(doc.value, "group")));
  std::map<std::string, AcGWord> images;
  for (auto const& [name, text] : string_map(require(doc.value, "images"), "image")) {
    images.emplace(name, parse_ac_word(group, text));
  }
  return make_coalgebra_map(group, images);
}

inline CoalgebraMap load_coalgebra(fs::path const& path) {
  return coalgebra_from_document(read_document(path));
}

inline json coalgebra_to_json(CoalgebraMap const& c) {
  json images = json::object();
  for (std::size_t i = 0; i < c.group.num_generators(); ++i) {
    images[c.group.generator_name(i)] = to_string(c.images[i]);
  }
  return {{"group", handle_to_json(c.group)}, {"images", images}};
}

inline FinitePresentation load_presentation(fs::path const& path) {
  auto        doc  = read_document(path);
  auto const& gens = require(doc.value, "generators");
  auto const& rels = require(doc.value, "relators");
  if (!gens.is_array() || !rels.is_array()) {
    throw Error(ErrorKind::invalid_input, "generators and relators must be arrays");
  }
  std::vector<std::string> g;
  std::vector<std::string> r;
  for (auto const& x : gens) {
    g.push_back(as_string(x, "generator"));
  }
  for (auto const& x : rels) {
    r.push_back(as_string(x, "relator"));
  }
  return make_presentation(g, r);
}

inline IntegerMatrix load_matrix(fs::path const& path) {
  auto doc = read_document(path);
  if (!doc.value.is_array()) {
    throw Error(ErrorKind::invalid_input, "a matrix is an array of rows");
  }
  std::vector<std::vector<Integer>> rows;
  for (auto const& row : doc.value) {
    if (!row.is_array()) {
      throw Error(ErrorKind::invalid_input, "a matrix row is an array");
    }
    auto& out = rows.emplace_back();
    for (auto const& x : row) {
      if (x.is_number_integer()) {
        out.emplace_back(x.get<long long>());
      } else if (x.is_string()) {
        out.emplace_back(x.get<std::string>());
      } else {
        throw Error(ErrorKind::invalid_input, "matrix entries are integers");
      }
    }
  }
  return IntegerMatrix::from_rows(rows);
}

}  // namespace raag::io
