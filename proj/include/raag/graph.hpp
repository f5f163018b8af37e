#pragma once

// Finite reflexive graphs and graph homomorphisms.
//
// A Graph is a symmetric relation on a finite set of named vertices, with a
// loop at every vertex. Loops are never stored; adjacent(v, v) is always true.
// Vertices are kept sorted byte-wise by name and that order is what every
// canonical form downstream uses.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/error.hpp"

namespace raag {

using Edge = std::pair<std::string, std::string>;

inline bool is_valid_name(std::string_view name) {
  if (name.empty()) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')
           || (c >= '0' && c <= '9') || c == '_';
  });
}

class Graph {
 public:
  Graph() : data_(empty_data()) {}

  std::size_t size() const noexcept { return data_->names.size(); }
  bool empty() const noexcept { return size() == 0; }

  std::vector<std::string> const& vertices() const noexcept {
    return data_->names;
  }
  std::string const& name(std::size_t i) const { return data_->names.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    auto const& n  = data_->names;
    auto        it = std::lower_bound(n.begin(), n.end(), name);
    if (it == n.end() || *it != name) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - n.begin());
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) {
      return *i;
    }
    throw Error(ErrorKind::unknown_vertex, std::string(name));
  }

  // Reflexive: adjacent(i, i) is true.
  bool adjacent(std::size_t i, std::size_t j) const noexcept {
    return i == j || data_->adj[i * size() + j] != 0;
  }

  std::size_t degree(std::size_t i) const noexcept { return data_->degree[i]; }

  // Non-loop edges as index pairs (i < j), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> const& edges()
      const noexcept {
    return data_->edges;
  }

  std::vector<Edge> named_edges() const {
    std::vector<Edge> out;
    out.reserve(edges().size());
    for (auto [i, j] : edges()) {
      out.emplace_back(name(i), name(j));
    }
    return out;
  }

  friend bool operator==(Graph const& a, Graph const& b) {
    return a.data_ == b.data_
           || (a.data_->names == b.data_->names
               && a.data_->edges == b.data_->edges);
  }

  // Builds from already-validated, sorted, distinct names and index edges.
  static Graph from_indices(std::vector<std::string>                        names,
                            std::vector<std::pair<std::size_t, std::size_t>> edges) {
    auto d   = std::make_shared<Data>();
    auto n   = names.size();
    d->names = std::move(names);
    d->adj.assign(n * n, 0);
    d->degree.assign(n, 0);
    for (auto [i, j] : edges) {
      if (i > j) {
        std::swap(i, j);
      }
      if (d->adj[i * n + j] == 0) {
        d->adj[i * n + j] = d->adj[j * n + i] = 1;
        ++d->degree[i];
        ++d->degree[j];
        d->edges.emplace_back(i, j);
      }
    }
    std::sort(d->edges.begin(), d->edges.end());
    return Graph(std::move(d));
  }

 private:
  struct Data {
    std::vector<std::string>                         names;
    std::vector<std::uint8_t>                        adj;
    std::vector<std::size_t>                         degree;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
  };

  explicit Graph(std::shared_ptr<Data const> d) : data_(std::move(d)) {}

  static std::shared_ptr<Data const> const& empty_data() {
    static auto const d = std::make_shared<Data const>();
    return d;
  }

  std::shared_ptr<Data const> data_;
};

/// Normalizes raw input into a Graph. Vertices are sorted, edges
/// deduplicated; an edge may be listed in either orientation.
inline Graph validate_graph(std::vector<std::string> const& vertices,
                            std::vector<Edge> const&        edges) {
  std::vector<std::string> names(vertices);
  for (auto const& v : names) {
    if (!is_valid_name(v)) {
      throw Error(ErrorKind::invalid_name, "'" + v + "'");
    }
  }
  std::sort(names.begin(), names.end());
  if (auto it = std::adjacent_find(names.begin(), names.end());
      it != names.end()) {
    throw Error(ErrorKind::duplicate_vertex, *it);
  }
  auto lookup = [&](std::string const& v) {
    auto it = std::lower_bound(names.begin(), names.end(), v);
    if (it == names.end() || *it != v) {
      throw Error(ErrorKind::unknown_endpoint, v);
    }
    return static_cast<std::size_t>(it - names.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(edges.size());
  for (auto const& [u, v] : edges) {
    auto i = lookup(u);
    auto j = lookup(v);
    if (i == j) {
      throw Error(ErrorKind::explicit_self_loop, u);
    }
    idx.emplace_back(i, j);
  }
  return Graph::from_indices(std::move(names), std::move(idx));
}

inline bool adjacent(Graph const& g, std::string_view u, std::string_view v) {
  return g.adjacent(g.index_of(u), g.index_of(v));
}

/// Full subgraph on the given vertex indices (any order, no duplicates).
inline Graph full_subgraph(Graph const& g, std::vector<std::size_t> keep) {
  std::sort(keep.begin(), keep.end());
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (auto i : keep) {
    names.push_back(g.name(i));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (g.adjacent(keep[a], keep[b])) {
        edges.emplace_back(a, b);
      }
    }
  }
  return Graph::from_indices(std::move(names), std::move(edges));
}

////////////////////////////////////////////////////////////////////////////////
// Homomorphisms
////////////////////////////////////////////////////////////////////////////////

class GraphHom {
 public:
  GraphHom(Graph source, Graph target, std::vector<std::size_t> map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {}

  Graph const& source() const noexcept { return source_; }
  Graph const& target() const noexcept { return target_; }

  std::size_t operator()(std::size_t v) const { return map_.at(v); }
  std::string const& operator()(std::string_view v) const {
    return target_.name(map_.at(source_.index_of(v)));
  }

  std::vector<std::size_t> const& table() const noexcept { return map_; }

  std::map<std::string, std::string> to_map() const {
    std::map<std::string, std::string> out;
    for (std::size_t v = 0; v < map_.size(); ++v) {
      out.emplace(source_.name(v), target_.name(map_[v]));
    }
    return out;
  }

  friend bool operator==(GraphHom const& a, GraphHom const& b) {
    return a.map_ == b.map_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  Graph                    source_;
  Graph                    target_;
  std::vector<std::size_t> map_;
};

namespace detail {
  // First source edge not preserved, if any.
  inline std::optional<std::pair<std::size_t, std::size_t>>
  broken_edge(Graph const& src, Graph const& dst,
              std::span<std::size_t const> map) {
    for (auto [u, v] : src.edges()) {
      if (!dst.adjacent(map[u], map[v])) {
        return std::make_pair(u, v);
      }
    }
    return std::nullopt;
  }
}  // namespace detail

inline GraphHom validate_hom(Graph const& src, Graph const& dst,
                             std::map<std::string, std::string> const& map) {
  std::vector<std::size_t> table(src.size());
  std::vector<bool>        seen(src.size(), false);
  for (auto const& [from, to] : map) {
    auto i = src.index_of(from);
    auto j = dst.index_of(to);
    table[i] = j;
    seen[i]  = true;
  }
  for (std::size_t v = 0; v < src.size(); ++v) {
    if (!seen[v]) {
      throw Error(ErrorKind::unknown_vertex,
                  "no image for source vertex " + src.name(v));
    }
  }
  if (auto e = detail::broken_edge(src, dst, table)) {
    throw Error(ErrorKind::not_a_hom,
                "edge (" + src.name(e->first) + "," + src.name(e->second)
                    + ") maps to non-adjacent (" + dst.name(table[e->first])
                    + "," + dst.name(table[e->second]) + ")");
  }
  return GraphHom(src, dst, std::move(table));
}

inline GraphHom identity_hom(Graph const& g) {
  std::vector<std::size_t> table(g.size());
  std::iota(table.begin(), table.end(), std::size_t{0});
  return GraphHom(g, g, std::move(table));
}

/// The composite "first f, then g".
inline GraphHom compose_homs(GraphHom const& f, GraphHom const& g) {
  if (!(f.target() == g.source())) {
    throw Error(ErrorKind::mismatched_ends,
                "target of the first map is not the source of the second");
  }
  std::vector<std::size_t> table(f.source().size());
  for (std::size_t v = 0; v < table.size(); ++v) {
    table[v] = g(f(v));
  }
  return GraphHom(f.source(), g.target(), std::move(table));
}

/// Full subgraph on {v : alpha(v) = beta(v)} and its inclusion.
inline std::pair<Graph, GraphHom> equalizer(GraphHom const& alpha,
                                            GraphHom const& beta) {
  if (!(alpha.source() == beta.source()) || !(alpha.target() == beta.target())) {
    throw Error(ErrorKind::mismatched_ends, "equalizer needs a parallel pair");
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < alpha.source().size(); ++v) {
    if (alpha(v) == beta(v)) {
      keep.push_back(v);
    }
  }
  auto theta = full_subgraph(alpha.source(), keep);
  return {theta, GraphHom(theta, alpha.source(), keep)};
}

/// True iff rho is a common retract: rho . alpha = rho . beta = id.
inline bool is_coreflexive_pair(GraphHom const& alpha, GraphHom const& beta,
                                GraphHom const& rho) {
  if (!(alpha.source() == beta.source()) || !(alpha.target() == beta.target())
      || !(rho.source() == alpha.target()) || !(rho.target() == alpha.source())) {
    throw Error(ErrorKind::mismatched_ends,
                "expected alpha, beta: G -> D and rho: D -> G");
  }
  for (std::size_t v = 0; v < alpha.source().size(); ++v) {
    if (rho(alpha(v)) != v || rho(beta(v)) != v) {
      return false;
    }
  }
  return true;
}

inline constexpr std::uint64_t max_hom_search_space = 1'000'000;

/// Every homomorphism src -> dst, in lexicographic order of the map table.
inline std::vector<GraphHom> enumerate_homs(Graph const& src, Graph const& dst) {
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < src.size() && dst.size() > 0; ++i) {
    space *= dst.size();
    if (space > max_hom_search_space) {
      throw Error(ErrorKind::search_space_too_large,
                  std::to_string(dst.size()) + "^" + std::to_string(src.size())
                      + " candidate maps");
    }
  }
  std::vector<GraphHom> out;
  auto const            n = src.size();
  if (n == 0) {
    out.push_back(GraphHom(src, dst, {}));
    return out;
  }
  if (dst.empty()) {
    return out;
  }
  // Depth-first in table order; prune as soon as an edge between assigned
  // vertices breaks.
  std::vector<std::size_t> table(n, 0);
  std::size_t              depth = 0;
  auto consistent = [&](std::size_t v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (src.adjacent(u, v) && !dst.adjacent(table[u], table[v])) {
        return false;
      }
    }
    return true;
  };
  table[0] = 0;
  while (true) {
    if (consistent(depth)) {
      if (depth + 1 == n) {
        out.emplace_back(src, dst, table);
      } else {
        ++depth;
        table[depth] = 0;
        continue;
      }
    }
    // advance
    while (++table[depth] == dst.size()) {
      if (depth == 0) {
        return out;
      }
      --depth;
    }
  }
}

inline constexpr std::size_t max_isomorphism_vertices = 10;

/// Backtracking search with degree pruning. Exponential; desk scale only.
inline std::optional<GraphHom> graphs_isomorphic(Graph const& g1,
                                                 Graph const& g2) {
  if (g1.size() > max_isomorphism_vertices
      || g2.size() > max_isomorphism_vertices) {
    throw Error(ErrorKind::search_space_too_large,
                "isomorphism search is limited to "
                    + std::to_string(max_isomorphism_vertices) + " vertices");
  }
  if (g1.size() != g2.size() || g1.edges().size() != g2.edges().size()) {
    return std::nullopt;
  }
  auto degrees = [](Graph const& g) {
    std::vector<std::size_t> d(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      d[i] = g.degree(i);
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g1) != degrees(g2)) {
    return std::nullopt;
  }
  auto const               n = g1.size();
  std::vector<std::size_t> table(n);
  std::vector<bool>        used(n, false);

  auto extend = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) {
      return true;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || g1.degree(v) != g2.degree(w)) {
        continue;
      }
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        ok = g1.adjacent(u, v) == g2.adjacent(table[u], w);
      }
      if (!ok) {
        continue;
      }
      table[v] = w;
      used[w]  = true;
      if (self(self, v + 1)) {
        return true;
      }
      used[w] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) {
    return std::nullopt;
  }
  return GraphHom(g1, g2, std::move(table));
}

////////////////////////////////////////////////////////////////////////////////
// Named families
////////////////////////////////////////////////////////////////////////////////

namespace graphs {
  inline Graph discrete(std::vector<std::string> const& names) {
    return validate_graph(names, {});
  }

  inline Graph complete(std::vector<std::string> const& names) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        edges.emplace_back(names[i], names[j]);
      }
    }
    return validate_graph(names, edges);
  }

  inline Graph path(std::vector<std::string> const& names) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < names.size(); ++i) {
      edges.emplace_back(names[i], names[i + 1]);
    }
    return validate_graph(names, edges);
  }

  inline Graph cycle(std::vector<std::string> const& names) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < names.size(); ++i) {
      edges.emplace_back(names[i], names[(i + 1) % names.size()]);
    }
    return validate_graph(names, edges);
  }

  // Centre first, then leaves.
  inline Graph star(std::vector<std::string> const& names) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < names.size(); ++i) {
      edges.emplace_back(names[0], names[i]);
    }
    return validate_graph(names, edges);
  }

  // a-b-c-d-a
  inline Graph square() { return cycle({"a", "b", "c", "d"}); }
}  // namespace graphs

}  // namespace raag
