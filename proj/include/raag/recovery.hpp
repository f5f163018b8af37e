#pragma once

// Recovering a graph from a coalgebra-equipped group, and the bounded search
// for a coalgebra structure on a presented group.
//
// The vertices of the hidden graph are exactly the elements g != 1 with
// structure(g) = [g]; there are as many of them as the rank of the
// abelianization, which is what lets the scan stop.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/ac.hpp"
#include "raag/coalgebra.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/group.hpp"
#include "raag/presentation.hpp"
#include "raag/word.hpp"

namespace raag {

struct Element {
  Word value;     // normal form over the presentation graph
  Word spelling;  // freely reduced word in the exposed generators
};

/// All elements of word length <= max_length in the exposed generators,
/// identity first, then by length; within a length, in the order products
/// are first reached (letters x0, x0^-1, x1, x1^-1, ...).
inline std::vector<Element> enumerate_elements(GroupHandle const& g,
                                               std::size_t        max_length) {
  std::vector<Element> out;
  detail::walk_products(g.graph(), g.generator_graph(), g.generators(),
                        max_length, [&](Word const& elt, Word const& spelling) {
                          out.push_back({elt, spelling});
                          return true;
                        });
  return out;
}

struct Vertex {
  Word value;
  Word spelling;
};

/// Non-identity elements fixed by the structure map in the sense
/// structure(g) = [g]. Stops after `rank` hits.
inline std::vector<Vertex> find_vertices(CoalgebraMap const& c,
                                         std::size_t         rank,
                                         std::size_t         max_length) {
  std::vector<Vertex> out;
  if (rank == 0) {
    return out;
  }
  AcG acg(c.group);
  detail::walk_products(
      c.group.graph(), c.group.generator_graph(), c.group.generators(),
      max_length, [&](Word const& elt, Word const& spelling) {
        if (elt.is_identity()) {
          return true;
        }
        auto image = apply_structure_spelled(c, spelling);
        if (ac_equals(image, ac_symbol(c.group, elt))) {
          out.push_back({elt, spelling});
        }
        return out.size() < rank;
      });
  if (out.size() < rank) {
    throw BudgetExhausted(out.size(), rank);
  }
  return out;
}

struct RecoveredGraph {
  Graph             graph;
  std::vector<Word> labels;  // labels[i] is the element behind vertex i
};

/// Vertex name for a recovered element: its word text when that is a legal
/// vertex name, otherwise "v<index>".
inline std::string vertex_name_for(Word const& w, std::size_t index) {
  auto text = to_string(w);
  return is_valid_name(text) ? text : "v" + std::to_string(index);
}

inline RecoveredGraph recover_graph(CoalgebraMap const& c, std::size_t rank,
                                   std::size_t max_length) {
  auto found = find_vertices(c, rank, max_length);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < found.size(); ++i) {
    names.push_back(vertex_name_for(found[i].value, i));
  }
  // Fall back to positional names if two texts collide with a "v<i>" name.
  {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      for (std::size_t i = 0; i < names.size(); ++i) {
        names[i] = "v" + std::to_string(i);
      }
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = i + 1; j < found.size(); ++j) {
      if (commutes(found[i].value, found[j].value)) {
        edges.emplace_back(names[i], names[j]);
      }
    }
  }
  auto g = validate_graph(names, edges);
  std::vector<Word> labels(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    labels[g.index_of(names[i])] = found[i].value;
  }
  return {std::move(g), std::move(labels)};
}

////////////////////////////////////////////////////////////////////////////////
// Bounded coalgebra search
////////////////////////////////////////////////////////////////////////////////

struct SearchStats {
  std::size_t symbols    = 0;  // size of the symbol pool
  std::size_t candidates = 0;  // full maps examined
};

namespace detail {
  // Reduced sequences of (symbol, +-1) of length 1..max_len, shortest first,
  // then lexicographic in (pool index, sign), merged into AC words.
  inline void for_each_image(AcG const& acg, std::vector<Word> const& pool,
                             std::size_t max_len,
                             std::function<void(AcGWord, std::size_t)> const& emit) {
    std::vector<std::pair<std::size_t, int>> seq;
    auto rec = [&](auto&& self, std::size_t len) -> void {
      if (seq.size() == len) {
        auto out = acg.identity();
        for (auto [s, sign] : seq) {
          out = acg.multiply(out, AcGWord(acg.base(), {AcLetter<GroupHandle>{pool[s], sign}}));
        }
        emit(std::move(out), len);
        return;
      }
      for (std::size_t s = 0; s < pool.size(); ++s) {
        for (int sign : {1, -1}) {
          if (!seq.empty() && seq.back().first == s && seq.back().second == -sign) {
            continue;
          }
          seq.emplace_back(s, sign);
          self(self, len);
          seq.pop_back();
        }
      }
    };
    for (std::size_t len = 1; len <= max_len; ++len) {
      rec(rec, len);
    }
  }
}  // namespace detail

/// Enumerates structure maps on the group presented by `p` whose images use
/// symbols from the ball of radius symbol_budget in `wp` and have at most
/// image_budget letters, in order of increasing total length. Returns the
/// first map that kills every relator of `p` and passes check_coalgebra.
/// std::nullopt means "nothing within budget", never "no coalgebra exists".
///
/// `wp` answers the word problem; its exposed generator names must be the
/// generators of `p`.
inline std::optional<CoalgebraMap> search_coalgebra(FinitePresentation const& p,
                                                    GroupHandle const& wp,
                                                    std::size_t symbol_budget,
                                                    std::size_t image_budget,
                                                    SearchStats* stats = nullptr) {
  if (!(p.free_graph == wp.generator_graph())) {
    throw Error(ErrorKind::invalid_input,
                "presentation generators differ from the handle's generators");
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (!wp.evaluate(p.relators[i]).is_identity()) {
      throw Error(ErrorKind::invalid_input,
                  "relator " + p.labels[i] + " does not hold in the promised group");
    }
  }
  AcG               acg(wp);
  std::vector<Word> pool;
  for (auto const& e : enumerate_elements(wp, symbol_budget)) {
    // Identity symbols are central and never appear in a coalgebra image.
    if (!e.value.is_identity()) {
      pool.push_back(e.value);
    }
  }
  if (stats != nullptr) {
    stats->symbols = pool.size();
  }

  // The counit axiom constrains each generator separately, so filter first.
  auto const n = wp.num_generators();
  // per generator, per image length
  std::vector<std::vector<std::vector<AcGWord>>> options(
      n, std::vector<std::vector<AcGWord>>(image_budget + 1));
  detail::for_each_image(acg, pool, image_budget,
                         [&](AcGWord img, std::size_t len) {
                           auto back = epsilon(img);
                           for (std::size_t i = 0; i < n; ++i) {
                             if (back == wp.generator(i)) {
                               options[i][len].push_back(img);
                             }
                           }
                         });

  if (n == 0) {
    return CoalgebraMap{wp, {}};
  }

  std::vector<std::size_t>   lens(n);
  std::vector<std::size_t>   pick(n);
  std::optional<CoalgebraMap> found;

  auto try_candidate = [&]() {
    std::vector<AcGWord> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = options[i][lens[i]][pick[i]];
    }
    if (stats != nullptr) {
      ++stats->candidates;
    }
    CoalgebraMap c{wp, std::move(images)};
    auto         hom = c.as_hom();
    for (auto const& r : p.relators) {
      if (!ac_equals(hom.apply_spelling(r), acg.identity())) {
        return false;
      }
    }
    if (check_coalgebra(c)) {
      found = std::move(c);
      return true;
    }
    return false;
  };

  // Over index tuples for the fixed length vector `lens`, lexicographically.
  auto product = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) {
      return try_candidate();
    }
    for (pick[i] = 0; pick[i] < options[i][lens[i]].size(); ++pick[i]) {
      if (self(self, i + 1)) {
        return true;
      }
    }
    return false;
  };
  // Over length vectors with the given total, lexicographically.
  auto compositions = [&](auto&& self, std::size_t i, std::size_t left) -> bool {
    if (i == n) {
      return left == 0 && product(product, 0);
    }
    for (std::size_t l = 1; l <= image_budget && l <= left; ++l) {
      lens[i] = l;
      if (self(self, i + 1, left - l)) {
        return true;
      }
    }
    return false;
  };
  for (std::size_t total = n; total <= n * image_budget; ++total) {
    if (compositions(compositions, 0, total)) {
      return found;
    }
  }
  return std::nullopt;
}

}  // namespace raag
