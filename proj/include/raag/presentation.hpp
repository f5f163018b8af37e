#pragma once

// Finite presentations over a free group and their abelianization rank.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"
#include "raag/smith.hpp"
#include "raag/word.hpp"

namespace raag {

struct FinitePresentation {
  Graph                    free_graph;  // discrete graph on the generator names
  std::vector<Word>        relators;    // words over free_graph
  std::vector<std::string> labels;      // one per relator, for witnesses

  std::vector<std::string> const& generators() const {
    return free_graph.vertices();
  }
};

/// Relators are freely reduced; a relator that reduces to the empty word is
/// kept (it is harmless).
inline FinitePresentation make_presentation(
    std::vector<std::string> const& generators,
    std::vector<std::string> const& relators) {
  FinitePresentation p{graphs::discrete(generators), {}, {}};
  for (auto const& r : relators) {
    p.relators.push_back(canonical_form(parse_word(p.free_graph, r)));
    p.labels.push_back(r);
  }
  return p;
}

inline Word commutator(Word const& x, Word const& y) {
  return multiply(multiply(x, y), multiply(invert(x), invert(y)));
}

/// The standard presentation of A(G): one commutator per edge.
inline FinitePresentation commutator_presentation(Graph const& g) {
  FinitePresentation p{graphs::discrete(g.vertices()), {}, {}};
  for (auto [u, v] : g.edges()) {
    p.relators.push_back(commutator(Word::generator(p.free_graph, u),
                                    Word::generator(p.free_graph, v)));
    p.labels.push_back("(" + g.name(u) + "," + g.name(v) + ")");
  }
  return p;
}

/// Rows are relators, columns generators, entries exponent sums.
inline IntegerMatrix exponent_sum_matrix(FinitePresentation const& p) {
  IntegerMatrix m(p.relators.size(), p.free_graph.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (auto const& s : p.relators[i].syllables()) {
      m(i, s.generator) += s.exponent;
    }
  }
  return m;
}

inline std::size_t abelianization_rank(FinitePresentation const& p) {
  return p.free_graph.size() - smith_normal_form(exponent_sum_matrix(p)).rank;
}

}  // namespace raag
