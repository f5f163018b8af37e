#pragma once

// Shared fixtures for the test programs: the graph corpus and random words.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "raag/raag.hpp"
#include "raag/testkit/oracle.hpp"

namespace raag::test {

struct NamedGraph {
  std::string name;
  Graph       graph;
};

/// Every graph here has at most five vertices.
inline std::vector<NamedGraph> corpus() {
  return {
      {"one", graphs::discrete({"v"})},
      {"discrete2", graphs::discrete({"a", "b"})},
      {"complete2", graphs::complete({"a", "b"})},
      {"discrete3", graphs::discrete({"a", "b", "c"})},
      {"complete3", graphs::complete({"a", "b", "c"})},
      {"path3", graphs::path({"a", "b", "c"})},
      {"square", graphs::square()},
      {"star3", graphs::star({"o", "p", "q", "r"})},
      {"path4", graphs::path({"a", "b", "c", "d"})},
      {"complete4", graphs::complete({"a", "b", "c", "d"})},
      {"paw", validate_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}})},
      {"edge_plus_point", validate_graph({"a", "b", "c"}, {{"a", "b"}})},
      {"cycle5", graphs::cycle({"a", "b", "c", "d", "e"})},
      {"discrete4", graphs::discrete({"a", "b", "c", "d"})},
      {"bull", validate_graph({"a", "b", "c", "d", "e"},
                              {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"b", "d"}, {"c", "e"}})},
  };
}

inline std::vector<NamedGraph> small_corpus(std::size_t max_vertices) {
  std::vector<NamedGraph> out;
  for (auto& g : corpus()) {
    if (g.graph.size() <= max_vertices) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// A word of uniformly chosen length <= max_len with uniform +-1 letters.
inline Word random_word(Rng& rng, Graph const& g, std::size_t max_len) {
  std::vector<Syllable> syl;
  if (g.size() == 0) {
    return Word(g);
  }
  for (auto n = uniform(rng, 0, max_len); n > 0; --n) {
    syl.push_back({uniform(rng, 0, g.size() - 1), Exponent(uniform(rng, 0, 1) ? 1 : -1)});
  }
  return Word(g, std::move(syl));
}

inline testkit::LetterWord random_letters(Rng& rng, Graph const& g, std::size_t len) {
  testkit::LetterWord w;
  for (std::size_t k = 0; k < len; ++k) {
    w.push_back({uniform(rng, 0, g.size() - 1), uniform(rng, 0, 1) ? 1 : -1});
  }
  return w;
}

inline Word w(Graph const& g, std::string_view text) { return parse_word(g, text); }

}  // namespace raag::test
