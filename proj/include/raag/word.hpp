#pragma once

// Elements of the right-angled Artin group A(G) as syllable words, and the
// word problem via a canonical normal form.
//
// A word is reduced when no two syllables on the same generator are
// separated only by syllables that commute with it. Reduced words for the
// same element differ only by swapping adjacent commuting syllables, so
// their left-greedy block decomposition, with each block sorted, is a
// canonical representative.

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raag/error.hpp"
#include "raag/graph.hpp"

namespace raag {

using Exponent = boost::multiprecision::cpp_int;

struct Syllable {
  std::size_t generator;
  Exponent    exponent;

  friend bool operator==(Syllable const& a, Syllable const& b) {
    return a.generator == b.generator && a.exponent == b.exponent;
  }
  friend bool operator<(Syllable const& a, Syllable const& b) {
    if (a.generator != b.generator) {
      return a.generator < b.generator;
    }
    return a.exponent < b.exponent;
  }
};

class Word {
 public:
  Word() = default;
  explicit Word(Graph graph, std::vector<Syllable> syllables = {})
      : graph_(std::move(graph)), syllables_(std::move(syllables)) {}

  static Word generator(Graph const& g, std::size_t v, Exponent k = 1) {
    return Word(g, {Syllable{v, std::move(k)}});
  }
  static Word generator(Graph const& g, std::string_view v, Exponent k = 1) {
    return generator(g, g.index_of(v), std::move(k));
  }

  Graph const&                 graph() const noexcept { return graph_; }
  std::vector<Syllable> const& syllables() const noexcept { return syllables_; }
  std::size_t                  size() const noexcept { return syllables_.size(); }
  bool is_identity() const noexcept { return syllables_.empty(); }

  // Syntactic comparison. Use equals() for equality in the group.
  friend bool operator==(Word const& a, Word const& b) {
    return a.syllables_ == b.syllables_ && a.graph_ == b.graph_;
  }
  friend bool operator<(Word const& a, Word const& b) {
    return std::lexicographical_compare(a.syllables_.begin(),
                                        a.syllables_.end(),
                                        b.syllables_.begin(),
                                        b.syllables_.end());
  }

 private:
  Graph                 graph_;
  std::vector<Syllable> syllables_;
};

namespace detail {
  inline void require_same_graph(Word const& a, Word const& b) {
    if (!(a.graph() == b.graph())) {
      throw Error(ErrorKind::graph_mismatch,
                  "words live over different graphs");
    }
  }

  inline bool commute_gen(Graph const& g, std::size_t x, std::size_t y) {
    return g.adjacent(x, y);
  }

  // Steps (1) and (2): left-to-right insertion. A new syllable slides left
  // over commuting syllables and merges with the first syllable on the same
  // generator it meets. Removing a syllable that cancels never unblocks an
  // earlier pair, so the result stays reduced.
  inline std::vector<Syllable> reduce(Graph const&                 g,
                                      std::vector<Syllable> const& in) {
    std::vector<Syllable> out;
    out.reserve(in.size());
    for (auto const& s : in) {
      if (s.exponent == 0) {
        continue;
      }
      bool merged = false;
      for (std::size_t k = out.size(); k-- > 0;) {
        if (out[k].generator == s.generator) {
          out[k].exponent += s.exponent;
          if (out[k].exponent == 0) {
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
          }
          merged = true;
          break;
        }
        if (!g.adjacent(out[k].generator, s.generator)) {
          break;
        }
      }
      if (!merged) {
        out.push_back(s);
      }
    }
    return out;
  }

  // Positions of syllables that commute with every syllable to their left.
  inline std::vector<std::size_t>
  available(Graph const& g, std::vector<Syllable> const& w,
            std::vector<char> const& taken) {
    std::vector<std::size_t> out;
    std::vector<char>        blocked(g.size(), 0);
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (taken[p]) {
        continue;
      }
      auto x = w[p].generator;
      if (!blocked[x]) {
        out.push_back(p);
      }
      for (std::size_t y = 0; y < g.size(); ++y) {
        if (y == x || !g.adjacent(x, y)) {
          blocked[y] = 1;
        }
      }
    }
    return out;
  }

  // Left-greedy blocks of a reduced word: each block takes every syllable
  // that can be moved to the front, sorted by vertex order.
  inline std::vector<std::vector<Syllable>>
  blocks_of(Graph const& g, std::vector<Syllable> const& w) {
    std::vector<std::vector<Syllable>> out;
    std::vector<char>                  taken(w.size(), 0);
    std::size_t                        left = w.size();
    while (left > 0) {
      std::vector<Syllable> block;
      for (auto p : available(g, w, taken)) {
        block.push_back(w[p]);
        taken[p] = 1;
      }
      std::sort(block.begin(), block.end());
      left -= block.size();
      out.push_back(std::move(block));
    }
    return out;
  }
}  // namespace detail

////////////////////////////////////////////////////////////////////////////////
// Text syntax
////////////////////////////////////////////////////////////////////////////////

inline Exponent parse_exponent(std::string_view text, std::string_view token) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    ++i;
  }
  if (i == text.size()
      || !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                      [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::syntax_error,
                "bad exponent in '" + std::string(token) + "'");
  }
  auto digits = std::string(text.substr(i));
  // cpp_int's string constructor does not accept a leading '+'.
  Exponent k(digits);
  if (text[0] == '-') {
    k = -k;
  }
  if (k == 0) {
    throw Error(ErrorKind::zero_exponent, std::string(token));
  }
  return k;
}

/// Parses "gen", "gen^k" tokens separated by whitespace. The result is not
/// canonicalized.
inline Word parse_word(Graph const& g, std::string_view text) {
  std::vector<Syllable> syl;
  std::istringstream    in{std::string(text)};
  std::string           token;
  while (in >> token) {
    auto        caret = token.find('^');
    std::string name  = token.substr(0, caret);
    if (!is_valid_name(name)) {
      throw Error(ErrorKind::syntax_error, "bad token '" + token + "'");
    }
    auto v = g.find(name);
    if (!v) {
      throw Error(ErrorKind::unknown_generator, name);
    }
    Exponent k = 1;
    if (caret != std::string::npos) {
      k = parse_exponent(std::string_view(token).substr(caret + 1), token);
    }
    syl.push_back(Syllable{*v, std::move(k)});
  }
  return Word(g, std::move(syl));
}

inline std::string to_string(Syllable const& s, Graph const& g) {
  std::string out = g.name(s.generator);
  if (s.exponent != 1) {
    out += '^';
    out += s.exponent.str();
  }
  return out;
}

/// Identity prints as the empty string.
inline std::string to_string(Word const& w) {
  std::string out;
  for (auto const& s : w.syllables()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += to_string(s, w.graph());
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////////
// Word problem
////////////////////////////////////////////////////////////////////////////////

/// Fully reduced, then written block by block in the left-greedy central
/// form with each block in vertex order.
inline Word canonical_form(Word const& w) {
  auto const&           g = w.graph();
  std::vector<Syllable> out;
  for (auto& b : detail::blocks_of(g, detail::reduce(g, w.syllables()))) {
    out.insert(out.end(), b.begin(), b.end());
  }
  return Word(g, std::move(out));
}

inline bool is_canonical(Word const& w) { return canonical_form(w) == w; }

inline bool equals(Word const& a, Word const& b) {
  detail::require_same_graph(a, b);
  return canonical_form(a).syllables() == canonical_form(b).syllables();
}

inline Word multiply(Word const& a, Word const& b) {
  detail::require_same_graph(a, b);
  auto syl = a.syllables();
  syl.insert(syl.end(), b.syllables().begin(), b.syllables().end());
  return canonical_form(Word(a.graph(), std::move(syl)));
}

inline Word invert(Word const& w) {
  std::vector<Syllable> syl(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : syl) {
    s.exponent = -s.exponent;
  }
  return canonical_form(Word(w.graph(), std::move(syl)));
}

inline Word identity_word(Graph const& g) { return Word(g); }

inline Word power(Word const& w, Exponent k) {
  if (k < 0) {
    return power(invert(w), -k);
  }
  Word result(w.graph());
  Word base = canonical_form(w);
  while (k > 0) {
    if ((k & 1) != 0) {
      result = multiply(result, base);
    }
    k >>= 1;
    if (k > 0) {
      base = multiply(base, base);
    }
  }
  return result;
}

inline bool commutes(Word const& g, Word const& h) {
  return multiply(multiply(g, h), invert(multiply(h, g))).is_identity();
}

/// Generators occurring in the normal form.
inline std::set<std::string> support(Word const& w) {
  std::set<std::string> out;
  auto                  cf = canonical_form(w);
  for (auto const& s : cf.syllables()) {
    out.insert(w.graph().name(s.generator));
  }
  return out;
}

inline bool in_special_subgroup(Word const& w, std::set<std::string> const& s) {
  for (auto const& v : s) {
    w.graph().index_of(v);
  }
  auto supp = support(w);
  return std::includes(s.begin(), s.end(), supp.begin(), supp.end());
}

////////////////////////////////////////////////////////////////////////////////
// Central form
////////////////////////////////////////////////////////////////////////////////

/// Left-greedy decomposition into blocks of pairwise commuting syllables.
/// Each block is sorted by vertex order.
struct CentralForm {
  Graph                              graph;
  std::vector<std::vector<Syllable>> blocks;

  Word flatten() const {
    std::vector<Syllable> syl;
    for (auto const& b : blocks) {
      syl.insert(syl.end(), b.begin(), b.end());
    }
    return Word(graph, std::move(syl));
  }
};

inline CentralForm central_form(Word const& w) {
  auto const& g = w.graph();
  return CentralForm{g, detail::blocks_of(g, detail::reduce(g, w.syllables()))};
}

/// Blocks separated by " | ".
inline std::string to_string(CentralForm const& cf) {
  std::string out;
  for (auto const& b : cf.blocks) {
    if (!out.empty()) {
      out += " | ";
    }
    out += to_string(Word(cf.graph, b));
  }
  return out;
}

}  // namespace raag
