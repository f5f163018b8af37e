#pragma once

// Slow, obviously-correct reference answers for the test suite.
//
// Nothing here shares code with the normal form: words are plain strings of
// letter codes and equality is decided by exploring rewrites directly.

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/group.hpp"
#include "raag/word.hpp"

namespace raag::testkit {

/// A letter is a vertex index with sign +1 or -1.
struct Letter {
  std::size_t vertex;
  int         sign;

  friend bool operator==(Letter const&, Letter const&) = default;
};
using LetterWord = std::vector<Letter>;

inline constexpr std::size_t bf_max_total_length = 14;

namespace detail {
  inline std::string encode(LetterWord const& w) {
    std::string s;
    for (auto const& l : w) {
      s.push_back(static_cast<char>(2 * l.vertex + (l.sign < 0 ? 1 : 0)));
    }
    return s;
  }

  inline std::size_t vertex_of(char c) {
    return static_cast<unsigned char>(c) / 2;
  }

  // Every word reachable by swapping adjacent commuting letters or deleting
  // an adjacent x x^-1 pair.
  inline std::unordered_set<std::string> closure(Graph const&       g,
                                                 std::string const& start) {
    std::unordered_set<std::string> seen{start};
    std::deque<std::string>         todo{start};
    while (!todo.empty()) {
      auto w = std::move(todo.front());
      todo.pop_front();
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        auto a = w[i];
        auto b = w[i + 1];
        if ((a ^ b) == 1) {
          auto r = w.substr(0, i) + w.substr(i + 2);
          if (seen.insert(r).second) {
            todo.push_back(std::move(r));
          }
        } else if (a != b && g.adjacent(vertex_of(a), vertex_of(b))) {
          auto r = w;
          std::swap(r[i], r[i + 1]);
          if (seen.insert(r).second) {
            todo.push_back(std::move(r));
          }
        }
      }
    }
    return seen;
  }
}  // namespace detail

/// Decides w1 = w2 in A(g) by rewriting both sides; two words are equal
/// exactly when their rewrite closures meet.
inline bool bf_equals(Graph const& g, LetterWord const& w1, LetterWord const& w2) {
  if (w1.size() + w2.size() > bf_max_total_length) {
    throw Error(ErrorKind::search_space_too_large,
                "brute-force equality is limited to total length "
                    + std::to_string(bf_max_total_length));
  }
  for (auto const* w : {&w1, &w2}) {
    for (auto const& l : *w) {
      if (l.vertex >= g.size() || (l.sign != 1 && l.sign != -1)) {
        throw Error(ErrorKind::invalid_input, "bad letter");
      }
    }
  }
  auto left  = detail::closure(g, detail::encode(w1));
  auto right = detail::closure(g, detail::encode(w2));
  auto const& small = left.size() <= right.size() ? left : right;
  auto const& large = left.size() <= right.size() ? right : left;
  for (auto const& w : small) {
    if (large.count(w) != 0) {
      return true;
    }
  }
  return false;
}

/// Expands syllables into single letters.
inline LetterWord letters_of(Word const& w) {
  LetterWord out;
  for (auto const& s : w.syllables()) {
    int  sign  = s.exponent < 0 ? -1 : 1;
    auto count = static_cast<long>(s.exponent < 0 ? Exponent(-s.exponent) : s.exponent);
    for (long k = 0; k < count; ++k) {
      out.push_back({s.generator, sign});
    }
  }
  return out;
}

inline Word word_of(Graph const& g, LetterWord const& w) {
  std::vector<Syllable> syl;
  for (auto const& l : w) {
    syl.push_back({l.vertex, Exponent(l.sign)});
  }
  return Word(g, std::move(syl));
}

/// A graph map phi with A(phi) = f, found by scanning every graph map.
inline std::optional<GraphHom> bf_is_a_phi(GroupHom const& f, Graph const& source,
                                           Graph const& target) {
  for (auto const& phi : enumerate_homs(source, target)) {
    bool same = true;
    for (std::size_t v = 0; v < source.size() && same; ++v) {
      same = equals(f.image(v), Word::generator(target, phi(v)));
    }
    if (same) {
      return phi;
    }
  }
  return std::nullopt;
}

/// All letter words of exactly the given length over g.
inline std::vector<LetterWord> all_letter_words(Graph const& g, std::size_t length) {
  std::vector<LetterWord> out{LetterWord{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<LetterWord> next;
    for (auto const& w : out) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        for (int sign : {1, -1}) {
          auto x = w;
          x.push_back({v, sign});
          next.push_back(std::move(x));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace raag::testkit
