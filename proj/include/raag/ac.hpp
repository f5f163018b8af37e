#pragma once

// The commutation graph C and the comonad AC on groups.
//
// AC(G) is generated by one symbol [g] per element g of G, with [g][h] =
// [h][g] exactly when gh = hg. It is never built: every question about a
// finite set of AC words is answered inside the RAAG of the finite
// commutation graph on the symbols that occur.
//
// AcGroup<G> is itself a Group, so AcGroup<AcGroup<G>> models AC(ACG).

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/group.hpp"
#include "raag/word.hpp"

namespace raag {

template <Group G>
struct AcLetter {
  typename G::element symbol;  // normalized element of G
  Exponent            exponent;

  friend bool operator==(AcLetter const& a, AcLetter const& b) {
    return a.exponent == b.exponent && a.symbol == b.symbol;
  }
  friend bool operator<(AcLetter const& a, AcLetter const& b) {
    if (a.symbol < b.symbol) {
      return true;
    }
    if (b.symbol < a.symbol) {
      return false;
    }
    return a.exponent < b.exponent;
  }
};

template <Group G>
class AcWord {
 public:
  AcWord() = default;
  explicit AcWord(G base, std::vector<AcLetter<G>> letters = {})
      : base_(std::move(base)), letters_(std::move(letters)) {}

  G const&                        base() const noexcept { return base_; }
  std::vector<AcLetter<G>> const& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }

  // Syntactic; use ac_equals for equality in AC(G).
  friend bool operator==(AcWord const& a, AcWord const& b) {
    return a.letters_ == b.letters_ && a.base_ == b.base_;
  }
  friend bool operator<(AcWord const& a, AcWord const& b) {
    return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(),
                                        b.letters_.begin(), b.letters_.end());
  }

 private:
  G                        base_;
  std::vector<AcLetter<G>> letters_;
};

/// Finite piece of the commutation graph. Vertex i is labelled by
/// labels[i]; labels are normalized, distinct and sorted, and vertex names
/// are zero-padded indices so byte order agrees with label order.
template <Group G>
struct CommutationGraph {
  Graph                            graph;
  std::vector<typename G::element> labels;

  std::size_t index_of(typename G::element const& normalized) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), normalized);
    return static_cast<std::size_t>(it - labels.begin());
  }
};

template <Group G>
CommutationGraph<G> commutation_graph(G const&                                group,
                                      std::vector<typename G::element> const& elements) {
  std::vector<typename G::element> labels;
  labels.reserve(elements.size());
  for (auto const& x : elements) {
    labels.push_back(group.normalize(x));
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto const  n     = labels.size();
  std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    auto digits = std::to_string(i);
    names.push_back("s" + std::string(width - digits.size(), '0') + digits);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (group.commutes(labels[i], labels[j])) {
        edges.emplace_back(i, j);
      }
    }
  }
  return {Graph::from_indices(std::move(names), std::move(edges)),
          std::move(labels)};
}

namespace detail {
  template <Group G>
  void require_same_base(AcWord<G> const& x, AcWord<G> const& y) {
    if (!(x.base() == y.base())) {
      throw Error(ErrorKind::base_mismatch, "AC words over different groups");
    }
  }

  template <Group G>
  std::vector<typename G::element> symbols_of(
      std::initializer_list<AcWord<G> const*> words) {
    std::vector<typename G::element> out;
    for (auto const* w : words) {
      for (auto const& l : w->letters()) {
        out.push_back(l.symbol);
      }
    }
    return out;
  }

  template <Group G>
  Word localize(CommutationGraph<G> const& cg, AcWord<G> const& x) {
    std::vector<Syllable> syl;
    for (auto const& l : x.letters()) {
      syl.push_back(Syllable{cg.index_of(x.base().normalize(l.symbol)),
                             l.exponent});
    }
    return Word(cg.graph, std::move(syl));
  }
}  // namespace detail

/// Builds an AC word, normalizing every symbol. Identity symbols are legal
/// (the identity is a vertex of CG) but reported through warn().
template <Group G>
AcWord<G> ac_word(G const& base, std::vector<AcLetter<G>> letters) {
  for (auto& l : letters) {
    if (l.exponent == 0) {
      throw Error(ErrorKind::zero_exponent,
                  "[" + base.format(l.symbol) + "]^0");
    }
    if (!base.owns(l.symbol)) {
      throw Error(ErrorKind::base_mismatch, "symbol is not in the base group");
    }
    l.symbol = base.normalize(l.symbol);
    if (base.equals(l.symbol, base.identity())) {
      warn("identity symbol [] in an AC word");
    }
  }
  return AcWord<G>(base, std::move(letters));
}

/// The one-letter word [g].
template <Group G>
AcWord<G> ac_symbol(G const& base, typename G::element const& g,
                    Exponent k = 1) {
  return ac_word(base, std::vector<AcLetter<G>>{{g, std::move(k)}});
}

template <Group G>
bool ac_equals(AcWord<G> const& x, AcWord<G> const& y) {
  detail::require_same_base(x, y);
  auto cg = commutation_graph(x.base(), detail::symbols_of<G>({&x, &y}));
  return equals(detail::localize(cg, x), detail::localize(cg, y));
}

/// Canonical representative: the normal form of the word inside the RAAG of
/// its own symbols, with symbols ordered by operator<.
template <Group G>
AcWord<G> ac_normal_form(AcWord<G> const& x) {
  auto cg = commutation_graph(x.base(), detail::symbols_of<G>({&x}));
  auto nf = canonical_form(detail::localize(cg, x));
  std::vector<AcLetter<G>> letters;
  for (auto const& s : nf.syllables()) {
    letters.push_back({cg.labels[s.generator], s.exponent});
  }
  return AcWord<G>(x.base(), std::move(letters));
}

template <Group G>
std::string to_string(AcWord<G> const& x) {
  std::string out;
  for (auto const& l : x.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += '[';
    out += x.base().format(l.symbol);
    out += ']';
    if (l.exponent != 1) {
      out += '^';
      out += l.exponent.str();
    }
  }
  return out;
}

/// Letters "[...]" or "[...]^k" separated by whitespace; the bracket
/// contents are parsed by the base group, so nesting works.
template <Group G>
AcWord<G> parse_ac_word(G const& base, std::string_view text) {
  std::vector<AcLetter<G>> letters;
  std::size_t              i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) {
      ++i;
    }
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '[') {
      throw Error(ErrorKind::syntax_error,
                  "expected '[' at offset " + std::to_string(i) + " in '"
                      + std::string(text) + "'");
    }
    std::size_t depth = 0;
    std::size_t close = i;
    for (; close < text.size(); ++close) {
      if (text[close] == '[') {
        ++depth;
      } else if (text[close] == ']' && --depth == 0) {
        break;
      }
    }
    if (close == text.size()) {
      throw Error(ErrorKind::syntax_error,
                  "unbalanced '[' in '" + std::string(text) + "'");
    }
    auto     symbol = base.parse(text.substr(i + 1, close - i - 1));
    Exponent k      = 1;
    i               = close + 1;
    if (i < text.size() && text[i] == '^') {
      auto end = text.find_first_of(" \t\n", i);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      k = parse_exponent(text.substr(i + 1, end - i - 1),
                         text.substr(0, end));
      i = end;
    } else if (i < text.size() && text[i] != ' ' && text[i] != '\t'
               && text[i] != '\n') {
      throw Error(ErrorKind::syntax_error,
                  "unexpected '" + std::string(1, text[i]) + "' after ']'");
    }
    letters.push_back({std::move(symbol), std::move(k)});
    skip_space();
  }
  return ac_word(base, std::move(letters));
}

////////////////////////////////////////////////////////////////////////////////
// AC(G) as a group
////////////////////////////////////////////////////////////////////////////////

template <Group G>
class AcGroup {
 public:
  using element = AcWord<G>;

  AcGroup() = default;
  explicit AcGroup(G base) : base_(std::move(base)) {}

  G const& base() const noexcept { return base_; }

  element identity() const { return element(base_); }

  element multiply(element const& x, element const& y) const {
    auto letters = x.letters();
    for (auto const& l : y.letters()) {
      if (!letters.empty() && letters.back().symbol == l.symbol) {
        letters.back().exponent += l.exponent;
        if (letters.back().exponent == 0) {
          letters.pop_back();
        }
      } else {
        letters.push_back(l);
      }
    }
    return element(base_, std::move(letters));
  }

  element invert(element const& x) const {
    std::vector<AcLetter<G>> letters(x.letters().rbegin(), x.letters().rend());
    for (auto& l : letters) {
      l.exponent = -l.exponent;
    }
    return element(base_, std::move(letters));
  }

  element power(element const& x, Exponent k) const {
    if (x.letters().size() == 1) {
      auto l = x.letters().front();
      l.exponent *= k;
      return l.exponent == 0 ? identity() : element(base_, {std::move(l)});
    }
    if (k < 0) {
      return power(invert(x), -k);
    }
    auto out = identity();
    for (Exponent i = 0; i < k; ++i) {
      out = multiply(out, x);
    }
    return out;
  }

  bool equals(element const& x, element const& y) const { return ac_equals(x, y); }

  bool commutes(element const& x, element const& y) const {
    return ac_equals(multiply(x, y), multiply(y, x));
  }

  element normalize(element const& x) const { return ac_normal_form(x); }

  std::string format(element const& x) const { return to_string(x); }

  element parse(std::string_view text) const { return parse_ac_word(base_, text); }

  bool owns(element const& x) const { return x.base() == base_; }

  friend bool operator==(AcGroup const& a, AcGroup const& b) {
    return a.base_ == b.base_;
  }

 private:
  G base_;
};

static_assert(Group<AcGroup<GroupHandle>>);

template <Group G>
AcGroup<G> ac(G const& base) {
  return AcGroup<G>(base);
}

////////////////////////////////////////////////////////////////////////////////
// Comonad structure
////////////////////////////////////////////////////////////////////////////////

/// Counit: [g] -> g.
template <Group G>
typename G::element epsilon(AcWord<G> const& x) {
  auto const& base = x.base();
  auto        out  = base.identity();
  for (auto const& l : x.letters()) {
    out = base.multiply(out, base.power(l.symbol, l.exponent));
  }
  return base.normalize(out);
}

/// Comultiplication: [g] -> [[g]].
template <Group G>
AcWord<AcGroup<G>> delta(AcWord<G> const& x) {
  AcGroup<G>                        outer(x.base());
  std::vector<AcLetter<AcGroup<G>>> letters;
  for (auto const& l : x.letters()) {
    letters.push_back(
        {AcWord<G>(x.base(), {AcLetter<G>{l.symbol, 1}}), l.exponent});
  }
  return AcWord<AcGroup<G>>(outer, std::move(letters));
}

/// AC applied to an arbitrary map of symbols: [g] -> [fn(g)], with fn
/// landing in `target`.
template <Group G, Group H, class Fn>
AcWord<H> ac_map(AcWord<G> const& x, H const& target, Fn&& fn) {
  std::vector<AcLetter<H>> letters;
  for (auto const& l : x.letters()) {
    letters.push_back({target.normalize(fn(l.symbol)), l.exponent});
  }
  return AcWord<H>(target, std::move(letters));
}

/// AC(f) for a homomorphism out of a GroupHandle.
template <Group H>
AcWord<H> ac_on_hom(Hom<H> const& f, AcWord<GroupHandle> const& x) {
  if (!(x.base() == f.source())) {
    throw Error(ErrorKind::base_mismatch,
                "AC word is not over the source of the homomorphism");
  }
  return ac_map(x, f.target(), [&](Word const& g) { return f(g); });
}

/// Unit on graphs: v -> the one-letter word v, as a map into the finite
/// piece of C(A(g)) spanned by the vertex generators.
inline GraphHom eta(Graph const& g) {
  GroupHandle       ag(g);
  std::vector<Word> gens;
  for (std::size_t v = 0; v < g.size(); ++v) {
    gens.push_back(Word::generator(g, v));
  }
  auto                     cg = commutation_graph(ag, gens);
  std::map<std::string, std::string> map;
  for (std::size_t v = 0; v < g.size(); ++v) {
    map.emplace(g.name(v), cg.graph.name(cg.index_of(gens[v])));
  }
  return validate_hom(g, cg.graph, map);
}

}  // namespace raag
