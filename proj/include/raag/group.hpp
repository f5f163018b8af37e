#pragma once

// Groups seen only through word-problem queries, and homomorphisms out of
// them.
//
// A GroupHandle is a RAAG A(G) exposed through a list of named generator
// words. The default handle exposes the vertices themselves; an obfuscated
// handle exposes other words (a Tietze change) and answers every query by
// translating back to the vertex generators.

#include <concepts>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/presentation.hpp"
#include "raag/word.hpp"

namespace raag {

template <class G>
concept Group = requires(G const&                     g,
                         typename G::element const&   x,
                         typename G::element const&   y,
                         Exponent const&              k,
                         std::string_view             text) {
  { g.identity() } -> std::same_as<typename G::element>;
  { g.multiply(x, y) } -> std::same_as<typename G::element>;
  { g.invert(x) } -> std::same_as<typename G::element>;
  { g.power(x, k) } -> std::same_as<typename G::element>;
  { g.equals(x, y) } -> std::convertible_to<bool>;
  { g.commutes(x, y) } -> std::convertible_to<bool>;
  // Canonical representative: equal elements normalize to identical values,
  // and normalized values are totally ordered by operator<.
  { g.normalize(x) } -> std::same_as<typename G::element>;
  { g.format(x) } -> std::convertible_to<std::string>;
  { g.parse(text) } -> std::same_as<typename G::element>;
  { g.owns(x) } -> std::convertible_to<bool>;
  { g == g } -> std::convertible_to<bool>;
};

namespace detail {
  inline constexpr std::size_t default_spelling_length = 6;
  inline constexpr std::size_t max_ball_size           = 2'000'000;

  // Breadth-first walk over products of the given generator words and their
  // inverses, deduplicated by normal form. Letters are tried in the order
  // x0, x0^-1, x1, x1^-1, ... The visitor receives (element, spelling) where
  // the spelling is a freely reduced word over `letters_graph`; returning
  // false stops the walk.
  template <class Visitor>
  void walk_products(Graph const& g, Graph const& letters_graph,
                     std::vector<Word> const& gens, std::size_t max_length,
                     Visitor&& visit) {
    std::vector<std::pair<Word, Word>> letters;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      letters.emplace_back(canonical_form(gens[i]),
                           Word::generator(letters_graph, i, 1));
      letters.emplace_back(invert(gens[i]),
                           Word::generator(letters_graph, i, -1));
    }
    std::set<Word>                     seen;
    std::vector<std::pair<Word, Word>> level{{Word(g), Word(letters_graph)}};
    seen.insert(level.front().first);
    if (!visit(level.front().first, level.front().second)) {
      return;
    }
    for (std::size_t len = 1; len <= max_length && !level.empty(); ++len) {
      std::vector<std::pair<Word, Word>> next;
      for (auto const& [elt, spell] : level) {
        for (auto const& [x, xs] : letters) {
          auto prod = multiply(elt, x);
          if (!seen.insert(prod).second) {
            continue;
          }
          if (seen.size() > max_ball_size) {
            throw Error(ErrorKind::search_space_too_large,
                        "more than " + std::to_string(max_ball_size)
                            + " elements in the ball");
          }
          auto s = multiply(spell, xs);
          if (!visit(prod, s)) {
            return;
          }
          next.emplace_back(std::move(prod), std::move(s));
        }
      }
      level = std::move(next);
    }
  }
}  // namespace detail

class GroupHandle {
 public:
  using element = Word;

  GroupHandle() : GroupHandle(Graph()) {}

  /// The default handle on A(g): exposed generators are the vertices.
  explicit GroupHandle(Graph const& g) {
    auto d          = std::make_shared<Data>();
    d->graph        = g;
    d->letters      = graphs::discrete(g.vertices());
    d->is_default   = true;
    for (std::size_t v = 0; v < g.size(); ++v) {
      d->gens.push_back(Word::generator(g, v));
      d->vertex_spellings.push_back(Word::generator(d->letters, v));
    }
    data_ = std::move(d);
  }

  /// Handle exposing arbitrary named words. The words must generate A(g);
  /// this is checked by searching for a spelling of every vertex among
  /// products of length <= spelling_bound.
  GroupHandle(Graph const&                                    g,
              std::vector<std::pair<std::string, Word>> const& exposed,
              std::size_t spelling_bound = detail::default_spelling_length) {
    auto d   = std::make_shared<Data>();
    d->graph = g;
    std::vector<std::string> names;
    for (auto const& [name, w] : exposed) {
      names.push_back(name);
    }
    d->letters = graphs::discrete(names);
    d->gens.resize(exposed.size());
    for (auto const& [name, w] : exposed) {
      if (!(w.graph() == g)) {
        throw Error(ErrorKind::graph_mismatch,
                    "generator " + name + " is not a word over the graph");
      }
      auto cw = canonical_form(w);
      if (cw.is_identity()) {
        throw Error(ErrorKind::invalid_input,
                    "generator " + name + " is the identity");
      }
      d->gens[d->letters.index_of(name)] = std::move(cw);
    }
    d->is_default = d->letters.vertices() == g.vertices();
    for (std::size_t v = 0; v < g.size() && d->is_default; ++v) {
      d->is_default = d->gens[v] == Word::generator(g, v);
    }

    d->vertex_spellings.assign(g.size(), Word(d->letters));
    std::vector<bool> found(g.size(), false);
    std::size_t       missing = g.size();
    if (missing > 0) {
      detail::walk_products(
          g, d->letters, d->gens, spelling_bound,
          [&](Word const& elt, Word const& spelling) {
            auto const& syl = elt.syllables();
            if (syl.size() == 1 && syl[0].exponent == 1
                && !found[syl[0].generator]) {
              found[syl[0].generator]               = true;
              d->vertex_spellings[syl[0].generator] = spelling;
              --missing;
            }
            return missing > 0;
          });
    }
    if (missing > 0) {
      std::string lost;
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (!found[v]) {
          lost += (lost.empty() ? "" : ", ") + g.name(v);
        }
      }
      throw Error(ErrorKind::invalid_input,
                  "exposed generators do not reach vertices {" + lost
                      + "} within length " + std::to_string(spelling_bound));
    }
    data_ = std::move(d);
  }

  Graph const& graph() const noexcept { return data_->graph; }
  // Discrete graph on the exposed generator names; spellings live here.
  Graph const& generator_graph() const noexcept { return data_->letters; }
  bool         is_default() const noexcept { return data_->is_default; }

  std::size_t num_generators() const noexcept { return data_->gens.size(); }
  std::string const& generator_name(std::size_t i) const {
    return data_->letters.name(i);
  }
  Word const& generator(std::size_t i) const { return data_->gens.at(i); }
  std::vector<Word> const& generators() const noexcept { return data_->gens; }

  /// Rewrites an element as a word in the exposed generators.
  Word spell(Word const& w) const {
    require_owned(w);
    if (data_->is_default) {
      return Word(data_->letters, w.syllables());
    }
    std::vector<Syllable> syl;
    for (auto const& s : w.syllables()) {
      auto p = raag::power(data_->vertex_spellings[s.generator], s.exponent);
      syl.insert(syl.end(), p.syllables().begin(), p.syllables().end());
    }
    return canonical_form(Word(data_->letters, std::move(syl)));
  }

  /// Evaluates a word in the exposed generators.
  Word evaluate(Word const& spelling) const {
    if (!(spelling.graph() == data_->letters)) {
      throw Error(ErrorKind::graph_mismatch,
                  "spelling is not over this handle's generators");
    }
    std::vector<Syllable> syl;
    for (auto const& s : spelling.syllables()) {
      auto p = raag::power(data_->gens[s.generator], s.exponent);
      syl.insert(syl.end(), p.syllables().begin(), p.syllables().end());
    }
    return canonical_form(Word(data_->graph, std::move(syl)));
  }

  /// A presentation on the exposed generators: pulled-back edge
  /// commutators plus, for obfuscated handles, one Tietze relator
  /// x^-1 * spell(word(x)) per generator.
  FinitePresentation presentation() const {
    FinitePresentation p{data_->letters, {}, {}};
    auto const&        g = data_->graph;
    for (auto [u, v] : g.edges()) {
      p.relators.push_back(
          commutator(data_->vertex_spellings[u], data_->vertex_spellings[v]));
      p.labels.push_back("(" + g.name(u) + "," + g.name(v) + ")");
    }
    if (!data_->is_default) {
      for (std::size_t i = 0; i < num_generators(); ++i) {
        auto r = raag::multiply(Word::generator(data_->letters, i, -1),
                          spell(data_->gens[i]));
        if (!r.is_identity()) {
          p.relators.push_back(std::move(r));
          p.labels.push_back(generator_name(i) + " = "
                             + to_string(data_->gens[i]));
        }
      }
    }
    return p;
  }

  // Group interface.
  Word identity() const { return Word(data_->graph); }
  Word multiply(Word const& a, Word const& b) const {
    return raag::multiply(a, b);
  }
  Word invert(Word const& a) const { return raag::invert(a); }
  Word power(Word const& a, Exponent const& k) const { return raag::power(a, k); }
  bool equals(Word const& a, Word const& b) const { return raag::equals(a, b); }
  bool commutes(Word const& a, Word const& b) const {
    return raag::commutes(a, b);
  }
  Word normalize(Word const& a) const { return canonical_form(a); }
  std::string format(Word const& a) const { return to_string(a); }
  Word parse(std::string_view text) const {
    return canonical_form(parse_word(data_->graph, text));
  }
  bool owns(Word const& a) const { return a.graph() == data_->graph; }

  friend bool operator==(GroupHandle const& a, GroupHandle const& b) {
    return a.data_ == b.data_
           || (a.data_->graph == b.data_->graph
               && a.data_->letters == b.data_->letters
               && a.data_->gens == b.data_->gens);
  }

 private:
  void require_owned(Word const& w) const {
    if (!owns(w)) {
      throw Error(ErrorKind::graph_mismatch,
                  "word is not over this group's graph");
    }
  }

  struct Data {
    Graph             graph;
    Graph             letters;
    std::vector<Word> gens;
    std::vector<Word> vertex_spellings;  // over `letters`
    bool              is_default = false;
  };
  std::shared_ptr<Data const> data_;
};

static_assert(Group<GroupHandle>);

inline GroupHandle raag_of_graph(Graph const& g) { return GroupHandle(g); }

////////////////////////////////////////////////////////////////////////////////
// Homomorphisms out of a GroupHandle
////////////////////////////////////////////////////////////////////////////////

/// A homomorphism from a GroupHandle into any Group, given by the images of
/// the exposed generators.
template <Group Target>
class Hom {
 public:
  using target_element = typename Target::element;

  Hom(GroupHandle source, Target target, std::vector<target_element> images)
      : source_(std::move(source)),
        target_(std::move(target)),
        images_(std::move(images)) {
    if (images_.size() != source_.num_generators()) {
      throw Error(ErrorKind::invalid_input,
                  "need one image per generator of the source");
    }
  }

  GroupHandle const&                 source() const noexcept { return source_; }
  Target const&                      target() const noexcept { return target_; }
  std::vector<target_element> const& images() const noexcept { return images_; }
  target_element const& image(std::size_t i) const { return images_.at(i); }

  /// Image of a word in the exposed generators.
  target_element apply_spelling(Word const& spelling) const {
    auto out = target_.identity();
    for (auto const& s : spelling.syllables()) {
      out = target_.multiply(out, target_.power(images_[s.generator], s.exponent));
    }
    return out;
  }

  /// Image of an element of the source group.
  target_element operator()(Word const& g) const {
    return apply_spelling(source_.spell(g));
  }

 private:
  GroupHandle                 source_;
  Target                      target_;
  std::vector<target_element> images_;
};

using GroupHom = Hom<GroupHandle>;

namespace detail {
  // Label of the first relator not sent to the identity.
  template <Group Target>
  std::optional<std::string> first_broken_relator(Hom<Target> const& f) {
    auto p = f.source().presentation();
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      auto img = f.apply_spelling(p.relators[i]);
      if (!f.target().equals(img, f.target().identity())) {
        return p.labels[i];
      }
    }
    return std::nullopt;
  }

  template <Group Target>
  std::vector<typename Target::element> images_by_name(
      GroupHandle const& src,
      std::map<std::string, typename Target::element> const& images) {
    std::vector<typename Target::element> out(src.num_generators());
    std::vector<bool>                     seen(src.num_generators(), false);
    for (auto const& [name, w] : images) {
      auto i = src.generator_graph().find(name);
      if (!i) {
        throw Error(ErrorKind::unknown_generator, name);
      }
      out[*i]  = w;
      seen[*i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) {
        throw Error(ErrorKind::invalid_input,
                    "no image for generator " + src.generator_name(i));
      }
    }
    return out;
  }
}  // namespace detail

/// Validated homomorphism: every relator of the source must map to 1.
inline GroupHom group_hom(GroupHandle const& src, GroupHandle const& dst,
                          std::map<std::string, Word> const& images) {
  auto imgs = detail::images_by_name<GroupHandle>(src, images);
  for (auto& w : imgs) {
    if (!dst.owns(w)) {
      throw Error(ErrorKind::graph_mismatch,
                  "image is not a word over the target graph");
    }
    w = canonical_form(w);
  }
  GroupHom f(src, dst, std::move(imgs));
  if (auto bad = detail::first_broken_relator(f)) {
    throw Error(ErrorKind::not_a_homomorphism, "relator " + *bad);
  }
  return f;
}

/// A(phi): each vertex v goes to the one-letter word phi(v).
inline GroupHom a_on_hom(GraphHom const& phi) {
  GroupHandle       src(phi.source());
  GroupHandle       dst(phi.target());
  std::vector<Word> imgs;
  for (std::size_t v = 0; v < phi.source().size(); ++v) {
    imgs.push_back(Word::generator(phi.target(), phi(v)));
  }
  return GroupHom(src, dst, std::move(imgs));
}

inline GroupHom identity_hom(GroupHandle const& g) {
  return GroupHom(g, g, g.generators());
}

/// The composite "first f, then g".
inline GroupHom compose(GroupHom const& f, GroupHom const& g) {
  if (!(f.target() == g.source())) {
    throw Error(ErrorKind::mismatched_ends,
                "target of the first map is not the source of the second");
  }
  std::vector<Word> imgs;
  for (auto const& w : f.images()) {
    imgs.push_back(g(w));
  }
  return GroupHom(f.source(), g.target(), std::move(imgs));
}

}  // namespace raag
