#pragma once

// AC-coalgebras: structure maps G -> AC(G), the counit and coassociativity
// axioms, and the cohomomorphism test that recognizes the maps A(phi).
//
// All diagram checks run on generators only. Both composites in each
// diagram are homomorphisms, so agreement on generators is agreement
// everywhere.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/ac.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/group.hpp"
#include "raag/word.hpp"

namespace raag {

using AcG      = AcGroup<GroupHandle>;
using AcGWord  = AcWord<GroupHandle>;
using AcAcG    = AcGroup<AcG>;
using AcAcWord = AcWord<AcG>;

/// Structure map given by the images of the exposed generators.
struct CoalgebraMap {
  GroupHandle          group;
  std::vector<AcGWord> images;  // indexed like group's exposed generators

  Hom<AcG> as_hom() const { return Hom<AcG>(group, AcG(group), images); }
};

inline CoalgebraMap make_coalgebra_map(
    GroupHandle const& group, std::map<std::string, AcGWord> const& images) {
  auto imgs = detail::images_by_name<AcG>(group, images);
  for (auto const& x : imgs) {
    if (!(x.base() == group)) {
      throw Error(ErrorKind::base_mismatch,
                  "coalgebra image is not over the group's AC");
    }
  }
  return CoalgebraMap{group, std::move(imgs)};
}

/// v -> [v] on A(g).
inline CoalgebraMap canonical_coalgebra(Graph const& g) {
  GroupHandle          h(g);
  std::vector<AcGWord> imgs;
  for (std::size_t v = 0; v < g.size(); ++v) {
    imgs.push_back(ac_symbol(h, Word::generator(g, v)));
  }
  return CoalgebraMap{h, std::move(imgs)};
}

/// Image of a word in the exposed generators.
inline AcGWord apply_structure_spelled(CoalgebraMap const& c,
                                       Word const&         spelling) {
  return c.as_hom().apply_spelling(spelling);
}

/// Image of an element of c.group.
inline AcGWord apply_structure(CoalgebraMap const& c, Word const& w) {
  if (!c.group.owns(w)) {
    throw Error(ErrorKind::unknown_generator,
                "word is not over the coalgebra's group");
  }
  return apply_structure_spelled(c, c.group.spell(w));
}

struct Witness {
  std::string where;   // generator name or relator label
  std::string detail;  // human-readable, e.g. "[w]^2 != [w^2]"
};

struct Check {
  bool                   holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }

  static Check ok() { return {}; }
  static Check fail(std::string where, std::string detail) {
    return {false, Witness{std::move(where), std::move(detail)}};
  }
};

inline Check is_homomorphism_to_acg(CoalgebraMap const& c) {
  auto hom = c.as_hom();
  auto p   = c.group.presentation();
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    auto img = hom.apply_spelling(p.relators[i]);
    if (!ac_equals(img, hom.target().identity())) {
      return Check::fail(p.labels[i],
                         "relator maps to " + to_string(img) + " != 1");
    }
  }
  return Check::ok();
}

namespace detail {
  inline void require_homomorphism(CoalgebraMap const& c) {
    if (auto h = is_homomorphism_to_acg(c); !h) {
      throw Error(ErrorKind::not_a_homomorphism,
                  "structure map breaks relator " + h.witness->where);
    }
  }

  inline std::string show(std::string s) { return s.empty() ? "1" : s; }
}  // namespace detail

/// epsilon(g(x)) = x for every exposed generator x.
inline Check check_counit(CoalgebraMap const& c) {
  detail::require_homomorphism(c);
  for (std::size_t i = 0; i < c.group.num_generators(); ++i) {
    auto back = epsilon(c.images[i]);
    if (!equals(back, c.group.generator(i))) {
      return Check::fail(c.group.generator_name(i),
                         "epsilon gives " + detail::show(to_string(back)));
    }
  }
  return Check::ok();
}

/// AC(g)(g(x)) = delta(g(x)) in AC(AC(G)) for every exposed generator x.
inline Check check_coassociativity(CoalgebraMap const& c) {
  detail::require_homomorphism(c);
  AcG acg(c.group);
  for (std::size_t i = 0; i < c.group.num_generators(); ++i) {
    auto lhs = ac_map(c.images[i], acg,
                      [&](Word const& g) { return apply_structure(c, g); });
    auto rhs = delta(c.images[i]);
    if (!ac_equals(lhs, rhs)) {
      return Check::fail(c.group.generator_name(i),
                         detail::show(to_string(lhs))
                             + " != " + detail::show(to_string(rhs)));
    }
  }
  return Check::ok();
}

struct CoalgebraVerdict {
  enum class Stage { none, homomorphism, counit, coassociativity };

  Stage                  failed = Stage::none;
  std::optional<Witness> witness;

  bool is_coalgebra() const noexcept { return failed == Stage::none; }
  explicit operator bool() const noexcept { return is_coalgebra(); }

  /// "coalgebra" or "<axiom> failed at <where>".
  std::string message() const {
    switch (failed) {
      case Stage::none: return "coalgebra";
      case Stage::homomorphism: return "homomorphism failed at " + witness->where;
      case Stage::counit: return "counit failed at " + witness->where;
      case Stage::coassociativity:
        return "coassociativity failed at " + witness->where;
    }
    return "";
  }
};

/// Homomorphism, then counit, then coassociativity; stops at the first
/// failure.
inline CoalgebraVerdict check_coalgebra(CoalgebraMap const& c) {
  using Stage = CoalgebraVerdict::Stage;
  if (auto h = is_homomorphism_to_acg(c); !h) {
    return {Stage::homomorphism, h.witness};
  }
  if (auto h = check_counit(c); !h) {
    return {Stage::counit, h.witness};
  }
  if (auto h = check_coassociativity(c); !h) {
    return {Stage::coassociativity, h.witness};
  }
  return {};
}

/// A structure map that has passed check_coalgebra.
class Coalgebra {
 public:
  explicit Coalgebra(CoalgebraMap map) : map_(std::move(map)) {
    if (auto v = check_coalgebra(map_); !v) {
      throw Error(ErrorKind::not_a_coalgebra, v.message());
    }
  }

  CoalgebraMap const& map() const noexcept { return map_; }
  GroupHandle const&  group() const noexcept { return map_.group; }

 private:
  CoalgebraMap map_;
};

/// Does h . f = AC(f) . g hold on every generator?
inline Check is_cohomomorphism(GroupHom const& f, Coalgebra const& cg,
                               Coalgebra const& ch) {
  if (!(f.source() == cg.group()) || !(f.target() == ch.group())) {
    throw Error(ErrorKind::mismatched_ends,
                "homomorphism ends do not match the coalgebras");
  }
  auto const& g = cg.map();
  auto const& h = ch.map();
  for (std::size_t i = 0; i < f.source().num_generators(); ++i) {
    auto lhs = apply_structure(h, f.image(i));
    auto rhs = ac_on_hom(f, g.images[i]);
    if (!ac_equals(lhs, rhs)) {
      return Check::fail(f.source().generator_name(i),
                         detail::show(to_string(lhs))
                             + " != " + detail::show(to_string(rhs)));
    }
  }
  return Check::ok();
}

inline Check is_cohomomorphism(GroupHom const& f, CoalgebraMap const& cg,
                               CoalgebraMap const& ch) {
  if (!(f.source() == cg.group) || !(f.target() == ch.group)) {
    throw Error(ErrorKind::mismatched_ends,
                "homomorphism ends do not match the coalgebras");
  }
  return is_cohomomorphism(f, Coalgebra(cg), Coalgebra(ch));
}

/// The graph homomorphism phi with A(phi) = f, if f is a cohomomorphism.
/// Both groups must be default handles so that vertices are generators.
inline std::optional<GraphHom> cohom_to_graph_hom(GroupHom const& f,
                                                  Coalgebra const& cg,
                                                  Coalgebra const& ch) {
  if (!f.source().is_default() || !f.target().is_default()) {
    throw Error(ErrorKind::invalid_input,
                "reading off a graph map needs vertex generators");
  }
  if (!is_cohomomorphism(f, cg, ch)) {
    return std::nullopt;
  }
  auto const&                        src = f.source().graph();
  auto const&                        dst = f.target().graph();
  std::map<std::string, std::string> map;
  for (std::size_t v = 0; v < src.size(); ++v) {
    auto const& syl = f.image(v).syllables();
    if (syl.size() != 1 || syl[0].exponent != 1) {
      return std::nullopt;
    }
    map.emplace(src.name(v), dst.name(syl[0].generator));
  }
  return validate_hom(src, dst, map);
}

inline std::optional<GraphHom> cohom_to_graph_hom(GroupHom const&     f,
                                                  CoalgebraMap const& cg,
                                                  CoalgebraMap const& ch) {
  return cohom_to_graph_hom(f, Coalgebra(cg), Coalgebra(ch));
}

}  // namespace raag
