#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace raag;
using test::w;

namespace {

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (Error const& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("raag_of_graph") {
  auto z2 = raag_of_graph(graphs::complete({"a", "b"}));
  CHECK(z2.num_generators() == 2);
  CHECK(z2.is_default());
  CHECK(z2.commutes(z2.generator(0), z2.generator(1)));

  auto f2 = raag_of_graph(graphs::discrete({"a", "b"}));
  CHECK_FALSE(f2.commutes(f2.generator(0), f2.generator(1)));

  auto trivial = raag_of_graph(graphs::discrete({}));
  CHECK(trivial.num_generators() == 0);
  CHECK(trivial.identity().is_identity());
  CHECK(trivial.presentation().relators.empty());
}

TEST_CASE("a_on_hom") {
  auto v = graphs::discrete({"v"});
  auto u = graphs::discrete({"w"});
  auto f = a_on_hom(validate_hom(v, u, {{"v", "w"}}));
  CHECK(to_string(f(w(v, "v"))) == "w");
  CHECK(to_string(f(w(v, "v^-3"))) == "w^-3");

  auto sq = graphs::square();
  auto id = a_on_hom(identity_hom(sq));
  test::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto x = test::random_word(rng, sq, 10);
    CHECK(equals(id(x), x));
  }

  auto k2  = graphs::complete({"a", "b"});
  auto one = graphs::discrete({"u"});
  auto c   = a_on_hom(validate_hom(k2, one, {{"a", "u"}, {"b", "u"}}));
  CHECK(to_string(c(w(k2, "a b^2"))) == "u^3");
}

TEST_CASE("a_on_hom is a functor") {
  auto sq = graphs::square();
  auto xy = graphs::complete({"x", "y"});
  auto p  = graphs::discrete({"p"});
  auto f  = validate_hom(sq, xy, {{"a", "x"}, {"b", "y"}, {"c", "x"}, {"d", "y"}});
  auto g  = validate_hom(xy, p, {{"x", "p"}, {"y", "p"}});
  auto lhs = a_on_hom(compose_homs(f, g));
  auto rhs = compose(a_on_hom(f), a_on_hom(g));
  test::Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    auto x = test::random_word(rng, sq, 10);
    CHECK(equals(lhs(x), rhs(x)));
  }
}

TEST_CASE("group_hom") {
  auto v  = raag_of_graph(graphs::discrete({"v"}));
  auto ww = raag_of_graph(graphs::discrete({"w"}));
  auto f  = group_hom(v, ww, {{"v", w(ww.graph(), "w^2")}});
  CHECK(to_string(f(w(v.graph(), "v^3"))) == "w^6");

  auto d2   = raag_of_graph(graphs::discrete({"a", "b"}));
  CHECK_NOTHROW(group_hom(d2, d2, {{"a", w(d2.graph(), "b")}, {"b", w(d2.graph(), "a")}}));

  auto k2 = raag_of_graph(graphs::complete({"a", "b"}));
  CHECK(throws_kind([&] { group_hom(k2, d2, {{"a", w(d2.graph(), "a")}, {"b", w(d2.graph(), "b")}}); },
                    ErrorKind::not_a_homomorphism));
  try {
    group_hom(k2, d2, {{"a", w(d2.graph(), "a")}, {"b", w(d2.graph(), "b")}});
  } catch (Error const& e) {
    CHECK(std::string(e.what()).find("(a,b)") != std::string::npos);
  }
  CHECK(throws_kind([&] { group_hom(k2, d2, {{"a", w(d2.graph(), "a")}}); }, ErrorKind::invalid_input));
  CHECK(throws_kind([&] { group_hom(k2, d2, {{"a", w(d2.graph(), "a")}, {"q", w(d2.graph(), "a")}}); },
                    ErrorKind::unknown_generator));
  CHECK(throws_kind([&] { group_hom(k2, d2, {{"a", w(k2.graph(), "a")}, {"b", w(d2.graph(), "a")}}); },
                    ErrorKind::graph_mismatch));
  CHECK(throws_kind([&] { compose(f, f); }, ErrorKind::mismatched_ends));
}

TEST_CASE("obfuscated handles") {
  auto sq = graphs::square();
  GroupHandle h(sq, {{"a", w(sq, "a")}, {"b", w(sq, "b")}, {"c", w(sq, "c")}, {"e", w(sq, "d a")}});
  CHECK_FALSE(h.is_default());
  CHECK(h.num_generators() == 4);
  CHECK(h.generator_name(3) == "e");
  test::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    auto x = test::random_word(rng, sq, 10);
    CHECK(equals(h.evaluate(h.spell(x)), x));
  }
  auto p = h.presentation();
  for (auto const& r : p.relators) {
    CHECK(h.evaluate(r).is_identity());
  }
  // the Tietze relator for e is trivial once d is spelled "e a^-1"
  CHECK(p.relators.size() == 4);
  CHECK(abelianization_rank(p) == 4);

  CHECK(throws_kind([&] { GroupHandle(sq, {{"a", w(sq, "a")}, {"b", w(sq, "b")}}); },
                    ErrorKind::invalid_input));
  CHECK(throws_kind([&] { GroupHandle(sq, {{"a", w(sq, "a a^-1")}}); }, ErrorKind::invalid_input));

  // Same words under the vertex names is the default handle again.
  GroupHandle same(sq, {{"a", w(sq, "a")}, {"b", w(sq, "b")}, {"c", w(sq, "c")}, {"d", w(sq, "d")}});
  CHECK(same.is_default());
  CHECK(same == GroupHandle(sq));
}

TEST_CASE("homomorphisms from obfuscated handles") {
  auto sq = graphs::square();
  GroupHandle h(sq, {{"a", w(sq, "a")}, {"b", w(sq, "b")}, {"c", w(sq, "c")}, {"e", w(sq, "d a")}});
  GroupHandle plain(sq);
  auto f = group_hom(h, plain, {{"a", w(sq, "a")}, {"b", w(sq, "b")}, {"c", w(sq, "c")}, {"e", w(sq, "d a")}});
  test::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    auto x = test::random_word(rng, sq, 8);
    CHECK(equals(f(x), x));
  }
  // e -> d alone breaks the Tietze relator
  CHECK(throws_kind([&] {
    group_hom(h, plain, {{"a", w(sq, "a")}, {"b", w(sq, "b")}, {"c", w(sq, "c")}, {"e", w(sq, "d")}});
  }, ErrorKind::not_a_homomorphism));
}
