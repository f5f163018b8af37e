#include <set>

#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace raag;

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

TEST_CASE("validate_graph builds and normalizes") {
  auto sq = validate_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  CHECK(sq == graphs::square());
  CHECK(sq.edges().size() == 4);

  auto one = validate_graph({"v"}, {});
  CHECK(one.size() == 1);
  CHECK(one.edges().empty());

  auto dup = validate_graph({"b", "a"}, {{"a", "b"}, {"b", "a"}});
  CHECK(dup.vertices() == std::vector<std::string>{"a", "b"});
  CHECK(dup.edges().size() == 1);

  CHECK(throws_kind([] { validate_graph({"a"}, {{"a", "a"}}); }, ErrorKind::explicit_self_loop));
  CHECK(throws_kind([] { validate_graph({"a", "a"}, {}); }, ErrorKind::duplicate_vertex));
  CHECK(throws_kind([] { validate_graph({"a"}, {{"a", "z"}}); }, ErrorKind::unknown_endpoint));
  CHECK(throws_kind([] { validate_graph({"a-b"}, {}); }, ErrorKind::invalid_name));
  CHECK(throws_kind([] { validate_graph({""}, {}); }, ErrorKind::invalid_name));

  auto empty = validate_graph({}, {});
  CHECK(empty.empty());
}

TEST_CASE("vertex order is byte-wise") {
  auto g = graphs::discrete({"b", "B", "a10", "a2"});
  CHECK(g.vertices() == std::vector<std::string>{"B", "a10", "a2", "b"});
}

TEST_CASE("adjacent is reflexive and symmetric") {
  auto sq = graphs::square();
  CHECK(adjacent(sq, "a", "a"));
  CHECK(adjacent(sq, "a", "b"));
  CHECK_FALSE(adjacent(sq, "a", "c"));
  CHECK(throws_kind([&] { adjacent(sq, "a", "q"); }, ErrorKind::unknown_vertex));
  for (auto const& [name, g] : test::corpus()) {
    for (auto const& u : g.vertices()) {
      CHECK(adjacent(g, u, u));
      for (auto const& v : g.vertices()) {
        CHECK(adjacent(g, u, v) == adjacent(g, v, u));
      }
    }
  }
}

TEST_CASE("validate_hom") {
  auto k2  = graphs::complete({"a", "b"});
  auto one = graphs::discrete({"u"});
  CHECK_NOTHROW(validate_hom(k2, one, {{"a", "u"}, {"b", "u"}}));

  auto xy = graphs::complete({"x", "y"});
  CHECK_NOTHROW(validate_hom(graphs::square(), xy, {{"a", "x"}, {"b", "y"}, {"c", "x"}, {"d", "y"}}));

  auto d2 = graphs::discrete({"a", "b"});
  CHECK_NOTHROW(validate_hom(d2, d2, {{"a", "a"}, {"b", "a"}}));

  CHECK(throws_kind([&] { validate_hom(k2, d2, {{"a", "a"}, {"b", "b"}}); }, ErrorKind::not_a_hom));
  CHECK(throws_kind([&] { validate_hom(k2, d2, {{"a", "a"}}); }, ErrorKind::unknown_vertex));
  CHECK(throws_kind([&] { validate_hom(k2, d2, {{"a", "a"}, {"b", "q"}}); }, ErrorKind::unknown_vertex));
  try {
    validate_hom(k2, d2, {{"a", "a"}, {"b", "b"}});
  } catch (Error const& e) {
    CHECK(std::string(e.what()).find("(a,b)") != std::string::npos);
  }
}

TEST_CASE("compose_homs") {
  auto xy  = graphs::complete({"x", "y"});
  auto one = graphs::discrete({"u"});
  auto f   = validate_hom(graphs::square(), xy, {{"a", "x"}, {"b", "y"}, {"c", "x"}, {"d", "y"}});
  auto g   = validate_hom(xy, one, {{"x", "u"}, {"y", "u"}});
  CHECK(compose_homs(identity_hom(f.source()), f) == f);
  CHECK(compose_homs(f, identity_hom(f.target())) == f);
  auto c = compose_homs(f, g);
  for (std::size_t v = 0; v < 4; ++v) {
    CHECK(c(v) == 0);
  }
  CHECK(throws_kind([&] { compose_homs(g, f); }, ErrorKind::mismatched_ends));
}

TEST_CASE("compose_homs is associative on small graphs") {
  std::vector<Graph> gs;
  for (auto const& [name, g] : test::small_corpus(3)) {
    gs.push_back(g);
  }
  std::size_t triples = 0;
  for (auto const& a : gs) {
    for (auto const& b : gs) {
      auto ab = enumerate_homs(a, b);
      for (auto const& c : gs) {
        auto bc = enumerate_homs(b, c);
        for (auto const& d : gs) {
          auto cd = enumerate_homs(c, d);
          if (ab.size() * bc.size() * cd.size() > 4000) {
            continue;
          }
          for (auto const& f : ab) {
            for (auto const& g : bc) {
              for (auto const& h : cd) {
                CHECK(compose_homs(compose_homs(f, g), h) == compose_homs(f, compose_homs(g, h)));
                ++triples;
              }
            }
          }
        }
      }
    }
  }
  CHECK(triples > 1000);
}

TEST_CASE("equalizer") {
  auto d2 = graphs::discrete({"a", "b"});
  auto id = identity_hom(d2);
  auto [theta, incl] = equalizer(id, id);
  CHECK(theta == d2);
  CHECK(incl == id);

  auto x  = graphs::discrete({"x"});
  auto c1 = validate_hom(d2, x, {{"a", "x"}, {"b", "x"}});
  CHECK(equalizer(c1, c1).first == d2);

  auto swap = validate_hom(d2, d2, {{"a", "b"}, {"b", "a"}});
  CHECK(equalizer(id, swap).first.empty());

  auto sq = graphs::square();
  auto fold = validate_hom(sq, sq, {{"a", "a"}, {"b", "b"}, {"c", "a"}, {"d", "d"}});
  auto [t2, i2] = equalizer(identity_hom(sq), fold);
  CHECK(t2.vertices() == std::vector<std::string>{"a", "b", "d"});
  CHECK(t2.edges().size() == 2);
  CHECK(i2.target() == sq);

  CHECK(throws_kind([&] { equalizer(id, c1); }, ErrorKind::mismatched_ends));
}

TEST_CASE("equalizer is the full subgraph where the maps agree") {
  for (auto const& [n1, src] : test::small_corpus(3)) {
    for (auto const& [n2, dst] : test::small_corpus(3)) {
      auto homs = enumerate_homs(src, dst);
      for (auto const& a : homs) {
        for (auto const& b : homs) {
          auto [theta, incl] = equalizer(a, b);
          std::set<std::string> agree;
          for (std::size_t v = 0; v < src.size(); ++v) {
            if (a(v) == b(v)) {
              agree.insert(src.name(v));
            }
          }
          CHECK(std::set<std::string>(theta.vertices().begin(), theta.vertices().end()) == agree);
          for (auto const& u : theta.vertices()) {
            for (auto const& v : theta.vertices()) {
              CHECK(adjacent(theta, u, v) == adjacent(src, u, v));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("is_coreflexive_pair") {
  auto d2 = graphs::discrete({"a", "b"});
  auto id = identity_hom(d2);
  CHECK(is_coreflexive_pair(id, id, id));

  auto one = graphs::discrete({"v"});
  auto vw  = graphs::discrete({"v", "w"});
  auto a   = validate_hom(one, vw, {{"v", "v"}});
  auto b   = validate_hom(one, vw, {{"v", "w"}});
  auto rho = validate_hom(vw, one, {{"v", "v"}, {"w", "v"}});
  CHECK(is_coreflexive_pair(a, b, rho));

  auto swap = validate_hom(d2, d2, {{"a", "b"}, {"b", "a"}});
  CHECK_FALSE(is_coreflexive_pair(id, id, swap));
  CHECK(throws_kind([&] { is_coreflexive_pair(a, b, a); }, ErrorKind::mismatched_ends));
}

TEST_CASE("enumerate_homs") {
  auto one = graphs::discrete({"v"});
  CHECK(enumerate_homs(one, one).size() == 1);
  auto d2 = graphs::discrete({"a", "b"});
  auto k2 = graphs::complete({"a", "b"});
  CHECK(enumerate_homs(d2, k2).size() == 4);
  auto k2d2 = enumerate_homs(k2, d2);
  REQUIRE(k2d2.size() == 2);
  CHECK(k2d2[0].table() == std::vector<std::size_t>{0, 0});
  CHECK(k2d2[1].table() == std::vector<std::size_t>{1, 1});

  CHECK(enumerate_homs(graphs::discrete({}), d2).size() == 1);
  CHECK(enumerate_homs(d2, graphs::discrete({})).empty());

  // 8^8 maps is over the guard
  auto big = graphs::discrete({"a", "b", "c", "d", "e", "f", "g", "h"});
  CHECK(throws_kind([&] { enumerate_homs(big, big); }, ErrorKind::search_space_too_large));
}

TEST_CASE("enumerate_homs agrees with validate_hom") {
  for (auto const& [n1, src] : test::small_corpus(4)) {
    for (auto const& [n2, dst] : test::small_corpus(4)) {
      auto homs = enumerate_homs(src, dst);
      std::set<std::vector<std::size_t>> listed;
      for (auto const& h : homs) {
        listed.insert(h.table());
      }
      CHECK(listed.size() == homs.size());
      CHECK(std::is_sorted(homs.begin(), homs.end(),
                           [](auto const& x, auto const& y) { return x.table() < y.table(); }));
      std::vector<std::size_t> table(src.size(), 0);
      std::size_t              valid = 0;
      for (;;) {
        std::map<std::string, std::string> m;
        for (std::size_t v = 0; v < src.size(); ++v) {
          m[src.name(v)] = dst.name(table[v]);
        }
        bool ok = true;
        try {
          validate_hom(src, dst, m);
        } catch (Error const&) {
          ok = false;
        }
        CHECK(ok == (listed.count(table) == 1));
        valid += ok;
        std::size_t i = 0;
        while (i < table.size() && ++table[i] == dst.size()) {
          table[i++] = 0;
        }
        if (i == table.size()) {
          break;
        }
      }
      CHECK(valid == homs.size());
    }
  }
}

TEST_CASE("graphs_isomorphic") {
  auto sq = graphs::square();
  auto wxyz = graphs::cycle({"w", "x", "y", "z"});
  CHECK(graphs_isomorphic(sq, wxyz).has_value());
  CHECK_FALSE(graphs_isomorphic(graphs::complete({"a", "b", "c"}), graphs::discrete({"a", "b", "c"})));
  auto p1 = graphs::path({"a", "b", "c"});
  auto p2 = graphs::path({"c", "b", "a"});
  auto iso = graphs_isomorphic(p1, p2);
  REQUIRE(iso);
  for (auto [u, v] : p1.edges()) {
    CHECK(p2.adjacent((*iso)(u), (*iso)(v)));
  }
  CHECK_FALSE(graphs_isomorphic(graphs::path({"a", "b", "c", "d"}), graphs::star({"a", "b", "c", "d"})));
  CHECK_FALSE(graphs_isomorphic(sq, graphs::path({"a", "b", "c", "d"})));
}
