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

GroupHandle cyclic(char const* name) { return raag_of_graph(graphs::discrete({name})); }

CoalgebraMap coalgebra(GroupHandle const& g, std::map<std::string, std::string> const& images) {
  std::map<std::string, AcGWord> parsed;
  for (auto const& [k, v] : images) {
    parsed.emplace(k, parse_ac_word(g, v));
  }
  return make_coalgebra_map(g, parsed);
}

GroupHandle obfuscated_square() {
  auto sq = graphs::square();
  return GroupHandle(sq, {{"a", w(sq, "a")}, {"b", w(sq, "b")}, {"c", w(sq, "c")}, {"e", w(sq, "d a")}});
}

}  // namespace

TEST_CASE("canonical_coalgebra") {
  auto c1 = canonical_coalgebra(graphs::discrete({"v"}));
  REQUIRE(c1.images.size() == 1);
  CHECK(to_string(c1.images[0]) == "[v]");
  auto sq = canonical_coalgebra(graphs::square());
  std::vector<std::string> texts;
  for (auto const& x : sq.images) {
    texts.push_back(to_string(x));
  }
  CHECK(texts == std::vector<std::string>{"[a]", "[b]", "[c]", "[d]"});
  CHECK(canonical_coalgebra(graphs::discrete({})).images.empty());
  CHECK(check_coalgebra(canonical_coalgebra(graphs::discrete({}))));
}

TEST_CASE("apply_structure") {
  auto sq = canonical_coalgebra(graphs::square());
  CHECK(to_string(apply_structure(sq, w(sq.group.graph(), "a b"))) == "[a] [b]");
  auto v = canonical_coalgebra(graphs::discrete({"v"}));
  CHECK(to_string(apply_structure(v, w(v.group.graph(), "v^3"))) == "[v]^3");
  CHECK(apply_structure(v, w(v.group.graph(), "")).is_identity());
  CHECK(throws_kind([&] { apply_structure(v, w(sq.group.graph(), "a")); }, ErrorKind::unknown_generator));
}

TEST_CASE("is_homomorphism_to_acg") {
  auto k2 = raag_of_graph(graphs::complete({"a", "b"}));
  CHECK(is_homomorphism_to_acg(canonical_coalgebra(k2.graph())));
  CHECK(is_homomorphism_to_acg(coalgebra(k2, {{"a", "[a]"}, {"b", "[a b]"}})));

  auto sq  = raag_of_graph(graphs::square());
  auto bad = is_homomorphism_to_acg(coalgebra(sq, {{"a", "[c]"}, {"b", "[a]"}, {"c", "[c]"}, {"d", "[d]"}}));
  CHECK_FALSE(bad);
  REQUIRE(bad.witness);
  CHECK(bad.witness->where == "(a,b)");
}

TEST_CASE("check_counit") {
  auto v = cyclic("v");
  CHECK(check_counit(canonical_coalgebra(v.graph())));
  auto sq_check = check_counit(coalgebra(v, {{"v", "[v^2]"}}));
  CHECK_FALSE(sq_check);
  CHECK(sq_check.witness->where == "v");
  CHECK(sq_check.witness->detail == "epsilon gives v^2");
  auto pow_check = check_counit(coalgebra(v, {{"v", "[v]^2"}}));
  CHECK_FALSE(pow_check);
  CHECK(pow_check.witness->detail == "epsilon gives v^2");

  auto sq = raag_of_graph(graphs::square());
  CHECK(throws_kind([&] { check_counit(coalgebra(sq, {{"a", "[c]"}, {"b", "[a]"}, {"c", "[c]"}, {"d", "[d]"}})); },
                    ErrorKind::not_a_homomorphism));
}

TEST_CASE("check_coassociativity") {
  CHECK(check_coassociativity(canonical_coalgebra(graphs::square())));
  auto v = cyclic("v");
  // g(v^-1) = [v^-1], so both sides are [[v^-1]]^-1.
  CHECK(check_coassociativity(coalgebra(v, {{"v", "[v^-1]^-1"}})));
  CHECK(check_coalgebra(coalgebra(v, {{"v", "[v^-1]^-1"}})));

  // Counit holds but coassociativity fails: [v^2] [v]^-1.
  auto c = coalgebra(v, {{"v", "[v^2] [v]^-1"}});
  CHECK(check_counit(c));
  auto r = check_coassociativity(c);
  CHECK_FALSE(r);
  CHECK(r.witness->where == "v");

  auto sq = raag_of_graph(graphs::square());
  CHECK(throws_kind([&] { check_coassociativity(coalgebra(sq, {{"a", "[c]"}, {"b", "[a]"}, {"c", "[c]"}, {"d", "[d]"}})); },
                    ErrorKind::not_a_homomorphism));
}

TEST_CASE("check_coalgebra verdicts") {
  auto v = cyclic("v");
  CHECK(check_coalgebra(coalgebra(v, {{"v", "[v]"}})).message() == "coalgebra");
  CHECK(check_coalgebra(coalgebra(v, {{"v", "[v^2]"}})).message() == "counit failed at v");
  auto sq = raag_of_graph(graphs::square());
  auto verdict = check_coalgebra(coalgebra(sq, {{"a", "[c]"}, {"b", "[a]"}, {"c", "[c]"}, {"d", "[d]"}}));
  CHECK(verdict.failed == CoalgebraVerdict::Stage::homomorphism);
  CHECK(verdict.message() == "homomorphism failed at (a,b)");
  CHECK(check_coalgebra(coalgebra(v, {{"v", "[v^2] [v]^-1"}})).message() == "coassociativity failed at v");
  CHECK(throws_kind([&] { Coalgebra(coalgebra(v, {{"v", "[v^2]"}})); }, ErrorKind::not_a_coalgebra));
}

TEST_CASE("canonical coalgebras pass on the corpus") {
  for (auto const& [name, g] : test::corpus()) {
    INFO(name);
    CHECK(check_coalgebra(canonical_coalgebra(g)));
  }
}

TEST_CASE("obfuscated square coalgebra") {
  auto h = obfuscated_square();
  CHECK(check_coalgebra(coalgebra(h, {{"a", "[a]"}, {"b", "[b]"}, {"c", "[c]"}, {"e", "[d] [a]"}})));
  auto naive = check_coalgebra(coalgebra(h, {{"a", "[a]"}, {"b", "[b]"}, {"c", "[c]"}, {"e", "[a d]"}}));
  CHECK(naive.failed == CoalgebraVerdict::Stage::homomorphism);
  CHECK(naive.witness->where == "(c,d)");
}

TEST_CASE("is_cohomomorphism on the worked example") {
  auto v  = cyclic("v");
  auto ww = cyclic("w");
  Coalgebra cv(canonical_coalgebra(v.graph()));
  Coalgebra cw(canonical_coalgebra(ww.graph()));

  auto f = group_hom(v, ww, {{"v", w(ww.graph(), "w")}});
  CHECK(is_cohomomorphism(f, cv, cw));
  auto phi = cohom_to_graph_hom(f, cv, cw);
  REQUIRE(phi);
  CHECK(phi->to_map() == std::map<std::string, std::string>{{"v", "w"}});

  auto g = group_hom(v, ww, {{"v", w(ww.graph(), "w^2")}});
  auto r = is_cohomomorphism(g, cv, cw);
  CHECK_FALSE(r);
  CHECK(r.witness->where == "v");
  CHECK(r.witness->detail == "[w]^2 != [w^2]");
  CHECK_FALSE(cohom_to_graph_hom(g, cv, cw));

  auto sq = canonical_coalgebra(graphs::square());
  CHECK(is_cohomomorphism(identity_hom(sq.group), sq, sq));

  CHECK(throws_kind([&] { is_cohomomorphism(f, cw, cv); }, ErrorKind::mismatched_ends));
  CHECK(throws_kind([&] { is_cohomomorphism(f, coalgebra(v, {{"v", "[v^2]"}}), canonical_coalgebra(ww.graph())); },
                    ErrorKind::not_a_coalgebra));
}

TEST_CASE("cohom_to_graph_hom recovers graph maps") {
  auto sq  = graphs::square();
  auto k2  = graphs::complete({"x", "y"});
  auto phi = validate_hom(sq, k2, {{"a", "x"}, {"b", "y"}, {"c", "x"}, {"d", "y"}});
  auto got = cohom_to_graph_hom(a_on_hom(phi), canonical_coalgebra(sq), canonical_coalgebra(k2));
  REQUIRE(got);
  CHECK(*got == phi);
}

TEST_CASE("soundness: every A(phi) is accepted") {
  std::vector<Graph> gs{graphs::discrete({"v"}), graphs::discrete({"a", "b"}), graphs::complete({"a", "b"}),
                        graphs::path({"a", "b", "c"}), graphs::square()};
  for (auto const& src : gs) {
    for (auto const& dst : gs) {
      Coalgebra cs(canonical_coalgebra(src));
      Coalgebra cd(canonical_coalgebra(dst));
      for (auto const& phi : enumerate_homs(src, dst)) {
        auto f = a_on_hom(phi);
        CHECK(is_cohomomorphism(f, cs, cd));
        auto back = cohom_to_graph_hom(f, cs, cd);
        REQUIRE(back);
        CHECK(*back == phi);
      }
    }
  }
}

TEST_CASE("identity and composites are accepted") {
  auto h = obfuscated_square();
  Coalgebra c(coalgebra(h, {{"a", "[a]"}, {"b", "[b]"}, {"c", "[c]"}, {"e", "[d] [a]"}}));
  CHECK(is_cohomomorphism(identity_hom(h), c, c));

  auto sq = graphs::square();
  auto p3 = graphs::path({"x", "y", "z"});
  auto k2 = graphs::complete({"s", "t"});
  Coalgebra csq(canonical_coalgebra(sq));
  Coalgebra cp3(canonical_coalgebra(p3));
  Coalgebra ck2(canonical_coalgebra(k2));
  for (auto const& f : enumerate_homs(sq, p3)) {
    for (auto const& g : enumerate_homs(p3, k2)) {
      auto af = a_on_hom(f);
      auto ag = a_on_hom(g);
      REQUIRE(is_cohomomorphism(af, csq, cp3));
      REQUIRE(is_cohomomorphism(ag, cp3, ck2));
      CHECK(is_cohomomorphism(compose(af, ag), csq, ck2));
    }
  }

  // From the obfuscated handle into the plain one: the translation map.
  GroupHandle plain(sq);
  auto        t = group_hom(h, plain, {{"a", w(sq, "a")}, {"b", w(sq, "b")}, {"c", w(sq, "c")}, {"e", w(sq, "d a")}});
  CHECK(is_cohomomorphism(t, c, csq));
}

TEST_CASE("completeness: accepted iff matched by the oracle") {
  std::vector<Graph> gs{graphs::discrete({"v"}), graphs::discrete({"a", "b"}), graphs::complete({"a", "b"}),
                        graphs::path({"a", "b", "c"}), graphs::square()};
  test::Rng rng(31);
  for (auto const& src : gs) {
    for (auto const& dst : gs) {
      GroupHandle gs_(src);
      GroupHandle gd(dst);
      Coalgebra   cs(canonical_coalgebra(src));
      Coalgebra   cd(canonical_coalgebra(dst));
      int         kept = 0;
      int         accepted = 0;
      for (int attempt = 0; attempt < 5000 && kept < 60; ++attempt) {
        std::map<std::string, Word> images;
        for (auto const& v : src.vertices()) {
          images.emplace(v, test::random_word(rng, dst, 2));
        }
        try {
          auto f     = group_hom(gs_, gd, images);
          bool yes   = is_cohomomorphism(f, cs, cd).holds;
          auto match = testkit::bf_is_a_phi(f, src, dst);
          CHECK(yes == match.has_value());
          ++kept;
          accepted += yes;
        } catch (Error const& e) {
          REQUIRE(e.kind() == ErrorKind::not_a_homomorphism);
        }
      }
      CHECK(kept > 0);
    }
  }
}
