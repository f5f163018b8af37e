// raag: command-line front end.
//
// Exit status: 0 yes/success, 1 no/budget exhausted, 2 error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "io.hpp"

namespace {

using raag::io::json;

constexpr int yes   = 0;
constexpr int no    = 1;
constexpr int error = 2;

bool json_output = false;

std::string show(std::string text) { return text.empty() ? "1" : text; }

int verdict(bool holds) {
  if (json_output) {
    std::cout << json{{"result", holds}}.dump() << '\n';
  } else {
    std::cout << (holds ? "true" : "false") << '\n';
  }
  return holds ? yes : no;
}

////////////////////////////////////////////////////////////////////////////////

struct NfArgs {
  std::string graph;
  std::string word;
  bool        central = false;
};

int run_nf(NfArgs const& a) {
  auto g = raag::io::load_graph(a.graph);
  auto w = raag::parse_word(g, a.word);
  if (a.central) {
    auto cf = raag::central_form(w);
    if (json_output) {
      json blocks = json::array();
      for (auto const& b : cf.blocks) {
        blocks.push_back(raag::to_string(raag::Word(cf.graph, b)));
      }
      std::cout << json{{"blocks", blocks}}.dump() << '\n';
    } else {
      std::cout << show(raag::to_string(cf)) << '\n';
    }
    return yes;
  }
  auto text = raag::to_string(raag::canonical_form(w));
  if (json_output) {
    std::cout << json{{"word", text}}.dump() << '\n';
  } else {
    std::cout << show(text) << '\n';
  }
  return yes;
}

struct PairArgs {
  std::string graph;
  std::string graph2;
  std::string left;
  std::string right;
};

std::pair<raag::Word, raag::Word> load_pair(PairArgs const& a) {
  auto g1 = raag::io::load_graph(a.graph);
  auto g2 = a.graph2.empty() ? g1 : raag::io::load_graph(a.graph2);
  return {raag::parse_word(g1, a.left), raag::parse_word(g2, a.right)};
}

int run_eq(PairArgs const& a) {
  auto [x, y] = load_pair(a);
  return verdict(raag::equals(x, y));
}

int run_commutes(PairArgs const& a) {
  auto [x, y] = load_pair(a);
  if (!(x.graph() == y.graph())) {
    throw raag::Error(raag::ErrorKind::graph_mismatch, "words over different graphs");
  }
  return verdict(raag::commutes(x, y));
}

////////////////////////////////////////////////////////////////////////////////

struct CohomArgs {
  std::string src;
  std::string dst;
  std::string hom;
  std::string src_coalg;
  std::string dst_coalg;
};

raag::CoalgebraMap coalgebra_or_canonical(std::string const&       path,
                                          raag::GroupHandle const& group) {
  if (path.empty()) {
    if (!group.is_default()) {
      throw raag::Error(raag::ErrorKind::invalid_input,
                        "a coalgebra file is needed for a group with exposed words");
    }
    return raag::canonical_coalgebra(group.graph());
  }
  auto c = raag::io::load_coalgebra(path);
  if (!(c.group == group)) {
    throw raag::Error(raag::ErrorKind::mismatched_ends,
                      path + " is not over the homomorphism's group");
  }
  return c;
}

int run_is_cohom(CohomArgs const& a) {
  auto src = raag::io::load_handle(a.src);
  auto dst = raag::io::load_handle(a.dst);
  auto f   = raag::io::group_hom_from_document(src, dst, raag::io::read_document(a.hom));
  raag::Coalgebra cg(coalgebra_or_canonical(a.src_coalg, src));
  raag::Coalgebra ch(coalgebra_or_canonical(a.dst_coalg, dst));

  auto check = raag::is_cohomomorphism(f, cg, ch);
  std::optional<raag::GraphHom> phi;
  bool canonical = a.src_coalg.empty() && a.dst_coalg.empty();
  if (check && canonical) {
    phi = raag::cohom_to_graph_hom(f, cg, ch);
  }
  if (json_output) {
    json out{{"result", check.holds}};
    if (phi) {
      out["map"] = phi->to_map();
    }
    if (check.witness) {
      out["witness"] = {{"generator", check.witness->where},
                        {"detail", check.witness->detail}};
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << (check ? "true" : "false") << '\n';
    if (phi) {
      for (auto const& [v, u] : phi->to_map()) {
        std::cout << v << " -> " << u << '\n';
      }
    }
  }
  if (check.witness) {
    std::cerr << check.witness->where << ": " << check.witness->detail << '\n';
  }
  return check ? yes : no;
}

int run_check_coalgebra(std::string const& path) {
  auto v = raag::check_coalgebra(raag::io::load_coalgebra(path));
  if (json_output) {
    json out{{"result", v.is_coalgebra()}, {"verdict", v.message()}};
    if (v.witness) {
      out["witness"] = {{"at", v.witness->where}, {"detail", v.witness->detail}};
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << v.message() << '\n';
  }
  if (v.witness) {
    std::cerr << v.witness->where << ": " << v.witness->detail << '\n';
  }
  return v ? yes : no;
}

int run_recover(std::string const& path, std::size_t max_length) {
  if (max_length < 1) {
    throw raag::Error(raag::ErrorKind::invalid_input, "--max-length must be at least 1");
  }
  raag::Coalgebra c(raag::io::load_coalgebra(path));
  auto rank = raag::abelianization_rank(c.group().presentation());
  std::cerr << "rank " << rank << '\n';
  try {
    auto r      = raag::recover_graph(c.map(), rank, max_length);
    auto out    = raag::io::graph_to_json(r.graph);
    json labels = json::object();
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
      labels[r.graph.name(i)] = raag::to_string(r.labels[i]);
    }
    out["labels"] = labels;
    std::cout << out.dump() << '\n';
    return yes;
  } catch (raag::BudgetExhausted const& e) {
    if (json_output) {
      std::cout << json{{"found", e.found()}, {"wanted", e.wanted()}}.dump() << '\n';
    } else {
      std::cout << "found " << e.found() << " of " << e.wanted() << '\n';
    }
    return no;
  }
}

////////////////////////////////////////////////////////////////////////////////

struct EqualizerArgs {
  std::string   alpha;
  std::string   beta;
  std::string   rho;
  std::size_t   trials  = 1000;
  std::size_t   max_len = 8;
  std::uint64_t seed    = 0;
};

int run_equalizer_test(EqualizerArgs const& a) {
  auto alpha = raag::io::load_graph_hom(a.alpha);
  auto beta  = raag::io::load_graph_hom(a.beta);
  auto rho   = raag::io::load_graph_hom(a.rho);
  if (!raag::is_coreflexive_pair(alpha, beta, rho)) {
    throw raag::Error(raag::ErrorKind::invalid_input, "the pair is not coreflexive");
  }
  auto const& src        = alpha.source();
  auto [theta, incl]     = raag::equalizer(alpha, beta);
  auto        fa         = raag::a_on_hom(alpha);
  auto        fb         = raag::a_on_hom(beta);
  auto const& keep_names = theta.vertices();
  std::set<std::string> keep(keep_names.begin(), keep_names.end());

  std::mt19937_64                            rng(a.seed);
  std::uniform_int_distribution<std::size_t> length(0, a.max_len);
  std::size_t agreeing   = 0;
  std::size_t violations = 0;
  for (std::size_t t = 0; t < a.trials; ++t) {
    std::vector<raag::Syllable> syl;
    if (src.size() > 0) {
      std::uniform_int_distribution<std::size_t> vertex(0, src.size() - 1);
      std::bernoulli_distribution                negative(0.5);
      for (auto n = length(rng); n > 0; --n) {
        auto v = vertex(rng);
        syl.push_back({v, raag::Exponent(negative(rng) ? -1 : 1)});
      }
    }
    raag::Word g(src, std::move(syl));
    if (raag::equals(fa(g), fb(g))) {
      ++agreeing;
      if (!raag::in_special_subgroup(g, keep)) {
        ++violations;
        std::cerr << "violation: " << show(raag::to_string(raag::canonical_form(g)))
                  << '\n';
      }
    }
  }
  if (json_output) {
    std::cout << json{{"trials", a.trials}, {"agreeing", agreeing}, {"violations", violations}}
                     .dump()
              << '\n';
  } else {
    std::cout << "trials " << a.trials << '\n'
              << "agreeing " << agreeing << '\n'
              << "violations " << violations << '\n';
  }
  return violations == 0 ? yes : no;
}

struct SearchArgs {
  std::string presentation;
  std::string promise;
  std::size_t symbol_budget = 1;
  std::size_t image_budget  = 1;
};

int run_search_coalgebra(SearchArgs const& a) {
  auto p     = raag::io::load_presentation(a.presentation);
  auto wp    = raag::io::load_handle(a.promise);
  auto found = raag::search_coalgebra(p, wp, a.symbol_budget, a.image_budget);
  if (found) {
    std::cout << raag::io::coalgebra_to_json(*found).dump() << '\n';
    return yes;
  }
  if (json_output) {
    std::cout << json{{"exhausted", true},
                      {"symbol_budget", a.symbol_budget},
                      {"image_budget", a.image_budget}}
                     .dump()
              << '\n';
  } else {
    std::cout << "exhausted symbol-budget " << a.symbol_budget << " image-budget "
              << a.image_budget << '\n';
  }
  return no;
}

int run_snf(std::string const& path) {
  auto s = raag::smith_normal_form(raag::io::load_matrix(path));
  if (json_output) {
    json inv = json::array();
    for (auto const& d : s.invariants) {
      inv.push_back(d.str());
    }
    std::cout << json{{"invariants", inv}, {"rank", s.rank}}.dump() << '\n';
    return yes;
  }
  std::cout << "invariants";
  for (auto const& d : s.invariants) {
    std::cout << ' ' << d;
  }
  std::cout << "\nrank " << s.rank << '\n';
  return yes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right-angled Artin groups: normal forms, coalgebras, recovery"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", json_output, "structured output");

  NfArgs nf;
  auto*  nf_cmd = app.add_subcommand("nf", "print the normal form of a word");
  nf_cmd->add_option("--graph", nf.graph, "graph file")->required();
  nf_cmd->add_option("word", nf.word, "word text")->required();
  nf_cmd->add_flag("--central", nf.central, "print central blocks");

  PairArgs pair;
  auto add_pair = [&](char const* name, char const* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--graph", pair.graph, "graph file")->required();
    cmd->add_option("--graph2", pair.graph2, "graph file for the second word");
    cmd->add_option("w1", pair.left, "first word")->required();
    cmd->add_option("w2", pair.right, "second word")->required();
    return cmd;
  };
  auto* eq_cmd       = add_pair("eq", "decide equality of two words");
  auto* commutes_cmd = add_pair("commutes", "decide whether two words commute");

  CohomArgs cohom;
  auto*     cohom_cmd = app.add_subcommand("is-cohom", "decide whether a map comes from a graph map");
  cohom_cmd->add_option("--src", cohom.src, "source group file")->required();
  cohom_cmd->add_option("--dst", cohom.dst, "target group file")->required();
  cohom_cmd->add_option("--hom", cohom.hom, "homomorphism file")->required();
  cohom_cmd->add_option("--src-coalg", cohom.src_coalg, "source coalgebra file");
  cohom_cmd->add_option("--dst-coalg", cohom.dst_coalg, "target coalgebra file");

  std::string coalg_path;
  auto*       check_cmd = app.add_subcommand("check-coalgebra", "check the coalgebra axioms");
  check_cmd->add_option("--coalg", coalg_path, "coalgebra file")->required();

  std::size_t max_length = 2;
  auto*       recover_cmd = app.add_subcommand("recover", "recover the graph behind a coalgebra");
  recover_cmd->add_option("--coalg", coalg_path, "coalgebra file")->required();
  recover_cmd->add_option("--max-length", max_length, "element length budget");

  EqualizerArgs eqz;
  auto*         eqz_cmd = app.add_subcommand("equalizer-test", "sample the equalizer property");
  eqz_cmd->add_option("--alpha", eqz.alpha, "first graph map")->required();
  eqz_cmd->add_option("--beta", eqz.beta, "second graph map")->required();
  eqz_cmd->add_option("--rho", eqz.rho, "common retraction")->required();
  eqz_cmd->add_option("--trials", eqz.trials, "number of random words");
  eqz_cmd->add_option("--max-len", eqz.max_len, "maximum word length");
  eqz_cmd->add_option("--seed", eqz.seed, "random seed");

  SearchArgs search;
  auto*      search_cmd = app.add_subcommand("search-coalgebra", "bounded search for a coalgebra");
  search_cmd->add_option("--presentation", search.presentation, "presentation file")->required();
  search_cmd->add_option("--promise-graph", search.promise, "graph or group file")->required();
  search_cmd->add_option("--symbol-budget", search.symbol_budget, "symbol length budget");
  search_cmd->add_option("--image-budget", search.image_budget, "image length budget");

  std::string matrix_path;
  auto*       snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("--matrix", matrix_path, "matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return error;
  }

  try {
    if (nf_cmd->parsed()) return run_nf(nf);
    if (eq_cmd->parsed()) return run_eq(pair);
    if (commutes_cmd->parsed()) return run_commutes(pair);
    if (cohom_cmd->parsed()) return run_is_cohom(cohom);
    if (check_cmd->parsed()) return run_check_coalgebra(coalg_path);
    if (recover_cmd->parsed()) return run_recover(coalg_path, max_length);
    if (eqz_cmd->parsed()) return run_equalizer_test(eqz);
    if (search_cmd->parsed()) return run_search_coalgebra(search);
    if (snf_cmd->parsed()) return run_snf(matrix_path);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return error;
  }
  return error;
}
