#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphideal/errors.hpp"
#include "graphideal/graph.hpp"
#include "graphideal/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw graphideal::ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int parse_number(std::string_view s, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw graphideal::ParseError("bad " + what + " '" + std::string(s) + "'");
  return value;
}

// "t1_2>t2_3>..." as listed greatest-first.
std::vector<graphideal::Edge> parse_t_order(const std::string& text) {
  std::vector<graphideal::Edge> edges;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '>')) {
    std::string_view sv(tok);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front())))
      sv.remove_prefix(1);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back())))
      sv.remove_suffix(1);
    if (sv.empty() || sv.front() != 't')
      throw graphideal::ParseError("edge order entries look like t<i>_<j>, got '" +
                                   tok + "'");
    sv.remove_prefix(1);
    auto und = sv.find('_');
    if (und == std::string_view::npos)
      throw graphideal::ParseError("edge order entries look like t<i>_<j>, got '" +
                                   tok + "'");
    edges.emplace_back(parse_number(sv.substr(0, und), "vertex"),
                       parse_number(sv.substr(und + 1), "vertex"));
  }
  if (edges.empty()) throw graphideal::ParseError("empty edge order");
  return edges;
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> primes;
  if (text.empty()) return primes;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    primes.push_back(static_cast<std::uint32_t>(parse_number(tok, "prime")));
  return primes;
}

void emit(const std::string& payload, const std::string& json_path) {
  if (json_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(json_path);
  if (!out) throw graphideal::ParseError("cannot write " + json_path);
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of graph-associated binomial ideals"};
  app.require_subcommand(1);

  std::string graph_path, json_path, t_order_text, primes_text = "5,7", dir;
  std::uint32_t field = 3;
  std::size_t cap_pairs = 1000000, cap_cycles = 1000000;
  int corpus_count = 50, corpus_max_edges = 8;
  std::uint64_t seed = 1;
  bool want_nested = false, want_phi = false;

  app.add_option("--field", field, "prime field characteristic")->capture_default_str();
  app.add_option("--primes", primes_text,
                 "extra primes for the field-independence check")
      ->capture_default_str();
  app.add_option("--t-order", t_order_text,
                 "edge variable precedence, e.g. \"t1_2>t2_3>t1_3\"");
  app.add_option("--json", json_path, "write the report here instead of stdout");
  app.add_option("--cap-pairs", cap_pairs, "s-pair queue limit")->capture_default_str();
  app.add_option("--cap-cycles", cap_cycles, "cycle enumeration limit")
      ->capture_default_str();

  auto with_file = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("file", graph_path, "graph file (JSON or edge list)")
        ->required();
    return sub;
  };
  CLI::App* cmd_invariants =
      with_file(app.add_subcommand("invariants", "full invariant report"));
  CLI::App* cmd_ideal =
      with_file(app.add_subcommand("ideal", "reduced basis of the graph ideal"));
  CLI::App* cmd_mu =
      with_file(app.add_subcommand("mu", "maximum join size and witness"));
  CLI::App* cmd_ears =
      with_file(app.add_subcommand("ears", "ear decomposition report"));
  cmd_ears->add_flag("--nested", want_nested, "search for a nested decomposition");
  cmd_ears->add_flag("--phi", want_phi, "include the minimum even-ear count");
  CLI::App* cmd_check =
      with_file(app.add_subcommand("check", "evaluate the theorem battery"));
  CLI::App* cmd_corpus =
      app.add_subcommand("corpus", "batch checks over generated or stored graphs");
  cmd_corpus->fallthrough();
  cmd_corpus->add_option("--random", corpus_count, "number of generated graphs")
      ->capture_default_str();
  cmd_corpus->add_option("--max-edges", corpus_max_edges, "edge budget per graph")
      ->capture_default_str();
  cmd_corpus->add_option("--seed", seed, "generator seed")->capture_default_str();
  cmd_corpus->add_option("--dir", dir, "check every graph file in this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // keep usage mistakes on the same exit code as other input errors
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    graphideal::RunConfig cfg;
    cfg.p = field;
    cfg.extra_primes = parse_primes(primes_text);
    if (!t_order_text.empty()) cfg.t_precedence = parse_t_order(t_order_text);
    cfg.cap_pairs = cap_pairs;
    cfg.cap_cycles = cap_cycles;
    cfg.corpus_count = corpus_count;
    cfg.corpus_max_edges = corpus_max_edges;
    cfg.seed = seed;

    if (cmd_corpus->parsed()) {
      std::optional<std::string> dir_opt;
      if (!dir.empty()) dir_opt = dir;
      graphideal::CorpusOutcome outcome = graphideal::corpus_run(cfg, dir_opt);
      emit(outcome.json, json_path);
      if (outcome.any_fail) return 1;
      if (outcome.any_resource_limit) return 3;
      return 0;
    }

    graphideal::Graph g = graphideal::parse_graph(slurp(graph_path));
    if (cmd_invariants->parsed()) {
      emit(graphideal::invariant_report_json(g, cfg), json_path);
    } else if (cmd_ideal->parsed()) {
      emit(graphideal::gb_report_json(g, cfg), json_path);
    } else if (cmd_mu->parsed()) {
      emit(graphideal::mu_report_json(g, cfg), json_path);
    } else if (cmd_ears->parsed()) {
      emit(graphideal::ears_report_json(g, want_nested, want_phi, cfg), json_path);
    } else if (cmd_check->parsed()) {
      std::vector<graphideal::Verdict> verdicts = graphideal::check_graph(g, cfg);
      emit(graphideal::verdicts_to_json(g, verdicts), json_path);
      if (!graphideal::all_pass_or_skip(verdicts)) return 1;
    }
    return 0;
  } catch (const graphideal::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const graphideal::InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << '\n';
    return 1;
  } catch (const graphideal::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
