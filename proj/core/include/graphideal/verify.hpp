#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphideal/graph.hpp"

namespace graphideal {

struct RunConfig {
  std::uint32_t p = 3;
  std::vector<std::uint32_t> extra_primes{5, 7};  // field-independence sweep
  std::optional<std::vector<Edge>> t_precedence;
  std::size_t cap_pairs = 1000000;
  std::size_t cap_cycles = 1000000;
  int corpus_count = 50;
  int corpus_max_edges = 8;
  std::uint64_t seed = 1;
};

enum class VerdictStatus { pass, fail, skipped };

const char* to_string(VerdictStatus s);

struct Verdict {
  std::string theorem_id;
  VerdictStatus status = VerdictStatus::skipped;
  std::string details_json;  // serialized object with the checked values
};

/// Full invariant report as pretty-printed JSON with a stable key order:
/// {graph:{v,e,b0,bipartite}, p, degree, hf, reg, regArtinian, mu, phi,
///  epsilon, verdicts:{...}}. Ends with a newline; byte-identical for
/// identical inputs and configuration.
std::string invariant_report_json(const Graph& g, const RunConfig& cfg);

/// The eight theorem checks: lowerBound, upperBound, bipartiteEquality,
/// degreeFormula, fieldIndependence, frankIdentity, blockAdditivity,
/// nestedEarFormula. Conditional ones report skipped when out of scope.
std::vector<Verdict> check_graph(const Graph& g, const RunConfig& cfg);

std::string verdicts_to_json(const Graph& g, const std::vector<Verdict>& verdicts);
bool all_pass_or_skip(const std::vector<Verdict>& verdicts);

/// Reports for the remaining CLI commands (all newline-terminated JSON).
std::string gb_report_json(const Graph& g, const RunConfig& cfg);
std::string mu_report_json(const Graph& g, const RunConfig& cfg);
std::string ears_report_json(const Graph& g, bool nested, bool phi,
                             const RunConfig& cfg);

/// Seeded random simple graphs with at most max_edges edges, no isolated
/// vertices, roughly half bipartite. Deterministic in the seed.
std::vector<Graph> generate_corpus(int count, int max_edges, std::uint64_t seed);

struct CorpusOutcome {
  std::string json;
  bool any_fail = false;
  bool any_resource_limit = false;
};

/// Run check_graph over a generated corpus or over every graph file in a
/// directory (when `dir` is set), aggregating per-graph outcomes.
CorpusOutcome corpus_run(const RunConfig& cfg, const std::optional<std::string>& dir);

}  // namespace graphideal
