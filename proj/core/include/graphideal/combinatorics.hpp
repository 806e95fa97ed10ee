#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graphideal/graph.hpp"

namespace graphideal {

// ---- joins ----

struct JoinCheckResult {
  bool is_join = false;
  std::optional<Cycle> violating_cycle;  // first violator in enumeration order
};

/// J is a join when |J ∩ E_C| <= |E_C|/2 for every simple cycle C.
JoinCheckResult is_join(const Graph& g, const std::vector<Edge>& join_edges,
                        std::size_t cycle_cap = 1000000);

struct JoinCertificate {
  std::vector<Edge> edges;
  /// (|J ∩ E_C|, |E_C|) per cycle, in cycle enumeration order.
  std::vector<std::pair<int, int>> cycle_checks;
};

struct MaxJoinResult {
  int mu = 0;
  JoinCertificate witness;
};

/// Exact maximum join size by branch and bound over the canonical edge
/// sequence. ResourceLimitError past `edge_cap` edges.
MaxJoinResult max_join(const Graph& g, int edge_cap = 22,
                       std::size_t cycle_cap = 1000000);

// ---- ear decompositions ----

/// One ear: a path given by its vertex sequence. Closed when the endpoints
/// coincide (always the case for the first ear, which is a cycle through the
/// base vertex).
struct EarPath {
  std::vector<Vertex> vertices;

  bool closed() const { return vertices.size() >= 2 && vertices.front() == vertices.back(); }
  int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
  std::vector<Edge> edge_list() const;
};

struct EarDecomposition {
  Vertex base = 0;
  std::vector<EarPath> ears;  // ears[0] is P_1
};

struct EarVerification {
  bool valid = false;
  std::vector<std::string> diagnostics;
};

/// Checks the partition of the edge set, endpoint anchoring in earlier
/// pieces, and freshness/distinctness of inner vertices.
EarVerification verify_ear_decomposition(const Graph& g, const EarDecomposition& d);

int even_ear_count(const EarDecomposition& d);

/// Host assignment for one ear: host 0 is the base vertex, host i >= 1 is the
/// i-th ear; the interval is the host subpath spanned by the ear's endpoints.
struct NestAssignment {
  int host = 0;
  std::vector<Edge> interval;
};

struct NestingResult {
  bool nested = false;
  std::vector<NestAssignment> assignment;  // aligned with ears when nested
};

/// A decomposition is nested when every ear's endpoints lie on a single
/// earlier piece and, per host, the spanned intervals are pairwise disjoint
/// or contained in one another. Searches over host and interval choices (both
/// arcs of a closed host are admissible intervals).
NestingResult is_nested(const Graph& g, const EarDecomposition& d);

/// First ear decomposition found by the canonical search.
/// PreconditionError unless g is 2-connected.
EarDecomposition find_ear_decomposition(const Graph& g, std::size_t node_cap = 5000000);

/// Minimum number of even ears over all ear decompositions, by exhaustive
/// search with memoization on the used-edge set. PreconditionError unless g
/// is 2-connected; ResourceLimitError past the node budget.
int min_even_ears(const Graph& g, std::size_t node_cap = 5000000);

struct FrankCheckResult {
  bool holds = false;
  int mu = 0;
  int phi = 0;
};

/// Tests 2*mu = phi + |V| - 1. PreconditionError unless g is 2-connected.
FrankCheckResult frank_check(const Graph& g);

struct NestedSearchResult {
  EarDecomposition decomposition;
  std::vector<NestAssignment> assignment;
  int epsilon = 0;  // even ears of the found decomposition
};

/// First nested ear decomposition, or nullopt after an exhaustive search.
/// PreconditionError unless g is 2-connected.
std::optional<NestedSearchResult> search_nested_decomposition(
    const Graph& g, std::size_t node_cap = 5000000);

}  // namespace graphideal
