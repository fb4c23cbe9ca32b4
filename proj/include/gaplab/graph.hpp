#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gaplab {

// Provenance of the vertex-transitivity flag. Automorphism search is
// exponential, so a graph may carry the flag by construction (Cayley graphs,
// named families), from an explicit search, or as a user assertion.
enum class VtProvenance { Unknown, ByConstruction, Verified, Asserted };

const char* vt_provenance_name(VtProvenance p);

struct GraphMeta {
  std::optional<bool> connected;
  std::optional<bool> bipartite;
  VtProvenance vertex_transitive = VtProvenance::Unknown;
  std::optional<int> regular_degree;
};

// Finite simple undirected graph on vertices 0..n-1. Edges are kept both as
// a sorted pair list (u < v) and as per-vertex adjacency lists.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;
  std::vector<int> deg;
  GraphMeta meta;

  long long volume() const;  // sum of degrees = 2|E|
  bool adjacent(int u, int v) const;
};

// Validates and normalizes an edge list: vertices in range, no self-loops,
// no duplicates. Throws std::invalid_argument on violation.
Graph build_graph(int n, std::vector<std::pair<int, int>> edges);

// Edge-list text format: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' are ignored. Duplicate edges and self-loops are
// errors, not deduplicated.
Graph parse_graph(const std::string& text);

// Named families: cycle n, complete n, complete_bipartite a b, hypercube k,
// petersen. Metadata flags are set by construction.
Graph make_family(const std::string& name, const std::vector<int>& params);

std::string to_edge_list(const Graph& g);

// Proper 2-coloring (0/1 per vertex) if one exists, component by component.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

enum class VtVerdict { Verified, Refuted, Skipped };

const char* vt_verdict_name(VtVerdict v);

// Decides vertex-transitivity by backtracking automorphism search: for each
// target v, look for an automorphism mapping vertex 0 to v, pruning on degree
// and neighbor-degree multisets. Non-constant degree refutes immediately.
// Graphs larger than `limit` are Skipped unless flagged by construction.
VtVerdict verify_vertex_transitive(const Graph& g, int limit = 16);

}  // namespace gaplab
