#pragma once

#include <string>
#include <vector>

#include "gaplab/graph.hpp"

namespace gaplab {

// Finite group as a multiplication table over element indices 0..order-1.
// The identity sits at index 0 by file-format convention.
struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[i][j] = i*j
  bool order_is_odd = false;
  bool asserted_simple = false;
  // Associativity is checked exhaustively only for order <= 64; larger
  // tables are sampled and this flag records the weaker guarantee.
  bool associativity_sampled = false;

  int mul(int a, int b) const { return table[a][b]; }
  int inverse(int a) const;
};

// Validates a table: identity row/column, Latin square, two-sided inverses,
// associativity. Throws std::invalid_argument on violation.
GroupTable validate_group(std::vector<std::vector<int>> table);

// Table document: first line |G|, then |G| rows of |G| indices.
GroupTable parse_group(const std::string& text);

// Z_n with table[i][j] = (i+j) mod n; used for corpus circulants.
GroupTable make_cyclic_group(int n);

struct GeneratingSet {
  std::vector<int> elements;
};

// Requires identity-free, inverse-closed (undirected Cayley graph) and
// generating (closure BFS reaches every element). Throws on violation.
void validate_generating_set(const GroupTable& g, const GeneratingSet& s);

// Graph on |G| vertices with edges {x, x*s} for s in S. |S|-regular,
// connected, vertex-transitive by construction.
Graph cayley_graph(const GroupTable& g, const GeneratingSet& s);

// Hypothesis gate for the simple-group/odd-order corollary: simplicity is
// user-declared metadata, never computed.
bool corollary16_applicable(const GroupTable& g);

}  // namespace gaplab
