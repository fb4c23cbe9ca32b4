#include "gaplab/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gaplab {

const char* vt_provenance_name(VtProvenance p) {
  switch (p) {
    case VtProvenance::ByConstruction: return "by-construction";
    case VtProvenance::Verified: return "verified";
    case VtProvenance::Asserted: return "asserted";
    default: return "unknown";
  }
}

const char* vt_verdict_name(VtVerdict v) {
  switch (v) {
    case VtVerdict::Verified: return "verified";
    case VtVerdict::Refuted: return "refuted";
    default: return "skipped";
  }
}

long long Graph::volume() const {
  long long v = 0;
  for (int d : deg) v += d;
  return v;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");

  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  g.deg.assign(n, 0);
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
    ++g.deg[u];
    ++g.deg[v];
  }
  return g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  long long seen = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 1 || m < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected header \"n m\"");
    } else {
      int u, v;
      if (!(ls >> u >> v))
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected edge \"u v\"");
      edges.emplace_back(u, v);
      ++seen;
    }
    std::string rest;
    if (ls >> rest)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": trailing tokens");
  }
  if (n < 0) throw std::invalid_argument("empty graph document");
  if (seen != m)
    throw std::invalid_argument("edge count mismatch: header says " +
                                std::to_string(m) + ", got " +
                                std::to_string(seen));
  return build_graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  Graph g = build_graph(n, std::move(edges));
  g.meta.connected = true;
  g.meta.bipartite = (n % 2 == 0);
  g.meta.vertex_transitive = VtProvenance::ByConstruction;
  g.meta.regular_degree = 2;
  return g;
}

Graph make_complete(int n) {
  if (n < 2) throw std::invalid_argument("complete needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  Graph g = build_graph(n, std::move(edges));
  g.meta.connected = true;
  g.meta.bipartite = (n == 2);
  g.meta.vertex_transitive = VtProvenance::ByConstruction;
  g.meta.regular_degree = n - 1;
  return g;
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs a,b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  Graph g = build_graph(a + b, std::move(edges));
  g.meta.connected = true;
  g.meta.bipartite = true;
  if (a == b) g.meta.regular_degree = a;
  return g;
}

Graph make_hypercube(int k) {
  if (k < 1 || k > 20) throw std::invalid_argument("hypercube needs 1 <= k <= 20");
  int n = 1 << k;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < k; ++b)
      if (!(u & (1 << b))) edges.emplace_back(u, u | (1 << b));
  Graph g = build_graph(n, std::move(edges));
  g.meta.connected = true;
  g.meta.bipartite = true;
  g.meta.vertex_transitive = VtProvenance::ByConstruction;
  g.meta.regular_degree = k;
  return g;
}

Graph make_petersen() {
  // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  Graph g = build_graph(10, std::move(edges));
  g.meta.connected = true;
  g.meta.bipartite = false;
  g.meta.vertex_transitive = VtProvenance::ByConstruction;
  g.meta.regular_degree = 3;
  return g;
}

}  // namespace

Graph make_family(const std::string& name, const std::vector<int>& params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family " + name + " expects " +
                                  std::to_string(k) + " parameter(s)");
  };
  if (name == "cycle") { want(1); return make_cycle(params[0]); }
  if (name == "complete") { want(1); return make_complete(params[0]); }
  if (name == "complete_bipartite") {
    want(2);
    return make_complete_bipartite(params[0], params[1]);
  }
  if (name == "hypercube") { want(1); return make_hypercube(params[0]); }
  if (name == "petersen") { want(0); return make_petersen(); }
  throw std::invalid_argument("unknown family: " + name);
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(g.n, -1);
  std::queue<int> q;
  for (int s = 0; s < g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == g.n;
}

namespace {

// Backtracking search for an automorphism with image[order[0]] = target.
// Vertices are assigned in BFS order from 0 so each new vertex has an
// already-assigned neighbor to constrain it.
struct AutomorphismSearch {
  const Graph& g;
  std::vector<std::vector<int>> neighbor_deg;  // sorted per vertex
  std::vector<int> order;

  explicit AutomorphismSearch(const Graph& graph) : g(graph) {
    neighbor_deg.resize(g.n);
    for (int u = 0; u < g.n; ++u) {
      for (int v : g.adj[u]) neighbor_deg[u].push_back(g.deg[v]);
      std::sort(neighbor_deg[u].begin(), neighbor_deg[u].end());
    }
    std::vector<char> seen(g.n, 0);
    for (int root = 0; root < g.n; ++root) {
      if (seen[root]) continue;
      std::queue<int> q;
      seen[root] = 1;
      q.push(root);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int v : g.adj[u])
          if (!seen[v]) {
            seen[v] = 1;
            q.push(v);
          }
      }
    }
  }

  bool compatible(int u, int w) const {
    return g.deg[u] == g.deg[w] && neighbor_deg[u] == neighbor_deg[w];
  }

  bool extend(std::vector<int>& image, std::vector<char>& used, size_t pos) const {
    if (pos == order.size()) return true;
    int u = order[pos];
    for (int w = 0; w < g.n; ++w) {
      if (used[w] || !compatible(u, w)) continue;
      bool ok = true;
      for (size_t k = 0; k < pos && ok; ++k) {
        int prev = order[k];
        if (g.adjacent(u, prev) != g.adjacent(w, image[prev])) ok = false;
      }
      if (!ok) continue;
      image[u] = w;
      used[w] = 1;
      if (extend(image, used, pos + 1)) return true;
      used[w] = 0;
      image[u] = -1;
    }
    return false;
  }

  bool maps_zero_to(int target) const {
    std::vector<int> image(g.n, -1);
    std::vector<char> used(g.n, 0);
    image[order[0]] = target;
    used[target] = 1;
    return extend(image, used, 1);
  }
};

}  // namespace

VtVerdict verify_vertex_transitive(const Graph& g, int limit) {
  // vertex-transitive implies regular
  for (int v = 1; v < g.n; ++v)
    if (g.deg[v] != g.deg[0]) return VtVerdict::Refuted;
  if (g.n > limit) {
    return g.meta.vertex_transitive == VtProvenance::ByConstruction
               ? VtVerdict::Verified
               : VtVerdict::Skipped;
  }
  AutomorphismSearch search(g);
  for (int v = 1; v < g.n; ++v)
    if (!search.maps_zero_to(v)) return VtVerdict::Refuted;
  return VtVerdict::Verified;
}

}  // namespace gaplab
