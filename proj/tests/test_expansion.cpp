#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "gaplab/checks.hpp"
#include "gaplab/expansion.hpp"
#include "gaplab/spectrum.hpp"

using namespace gaplab;

namespace {

// Independent oracle: rescan every subset containing vertex 0 from scratch.
Rational naive_cheeger(const Graph& g) {
  long long vol_total = g.volume();
  bool have = false;
  Rational best;
  for (unsigned mask = 1; mask < (1u << g.n); mask += 2) {  // bit 0 always set
    long long vol_s = 0, boundary = 0;
    for (int v = 0; v < g.n; ++v)
      if (mask & (1u << v)) vol_s += g.deg[v];
    if (vol_s == vol_total) continue;  // S = V
    for (auto [u, v] : g.edges) {
      bool iu = mask & (1u << u), iv = mask & (1u << v);
      if (iu != iv) ++boundary;
    }
    Rational r(boundary, std::min(vol_s, vol_total - vol_s));
    if (!have || r < best) {
      have = true;
      best = r;
    }
  }
  return best;
}

Rational naive_vertex_expansion(const Graph& g) {
  bool have = false;
  Rational best;
  for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size == 0 || 2 * size > g.n) continue;
    long long out = 0;
    for (int v = 0; v < g.n; ++v) {
      if (mask & (1u << v)) continue;
      for (int w : g.adj[v])
        if (mask & (1u << w)) {
          ++out;
          break;
        }
    }
    Rational r(out, size);
    if (!have || r < best) {
      have = true;
      best = r;
    }
  }
  return best;
}

std::vector<Graph> oracle_corpus() {
  std::vector<Graph> corpus;
  for (int n = 3; n <= 9; ++n) corpus.push_back(make_family("cycle", {n}));
  for (int n = 3; n <= 6; ++n) corpus.push_back(make_family("complete", {n}));
  corpus.push_back(make_family("complete_bipartite", {2, 3}));
  corpus.push_back(make_family("hypercube", {3}));
  corpus.push_back(make_family("petersen", {}));
  corpus.push_back(build_graph(4, {{0, 1}, {2, 3}}));  // disconnected
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> pick_n(4, 10);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int made = 0;
  while (made < 20) {
    int n = pick_n(rng);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < 0.45) edges.emplace_back(u, v);
    Graph g = build_graph(n, std::move(edges));
    if (g.edges.empty()) continue;
    bool isolated = false;
    for (int d : g.deg) isolated |= (d == 0);
    if (isolated) continue;
    corpus.push_back(std::move(g));
    ++made;
  }
  return corpus;
}

}  // namespace

TEST_CASE("gray-code enumerator matches the naive oracle exactly") {
  for (const auto& g : oracle_corpus()) {
    ExpansionProfile p = cheeger_constant(g);
    CHECK(p.h == naive_cheeger(g));
    // witness achieves the reported value exactly
    CHECK(p.witness.expansion() == p.h);
    CHECK(p.witness.boundary_size >= 0);
    CHECK(p.witness.vol_s + p.witness.vol_complement == g.volume());
  }
}

TEST_CASE("vertex expansion matches the naive oracle exactly") {
  for (const auto& g : oracle_corpus()) {
    VertexCut cut = vertex_expansion(g);
    CHECK(cut.expansion() == naive_vertex_expansion(g));
  }
}

TEST_CASE("known expansion values") {
  CHECK(cheeger_constant(make_family("complete", {3})).h == Rational(1, 1));
  CHECK(cheeger_constant(make_family("cycle", {5})).h == Rational(1, 2));
  CHECK(cheeger_constant(make_family("complete", {4})).h == Rational(2, 3));
  CHECK(cheeger_constant(make_family("petersen", {})).h == Rational(1, 3));

  CHECK(vertex_expansion(make_family("cycle", {5})).expansion() == Rational(1, 1));
  CHECK(vertex_expansion(make_family("complete", {4})).expansion() == Rational(1, 1));
  Graph disconnected = build_graph(4, {{0, 1}, {2, 3}});
  CHECK(vertex_expansion(disconnected).expansion() == Rational(0, 1));
  CHECK(cheeger_constant(disconnected).h == Rational(0, 1));
}

TEST_CASE("h lies in [0,1] and vanishes exactly on disconnected graphs") {
  for (const auto& g : oracle_corpus()) {
    ExpansionProfile p = cheeger_constant(g);
    CHECK(p.h.num >= 0);
    CHECK(p.h.num <= p.h.den);
    CHECK((p.h.num == 0) == !is_connected(g));
  }
}

TEST_CASE("enumeration limit is enforced") {
  Graph big = make_family("cycle", {30});
  CHECK_THROWS_AS(cheeger_constant(big, 24), std::invalid_argument);
  CHECK_THROWS_AS(vertex_expansion(big, 24), std::invalid_argument);
  CHECK(cheeger_constant(make_family("cycle", {18}), 18).h == Rational(2, 18 * 2 / 2));
}

TEST_CASE("regular sandwich on connected regular graphs") {
  for (const auto& g : {make_family("cycle", {5}), make_family("complete", {4}),
                        make_family("petersen", {}), make_family("hypercube", {3})}) {
    ExpansionProfile p = expansion_profile(g);
    auto [lo, hi] = regular_sandwich_check(p, *g.meta.regular_degree);
    CHECK(lo.holds);
    CHECK(hi.holds);
  }
}

TEST_CASE("proposition4 on hand-evaluated inputs") {
  Graph tri = make_family("complete", {3});
  // f = (1,-1,0): numerator |1-(-1)|+|1-0|+|-1-0| = 4; denominator 2+2+0 = 4
  Verdict v = proposition4_check(tri, {1.0, -1.0, 0.0}, 1.0);
  CHECK(v.holds);
  CHECK(v.lhs == doctest::Approx(1.0));
  CHECK(v.rhs == doctest::Approx(0.5));

  Graph c5 = make_family("cycle", {5});
  Spectrum s = normalized_spectrum(c5);
  // second eigenfunction is degree-orthogonal to the constant, hence mean-zero
  Verdict w = proposition4_check(c5, s.functions[3], 0.5);
  CHECK(w.holds);
  CHECK(w.lhs >= 0.25 - 1e-12);

  CHECK_THROWS_AS(proposition4_check(tri, {0.0, 0.0, 0.0}, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(proposition4_check(tri, {1.0, 1.0, 1.0}, 1.0),
                  std::invalid_argument);  // not mean-zero
}

TEST_CASE("rational arithmetic reduces") {
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(0, 5) == Rational(0, 1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
