#include "gaplab/expansion.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace gaplab {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den <= 0) throw std::invalid_argument("rational needs positive denominator");
  long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool Rational::operator<(const Rational& o) const {
  return num * o.den < o.num * den;
}

Rational Cut::expansion() const {
  return Rational(boundary_size, std::min(vol_s, vol_complement));
}

Rational VertexCut::expansion() const {
  return Rational(out_boundary_size, static_cast<long long>(members.size()));
}

namespace {

std::vector<int> mask_members(unsigned mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask & (1u << v)) out.push_back(v);
  return out;
}

}  // namespace

ExpansionProfile cheeger_constant(const Graph& g, int max_n) {
  if (g.n < 2) throw std::invalid_argument("cheeger constant needs n >= 2");
  if (g.n > max_n)
    throw std::invalid_argument("n = " + std::to_string(g.n) +
                                " exceeds enumeration limit " +
                                std::to_string(max_n));
  const long long vol_total = g.volume();
  if (vol_total == 0)
    throw std::invalid_argument("graph has no edges; expansion undefined");

  // vertex 0 is always in S; Gray code walks subsets of vertices 1..n-1
  unsigned in_s = 1u;
  long long boundary = g.deg[0];
  long long vol_s = g.deg[0];

  auto flip = [&](int v) {
    unsigned bit = 1u << v;
    long long inside = 0;
    for (int w : g.adj[v])
      if (in_s & (1u << w)) ++inside;
    long long outside = g.deg[v] - inside;
    if (in_s & bit) {  // v leaves S
      in_s &= ~bit;
      vol_s -= g.deg[v];
      boundary += inside - outside;
    } else {  // v enters S
      in_s |= bit;
      vol_s += g.deg[v];
      boundary += outside - inside;
    }
  };

  bool have_best = false;
  Rational best;
  unsigned best_mask = 0;
  long long best_boundary = 0, best_vol = 0;
  auto consider = [&]() {
    long long vol_c = vol_total - vol_s;
    if (vol_c == 0) return;  // S = V, not a proper subset
    Rational r(boundary, std::min(vol_s, vol_c));
    if (!have_best || r < best) {
      have_best = true;
      best = r;
      best_mask = in_s;
      best_boundary = boundary;
      best_vol = vol_s;
    }
  };

  consider();  // S = {0}
  const unsigned long long count = 1ull << (g.n - 1);
  for (unsigned long long i = 1; i < count; ++i) {
    flip(std::countr_zero(i) + 1);
    consider();
  }

  ExpansionProfile p;
  p.h = best;
  p.witness.members = mask_members(best_mask, g.n);
  p.witness.boundary_size = best_boundary;
  p.witness.vol_s = best_vol;
  p.witness.vol_complement = vol_total - best_vol;
  p.exact = true;
  return p;
}

VertexCut vertex_expansion(const Graph& g, int max_n) {
  if (g.n < 2) throw std::invalid_argument("vertex expansion needs n >= 2");
  if (g.n > max_n)
    throw std::invalid_argument("n = " + std::to_string(g.n) +
                                " exceeds enumeration limit " +
                                std::to_string(max_n));

  unsigned in_s = 0;
  int size = 0;
  long long out_boundary = 0;
  std::vector<int> cnt(g.n, 0);  // neighbors of v inside S

  auto flip = [&](int v) {
    unsigned bit = 1u << v;
    if (in_s & bit) {  // v leaves S
      in_s &= ~bit;
      --size;
      for (int w : g.adj[v]) {
        --cnt[w];
        if (!(in_s & (1u << w)) && cnt[w] == 0) --out_boundary;
      }
      if (cnt[v] > 0) ++out_boundary;
    } else {  // v enters S
      in_s |= bit;
      ++size;
      if (cnt[v] > 0) --out_boundary;
      for (int w : g.adj[v]) {
        ++cnt[w];
        if (!(in_s & (1u << w)) && cnt[w] == 1) ++out_boundary;
      }
    }
  };

  bool have_best = false;
  Rational best;
  unsigned best_mask = 0;
  long long best_out = 0;
  auto consider = [&]() {
    if (size == 0 || 2 * size > g.n) return;
    Rational r(out_boundary, size);
    if (!have_best || r < best) {
      have_best = true;
      best = r;
      best_mask = in_s;
      best_out = out_boundary;
    }
  };

  const unsigned long long count = 1ull << g.n;
  for (unsigned long long i = 1; i < count; ++i) {
    flip(std::countr_zero(i));
    consider();
  }

  VertexCut cut;
  cut.members = mask_members(best_mask, g.n);
  cut.out_boundary_size = best_out;
  return cut;
}

ExpansionProfile expansion_profile(const Graph& g, int max_n) {
  ExpansionProfile p = cheeger_constant(g, max_n);
  VertexCut vc = vertex_expansion(g, max_n);
  p.h_out = vc.expansion();
  p.h_out_witness = std::move(vc);
  return p;
}

}  // namespace gaplab
