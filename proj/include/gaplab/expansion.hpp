#pragma once

#include <optional>
#include <vector>

#include "gaplab/graph.hpp"

namespace gaplab {

// Reduced fraction of nonnegative integers. Boundary sizes and volumes are
// integers, so expansion constants are exact rationals.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);  // reduces; requires d > 0

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const;
};

struct Cut {
  std::vector<int> members;  // nonempty proper subset S
  long long boundary_size = 0;
  long long vol_s = 0;
  long long vol_complement = 0;

  Rational expansion() const;  // |dS| / min(vol S, vol complement)
};

struct VertexCut {
  std::vector<int> members;        // |S| <= n/2
  long long out_boundary_size = 0; // vertices outside S adjacent to S
  Rational expansion() const;      // |d_out S| / |S|
};

struct ExpansionProfile {
  Rational h;
  Cut witness;
  std::optional<Rational> h_out;
  std::optional<VertexCut> h_out_witness;
  bool exact = true;
};

// Exact Cheeger constant by Gray-code enumeration of all subsets containing
// vertex 0 (complement symmetry halves the space); |dS| and vol(S) are
// updated in O(deg) per vertex flip. Throws when n < 2 or n > max_n.
ExpansionProfile cheeger_constant(const Graph& g, int max_n = 24);

// Exact vertex-expansion min over nonempty S, |S| <= n/2, of |d_out S|/|S|.
VertexCut vertex_expansion(const Graph& g, int max_n = 24);

// Both constants in one profile.
ExpansionProfile expansion_profile(const Graph& g, int max_n = 24);

}  // namespace gaplab
