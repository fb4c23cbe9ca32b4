#pragma once

#include <vector>

#include "gaplab/graph.hpp"

namespace gaplab {

// Full eigendecomposition of the normalized adjacency matrix D^-1 A,
// computed through its symmetric conjugate D^-1/2 A D^-1/2.
//
// values are ascending: values[0] = mu_n, values.back() = mu_1 = 1.
// functions[i] is the eigenfunction of values[i], normalized in the
// degree-weighted inner product; the family is degree-weighted orthonormal.
struct Spectrum {
  std::vector<double> values;
  std::vector<std::vector<double>> functions;
  std::vector<std::vector<int>> clusters;  // maximal gap-free runs, ascending
  double cluster_tol = 1e-8;
  double residual = 0.0;  // max_i ||D^-1 A f_i - mu_i f_i||_inf

  double mu1() const { return values.back(); }
  double mu2() const { return values[values.size() - 2]; }
  double mu_n() const { return values.front(); }
  double mu_n_minus_1() const { return values[values.size() >= 2 ? 1 : 0]; }

  bool is_simple(int cluster_index) const {
    return clusters[cluster_index].size() == 1;
  }
};

// Cyclic Jacobi rotations on D^-1/2 A D^-1/2; converged when the
// off-diagonal Frobenius norm drops below 1e-12 * n. Throws on isolated
// vertices and on non-convergence within the sweep budget.
Spectrum normalized_spectrum(const Graph& g, int max_sweeps = 100,
                             double cluster_tol = 1e-8);

// Degree-weighted inner product sum_u f(u) g(u) d_u.
double inner(const std::vector<double>& f, const std::vector<double>& g,
             const Graph& graph);

// Partition of ascending values into maximal runs with consecutive gaps
// below tol. An eigenvalue is simple iff its run has size 1.
std::vector<std::vector<int>> cluster_eigenvalues(
    const std::vector<double>& ascending_values, double tol);

struct BottomPair {
  std::vector<double> f;  // eigenfunction of mu_n
  std::vector<double> g;  // eigenfunction of mu_{n-1}
  double mu_n;
  double mu_n_minus_1;
};

// The two eigenfunctions attached to the two smallest eigenvalue slots;
// degree-weighted orthonormal even inside a degenerate eigenspace.
BottomPair eigenspace_pair(const Spectrum& s);

// Applies D^-1 A to a vertex function.
std::vector<double> apply_normalized_adjacency(const Graph& g,
                                               const std::vector<double>& f);

}  // namespace gaplab
