#include "gaplab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gaplab {

double inner(const std::vector<double>& f, const std::vector<double>& g,
             const Graph& graph) {
  if (f.size() != static_cast<size_t>(graph.n) || g.size() != f.size())
    throw std::invalid_argument("function dimension mismatch");
  double s = 0.0;
  for (int u = 0; u < graph.n; ++u) s += f[u] * g[u] * graph.deg[u];
  return s;
}

std::vector<double> apply_normalized_adjacency(const Graph& g,
                                               const std::vector<double>& f) {
  if (f.size() != static_cast<size_t>(g.n))
    throw std::invalid_argument("function dimension mismatch");
  std::vector<double> out(g.n, 0.0);
  for (int u = 0; u < g.n; ++u) {
    double s = 0.0;
    for (int v : g.adj[u]) s += f[v];
    out[u] = s / g.deg[u];
  }
  return out;
}

std::vector<std::vector<int>> cluster_eigenvalues(
    const std::vector<double>& values, double tol) {
  std::vector<std::vector<int>> clusters;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] - values[i - 1] < tol)
      clusters.back().push_back(static_cast<int>(i));
    else
      clusters.push_back({static_cast<int>(i)});
  }
  return clusters;
}

namespace {

double off_diagonal_norm(const std::vector<std::vector<double>>& a) {
  int n = static_cast<int>(a.size());
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) s += 2.0 * a[p][q] * a[p][q];
  return std::sqrt(s);
}

// One Jacobi rotation zeroing a[p][q], accumulating into v.
void rotate(std::vector<std::vector<double>>& a,
            std::vector<std::vector<double>>& v, int p, int q) {
  int n = static_cast<int>(a.size());
  double apq = a[p][q];
  if (apq == 0.0) return;
  double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
  double t = (theta >= 0.0 ? 1.0 : -1.0) /
             (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  double c = 1.0 / std::sqrt(t * t + 1.0);
  double s = t * c;
  double tau = s / (1.0 + c);

  a[p][p] -= t * apq;
  a[q][q] += t * apq;
  a[p][q] = a[q][p] = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    double akp = a[k][p], akq = a[k][q];
    a[k][p] = a[p][k] = akp - s * (akq + tau * akp);
    a[k][q] = a[q][k] = akq + s * (akp - tau * akq);
  }
  for (int k = 0; k < n; ++k) {
    double vkp = v[k][p], vkq = v[k][q];
    v[k][p] = vkp - s * (vkq + tau * vkp);
    v[k][q] = vkq + s * (vkp - tau * vkq);
  }
}

}  // namespace

Spectrum normalized_spectrum(const Graph& g, int max_sweeps,
                             double cluster_tol) {
  int n = g.n;
  for (int u = 0; u < n; ++u)
    if (g.deg[u] == 0)
      throw std::invalid_argument("isolated vertex " + std::to_string(u) +
                                  ": D is singular");

  // symmetric conjugate N = D^-1/2 A D^-1/2
  std::vector<double> inv_sqrt_deg(n);
  for (int u = 0; u < n; ++u) inv_sqrt_deg[u] = 1.0 / std::sqrt(double(g.deg[u]));
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (auto [u, v] : g.edges)
    a[u][v] = a[v][u] = inv_sqrt_deg[u] * inv_sqrt_deg[v];

  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) v[k][k] = 1.0;

  const double threshold = 1e-12 * n;
  bool converged = (n == 1) || off_diagonal_norm(a) < threshold;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_norm(a) < threshold;
  }
  if (!converged)
    throw std::runtime_error("Jacobi eigensolver did not converge within " +
                             std::to_string(max_sweeps) + " sweeps");

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return a[i][i] < a[j][j]; });

  Spectrum s;
  s.cluster_tol = cluster_tol;
  s.values.resize(n);
  s.functions.assign(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    s.values[i] = a[idx[i]][idx[i]];
    // f = D^-1/2 * eigenvector: degree-weighted norm of f equals the
    // Euclidean norm of the eigenvector
    auto& f = s.functions[i];
    for (int u = 0; u < n; ++u) f[u] = v[u][idx[i]] * inv_sqrt_deg[u];
    // deterministic sign: entry of largest magnitude is positive
    int arg = 0;
    for (int u = 1; u < n; ++u)
      if (std::abs(f[u]) > std::abs(f[arg])) arg = u;
    if (f[arg] < 0.0)
      for (double& x : f) x = -x;
  }

  s.clusters = cluster_eigenvalues(s.values, cluster_tol);

  s.residual = 0.0;
  for (int i = 0; i < n; ++i) {
    auto af = apply_normalized_adjacency(g, s.functions[i]);
    for (int u = 0; u < n; ++u)
      s.residual = std::max(s.residual,
                            std::abs(af[u] - s.values[i] * s.functions[i][u]));
  }
  return s;
}

BottomPair eigenspace_pair(const Spectrum& s) {
  if (s.values.size() < 2)
    throw std::invalid_argument("need at least two eigenvalues");
  return BottomPair{s.functions[0], s.functions[1], s.values[0], s.values[1]};
}

}  // namespace gaplab
