#include "gaplab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gaplab {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double abs_sum_weighted(const std::vector<double>& f, const Graph& g) {
  double s = 0.0;
  for (int u = 0; u < g.n; ++u) s += std::abs(f[u]) * g.deg[u];
  return s;
}

std::vector<double> abs_of(const std::vector<double>& f) {
  std::vector<double> a(f.size());
  for (size_t i = 0; i < f.size(); ++i) a[i] = std::abs(f[i]);
  return a;
}

void require_connected(const ExpansionProfile& e, const char* what) {
  if (e.h.num == 0)
    throw std::invalid_argument(std::string(what) +
                                " requires a connected graph (h > 0)");
}

void require_normalized(const std::vector<double>& f, const Graph& g,
                        const char* what) {
  double norm2 = inner(f, f, g);
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(what) +
                                " requires a degree-weighted unit function");
}

}  // namespace

double proof_rate_function(double x, double y, double gap) {
  double denom = std::sqrt(1.0 - x / gap) * std::sqrt(1.0 - y / gap) -
                 std::sqrt(x / gap) * std::sqrt(y / gap);
  return (std::sqrt(x) + std::sqrt(y)) / denom;
}

double c_constant(double h, double gap) {
  if (h <= 0.0 || gap <= 0.0)
    throw std::invalid_argument("c(h, gap) needs h > 0 and gap > 0");
  double sqrt_c = gap / (kSqrt2 * h) * (std::sqrt(1.0 + h * h / gap) - 1.0);
  double c = sqrt_c * sqrt_c;
  if (gap / 2.0 - c > 1e-12) {
    double back = proof_rate_function(c, c, gap);
    if (std::abs(back - kSqrt2 / 2.0 * h) > 1e-8)
      throw std::logic_error("c(h, gap) closed form failed self-check");
  }
  return c;
}

Verdict theorem1_check(const Graph& g, const Spectrum& s,
                       const ExpansionProfile& e, double tol) {
  if (g.n < 2) throw std::invalid_argument("theorem1 needs n >= 2");
  require_connected(e, "theorem1");
  double gap = 1.0 - s.mu2();
  double rhs = c_constant(e.h.value(), gap);
  return lower_bound_verdict("theorem1", "Theorem 1 (11)",
                             1.0 + s.mu_n_minus_1(), rhs, tol);
}

std::pair<Verdict, Verdict> corollary15_check(const Spectrum& s,
                                              const ExpansionProfile& e,
                                              double tol) {
  double gap = 1.0 - s.mu2();
  double lhs = 1.0 + s.mu_n_minus_1();
  double t = std::sqrt(1.0 + gap / 4.0) - 1.0;
  Verdict a = lower_bound_verdict("corollary15-gap", "Corollary 15 (first display)",
                                  lhs, 2.0 * t * t, tol);
  double h = e.h.value();
  double coeff = (std::sqrt(3.0) - 1.0) * (std::sqrt(3.0) - 1.0) / 8.0;
  Verdict b = lower_bound_verdict("corollary15-h", "Corollary 15 (10)", lhs,
                                  coeff * h * h, tol);
  return {a, b};
}

std::pair<Verdict, Verdict> corollary26_check(const Graph& g, const Spectrum& s,
                                              const ExpansionProfile& e,
                                              double tol) {
  require_connected(e, "corollary26");
  if (!g.meta.regular_degree)
    throw std::invalid_argument("corollary26 needs a regular graph");
  if (s.mu_n() <= -1.0 + 1e-9)
    throw std::invalid_argument("corollary26 needs a non-bipartite graph");
  double d = *g.meta.regular_degree;
  double lhs = 1.0 + s.mu_n();
  double h = e.h.value();
  double gap = 1.0 - s.mu2();
  double coeff = (std::sqrt(3.0) - 1.0) * (std::sqrt(3.0) - 1.0) / 8.0;
  double t = std::sqrt(1.0 + gap / 4.0) - 1.0;
  Verdict eq22 = lower_bound_verdict("corollary26-h", "Corollary 26 (22)", lhs,
                                     std::min(2.0 / d, coeff * h * h), tol);
  Verdict eq23 = lower_bound_verdict("corollary26-gap", "Corollary 26 (23)", lhs,
                                     std::min(2.0 / d, 2.0 * t * t), tol);
  std::string dep = std::string("vertex-transitive: ") +
                    vt_provenance_name(g.meta.vertex_transitive);
  eq22.dependencies.push_back(dep);
  eq23.dependencies.push_back(dep);
  return {eq22, eq23};
}

std::vector<Verdict> quantization_check(const Graph& g, const Spectrum& s,
                                        double integrality_tol) {
  if (!g.meta.regular_degree)
    throw std::invalid_argument("quantization needs a regular graph");
  double d = *g.meta.regular_degree;
  std::vector<Verdict> out;
  for (size_t ci = 0; ci < s.clusters.size(); ++ci) {
    if (s.clusters[ci].size() != 1) continue;
    int i = s.clusters[ci][0];
    double mu = s.values[i];
    double k = d * (mu + 1.0) / 2.0;
    double nearest = std::round(k);
    Verdict v = upper_bound_verdict(
        "quantization[mu=" + std::to_string(mu) + "]",
        "Section 4 Theorem (simple eigenvalues)", std::abs(k - nearest),
        integrality_tol, 0.0);
    if (nearest < -0.5 || nearest > d + 0.5) v.holds = false;
    v.dependencies.push_back("multiplicity tol " + std::to_string(s.cluster_tol));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> corollary16_check(const Graph& g, const Spectrum& s,
                                       const ExpansionProfile& e,
                                       bool applicable, double tol) {
  require_connected(e, "corollary16");
  if (!applicable)
    return {skipped_verdict("corollary16", "Corollary 16",
                            "group neither odd-order nor asserted simple")};
  if (s.mu_n() <= -1.0 + 1e-9)
    throw std::invalid_argument("corollary16 needs mu_n > -1 (non-bipartite)");

  double lhs = 1.0 + s.mu_n();
  double h = e.h.value();
  double gap = 1.0 - s.mu2();
  double coeff = (std::sqrt(3.0) - 1.0) * (std::sqrt(3.0) - 1.0) / 8.0;
  double t = std::sqrt(1.0 + gap / 4.0) - 1.0;
  Verdict a = lower_bound_verdict("corollary16-h", "Corollary 16 (7B)", lhs,
                                  coeff * h * h, tol);
  Verdict b = lower_bound_verdict("corollary16-gap",
                                  "Corollary 16 (second display)", lhs,
                                  2.0 * t * t, tol);

  // structural claim: every cluster away from both 1 and -1 has size >= 2
  double min_nontrivial = static_cast<double>(g.n);
  bool any = false;
  for (const auto& cluster : s.clusters) {
    double mu = s.values[cluster[0]];
    if (std::abs(mu - 1.0) < s.cluster_tol || std::abs(mu + 1.0) < s.cluster_tol)
      continue;
    any = true;
    min_nontrivial = std::min(min_nontrivial, double(cluster.size()));
  }
  Verdict c = any ? lower_bound_verdict("corollary16-multiplicity",
                                        "Corollary 16 (multiplicity)",
                                        min_nontrivial, 2.0, tol)
                  : skipped_verdict("corollary16-multiplicity",
                                    "Corollary 16 (multiplicity)",
                                    "no nontrivial eigenvalues");
  c.dependencies.push_back("multiplicity tol " + std::to_string(s.cluster_tol));
  return {a, b, c};
}

Verdict lemma17_check(const Graph& graph, const std::vector<double>& f,
                      double mu, const std::vector<double>& g, double nu,
                      double tol) {
  require_normalized(f, graph, "lemma17");
  require_normalized(g, graph, "lemma17");
  double lhs = 0.0;
  for (auto [u, v] : graph.edges)
    lhs += std::abs(f[u] * g[u] - f[v] * g[v]);
  double rhs = kSqrt2 / 2.0 *
               (std::sqrt(std::max(0.0, 1.0 + mu)) +
                std::sqrt(std::max(0.0, 1.0 + nu)));
  return upper_bound_verdict("lemma17", "Lemma 17", lhs, rhs, tol);
}

std::pair<Verdict, Verdict> lemma3_check(const Graph& graph,
                                         const std::vector<double>& f,
                                         double mu, const Spectrum& s,
                                         double tol) {
  require_normalized(f, graph, "lemma3");
  double gap = 1.0 - s.mu2();
  if (gap <= 0.0)
    throw std::invalid_argument("lemma3 needs a connected graph (mu_2 < 1)");
  double inv_sqrt_vol = 1.0 / std::sqrt(double(graph.volume()));
  std::vector<double> constant(graph.n, inv_sqrt_vol);
  auto abs_f = abs_of(f);
  double proj = inner(abs_f, constant, graph);
  std::vector<double> f1(graph.n);
  for (int u = 0; u < graph.n; ++u) f1[u] = abs_f[u] - proj * inv_sqrt_vol;
  double bound = (1.0 + mu) / gap;
  Verdict a = upper_bound_verdict("lemma3-f1", "Lemma 3 (first display)",
                                  inner(f1, f1, graph), bound, tol);
  Verdict b = lower_bound_verdict("lemma3-proj", "Lemma 3 (second display)",
                                  proj * proj, 1.0 - bound, tol);
  return {a, b};
}

Verdict lemma5_check(const Graph& graph, const std::vector<double>& f,
                     double mu, const std::vector<double>& g, double nu,
                     const Spectrum& s, double tol) {
  require_normalized(f, graph, "lemma5");
  require_normalized(g, graph, "lemma5");
  double gap = 1.0 - s.mu2();
  if (gap <= 0.0)
    throw std::invalid_argument("lemma5 needs a connected graph (mu_2 < 1)");
  // round-off can push 1+mu a hair below 0 (mu ~ -1); clamp before the sqrt
  double r_mu = std::clamp((1.0 + mu) / gap, 0.0, 1.0);
  double r_nu = std::clamp((1.0 + nu) / gap, 0.0, 1.0);
  if ((1.0 + mu) / gap > 1.0 + 1e-12 || (1.0 + nu) / gap > 1.0 + 1e-12)
    return skipped_verdict("lemma5", "Lemma 5",
                           "(1+mu)/(1-mu_2) exceeds 1; bound out of regime");
  double rhs = std::sqrt(1.0 - r_mu) * std::sqrt(1.0 - r_nu) -
               std::sqrt(r_mu) * std::sqrt(r_nu);
  double lhs = inner(abs_of(f), abs_of(g), graph);
  return lower_bound_verdict("lemma5", "Lemma 5", lhs, rhs, tol);
}

Verdict proposition4_check(const Graph& graph, const std::vector<double>& f,
                           double h, double tol) {
  double weighted_abs = abs_sum_weighted(f, graph);
  if (weighted_abs == 0.0)
    throw std::invalid_argument("proposition4 needs a nonzero function");
  double mean = 0.0;
  for (int u = 0; u < graph.n; ++u) mean += f[u] * graph.deg[u];
  if (std::abs(mean) > 1e-9 * weighted_abs)
    throw std::invalid_argument("proposition4 needs a mean-zero function");
  double num = 0.0;
  for (auto [u, v] : graph.edges) num += std::abs(f[u] - f[v]);
  return lower_bound_verdict("proposition4", "Proposition 4",
                             num / weighted_abs, h / 2.0, tol);
}

std::pair<Verdict, Verdict> cheeger_inequality_check(const Spectrum& s,
                                                     const ExpansionProfile& e,
                                                     double tol) {
  double gap = 1.0 - s.mu2();
  double h = e.h.value();
  Verdict upper = lower_bound_verdict("cheeger-upper", "Cheeger inequality (18)",
                                      2.0 * h, gap, tol);
  Verdict lower = lower_bound_verdict("cheeger-lower", "Cheeger inequality (18)",
                                      gap, 0.5 * h * h, tol);
  return {upper, lower};
}

std::pair<Verdict, Verdict> regular_sandwich_check(const ExpansionProfile& e,
                                                   int d, double tol) {
  if (!e.h_out) throw std::invalid_argument("regular sandwich needs h_out");
  double h = e.h.value();
  double h_out = e.h_out->value();
  Verdict lo = lower_bound_verdict("sandwich-lower", "Section 1 (regular sandwich)",
                                   h, h_out / d, tol);
  Verdict hi = upper_bound_verdict("sandwich-upper", "Section 1 (regular sandwich)",
                                   h, h_out, tol);
  return {lo, hi};
}

Verdict proof_chain_check(const Spectrum& s, const ExpansionProfile& e,
                          double tol) {
  require_connected(e, "proof chain");
  double gap = 1.0 - s.mu2();
  double x = 1.0 + s.mu_n();
  double y = 1.0 + s.mu_n_minus_1();
  if (y >= gap / 2.0)
    return skipped_verdict("proof-chain", "Theorem 1 proof (chain)",
                           "1+mu_{n-1} >= (1-mu_2)/2; chain regime not entered");
  double rhs = proof_rate_function(x, y, gap);
  return upper_bound_verdict("proof-chain", "Theorem 1 proof (chain)",
                             kSqrt2 / 2.0 * e.h.value(), rhs, tol);
}

PriorBoundRatios prior_bound_ratios(const Spectrum& s,
                                    const ExpansionProfile& e, int d) {
  if (!e.h_out) throw std::invalid_argument("prior bound ratios need h_out");
  PriorBoundRatios r;
  double lhs = 1.0 + s.mu_n();
  double h = e.h.value();
  double h_out = e.h_out->value();
  r.edge_ratio = lhs / (h * h / (double(d) * d));
  r.vertex_ratio = lhs / (h_out * h_out / double(d));
  return r;
}

}  // namespace gaplab
