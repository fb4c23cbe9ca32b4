#pragma once

#include <utility>
#include <vector>

#include "gaplab/expansion.hpp"
#include "gaplab/graph.hpp"
#include "gaplab/spectrum.hpp"
#include "gaplab/verdict.hpp"

namespace gaplab {

// The rate function from the main lower-bound argument:
//   f(x,y) = (sqrt(x)+sqrt(y)) / (sqrt(1-x/gap)sqrt(1-y/gap) - sqrt(x/gap)sqrt(y/gap))
// continuous and increasing in each argument on [0, gap/2)^2.
double proof_rate_function(double x, double y, double gap);

// Closed form for the constant c = c(h, gap) solving f(c,c) = sqrt(2)/2 * h:
//   sqrt(c) = gap/(sqrt(2) h) * (sqrt(1 + h^2/gap) - 1).
// Self-checks f(c,c) against sqrt(2)/2*h within 1e-8 unless c sits within
// 1e-12 of the gap/2 domain boundary.
double c_constant(double h, double gap);

// 1 + mu_{n-1} >= c(h, 1 - mu_2) for connected graphs.
Verdict theorem1_check(const Graph& g, const Spectrum& s,
                       const ExpansionProfile& e, double tol = 1e-9);

// Two corollary displays: 1+mu_{n-1} >= 2(sqrt(1+(1-mu_2)/4)-1)^2 and
// 1+mu_{n-1} >= (sqrt(3)-1)^2/8 * h^2.
std::pair<Verdict, Verdict> corollary15_check(const Spectrum& s,
                                              const ExpansionProfile& e,
                                              double tol = 1e-9);

// Non-bipartite vertex-transitive bounds on 1+mu_n:
//   >= min{2/d, (sqrt(3)-1)^2/8 h^2}   and   >= min{2/d, 2(sqrt(1+(1-mu_2)/4)-1)^2}.
std::pair<Verdict, Verdict> corollary26_check(const Graph& g, const Spectrum& s,
                                              const ExpansionProfile& e,
                                              double tol = 1e-9);

// Every simple eigenvalue of a connected vertex-transitive d-regular graph
// lies on the lattice 2k/d - 1; one verdict per simple eigenvalue.
std::vector<Verdict> quantization_check(const Graph& g, const Spectrum& s,
                                        double integrality_tol = 1e-7);

// Cayley bounds without the 2/d term (simple group or odd order), plus the
// structural claim that every nontrivial eigenvalue has multiplicity >= 2.
std::vector<Verdict> corollary16_check(const Graph& g, const Spectrum& s,
                                       const ExpansionProfile& e,
                                       bool applicable, double tol = 1e-9);

// l1-energy of a product of eigenfunctions:
//   sum_E |f(u)g(u)-f(v)g(v)| <= sqrt(2)/2 (sqrt(1+mu)+sqrt(1+nu)) ||f|| ||g||.
Verdict lemma17_check(const Graph& graph, const std::vector<double>& f,
                      double mu, const std::vector<double>& g, double nu,
                      double tol = 1e-9);

// ||f1||^2 <= (1+mu)/(1-mu_2) and <|f|,c>^2 >= 1 - (1+mu)/(1-mu_2), where
// f1 is |f| minus its projection on the normalized constant.
std::pair<Verdict, Verdict> lemma3_check(const Graph& graph,
                                         const std::vector<double>& f,
                                         double mu, const Spectrum& s,
                                         double tol = 1e-9);

// <|f|,|g|> >= sqrt(1-r_mu)sqrt(1-r_nu) - sqrt(r_mu)sqrt(r_nu) with
// r_mu = (1+mu)/(1-mu_2); skipped when either ratio exceeds 1.
Verdict lemma5_check(const Graph& graph, const std::vector<double>& f,
                     double mu, const std::vector<double>& g, double nu,
                     const Spectrum& s, double tol = 1e-9);

// For mean-zero f: sum_E |f(u)-f(v)| / sum_u |f(u)| d_u >= h/2.
Verdict proposition4_check(const Graph& graph, const std::vector<double>& f,
                           double h, double tol = 1e-9);

// 2h >= 1-mu_2 >= h^2/2, as two verdicts.
std::pair<Verdict, Verdict> cheeger_inequality_check(const Spectrum& s,
                                                     const ExpansionProfile& e,
                                                     double tol = 1e-9);

// h_out/d <= h <= h_out for d-regular graphs, as two verdicts.
std::pair<Verdict, Verdict> regular_sandwich_check(const ExpansionProfile& e,
                                                   int d, double tol = 1e-9);

// Assembled three-term inequality sqrt(2)/2 h <= f(1+mu_n, 1+mu_{n-1})
// from the main proof; only meaningful when 1+mu_{n-1} < (1-mu_2)/2,
// otherwise returned skipped.
Verdict proof_chain_check(const Spectrum& s, const ExpansionProfile& e,
                          double tol = 1e-9);

// Prior bounds carry unspecified absolute constants; these are reported as
// raw ratios, never pass/fail.
struct PriorBoundRatios {
  double edge_ratio = 0.0;    // (1+mu_n) / (h^2/d^2)
  double vertex_ratio = 0.0;  // (1+mu_n) / (h_out^2/d)
};
PriorBoundRatios prior_bound_ratios(const Spectrum& s,
                                    const ExpansionProfile& e, int d);

}  // namespace gaplab
