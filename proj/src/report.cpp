#include "gaplab/report.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gaplab/cayley.hpp"

namespace gaplab {

std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  return buf;
}

namespace {

bool check_selected(const VerifyOptions& opts, const std::string& name) {
  if (opts.checks.empty()) return true;
  for (const auto& prefix : opts.checks)
    if (name.rfind(prefix, 0) == 0) return true;
  return false;
}

void push_if_selected(std::vector<Verdict>& out, const VerifyOptions& opts,
                      Verdict v) {
  if (check_selected(opts, v.name)) out.push_back(std::move(v));
}

std::vector<double> pointwise_product(const std::vector<double>& f,
                                      const std::vector<double>& g) {
  std::vector<double> p(f.size());
  for (size_t i = 0; i < f.size(); ++i) p[i] = f[i] * g[i];
  return p;
}

}  // namespace

GraphRecord analyze_graph(std::string graph_id, std::string source,
                          const Graph& g, const VerifyOptions& opts) {
  GraphRecord rec;
  rec.graph_id = std::move(graph_id);
  rec.source = std::move(source);
  rec.graph = g;
  rec.connected = is_connected(g);
  rec.bipartite = is_bipartite(g);

  // resolve vertex-transitivity and its provenance
  if (opts.assume_vt) {
    rec.vt = VtVerdict::Verified;
    rec.vt_provenance = VtProvenance::Asserted;
    rec.graph.meta.vertex_transitive = VtProvenance::Asserted;
  } else if (g.meta.vertex_transitive == VtProvenance::ByConstruction) {
    rec.vt = VtVerdict::Verified;
    rec.vt_provenance = VtProvenance::ByConstruction;
  } else if (rec.connected) {
    rec.vt = verify_vertex_transitive(g, opts.vt_search_limit);
    if (rec.vt == VtVerdict::Verified) {
      rec.vt_provenance = VtProvenance::Verified;
      rec.graph.meta.vertex_transitive = VtProvenance::Verified;
    }
  }
  bool vertex_transitive = rec.vt == VtVerdict::Verified;
  bool regular = rec.graph.meta.regular_degree.has_value();
  if (!regular) {
    bool constant = true;
    for (int v = 1; v < g.n; ++v)
      if (g.deg[v] != g.deg[0]) constant = false;
    if (constant && g.n > 0) {
      rec.graph.meta.regular_degree = g.deg[0];
      regular = true;
    }
  }

  rec.spectrum = normalized_spectrum(rec.graph);
  rec.profile = expansion_profile(rec.graph, opts.max_enum_n);

  auto& out = rec.verdicts;
  const double tol = opts.tol;
  const Graph& graph = rec.graph;
  const Spectrum& s = rec.spectrum;
  const ExpansionProfile& e = rec.profile;

  auto [cheeger_hi, cheeger_lo] = cheeger_inequality_check(s, e, tol);
  push_if_selected(out, opts, cheeger_hi);
  push_if_selected(out, opts, cheeger_lo);

  if (!rec.connected) {
    for (const char* name :
         {"theorem1", "corollary15", "corollary26", "corollary16",
          "quantization", "proposition4-product", "proof-chain", "lemma17",
          "lemma3", "lemma5"})
      push_if_selected(out, opts,
                       skipped_verdict(name, "-", "graph is disconnected"));
    return rec;
  }

  push_if_selected(out, opts, theorem1_check(graph, s, e, tol));
  auto [c15a, c15b] = corollary15_check(s, e, tol);
  push_if_selected(out, opts, c15a);
  push_if_selected(out, opts, c15b);

  if (graph.n >= 2) {
    auto pair = eigenspace_pair(s);
    push_if_selected(out, opts,
                     lemma17_check(graph, pair.f, pair.mu_n, pair.g,
                                   pair.mu_n_minus_1, tol));
    auto [l3a, l3b] = lemma3_check(graph, pair.f, pair.mu_n, s, tol);
    push_if_selected(out, opts, l3a);
    push_if_selected(out, opts, l3b);
    push_if_selected(out, opts,
                     lemma5_check(graph, pair.f, pair.mu_n, pair.g,
                                  pair.mu_n_minus_1, s, tol));
    // product of the two bottom eigenfunctions is mean-zero by <f,g> = 0
    auto product = pointwise_product(pair.f, pair.g);
    double product_scale = 0.0;
    for (double x : product) product_scale = std::max(product_scale, std::abs(x));
    if (product_scale > 0.0) {
      Verdict p4 = proposition4_check(graph, product, e.h.value(), tol);
      p4.name = "proposition4-product";
      push_if_selected(out, opts, p4);
    } else {
      push_if_selected(out, opts,
                       skipped_verdict("proposition4-product", "Proposition 4",
                                       "bottom eigenfunction product is zero"));
    }
    push_if_selected(out, opts, proof_chain_check(s, e, tol));
  }

  bool vt_hypothesis = vertex_transitive && regular;
  if (vt_hypothesis) {
    auto [lo, hi] = regular_sandwich_check(e, *rec.graph.meta.regular_degree, tol);
    push_if_selected(out, opts, lo);
    push_if_selected(out, opts, hi);
    for (auto& v : quantization_check(graph, s))
      push_if_selected(out, opts, std::move(v));
    if (!rec.bipartite) {
      auto [eq22, eq23] = corollary26_check(graph, s, e, tol);
      push_if_selected(out, opts, eq22);
      push_if_selected(out, opts, eq23);
      rec.ratios = prior_bound_ratios(s, e, *rec.graph.meta.regular_degree);
    } else {
      push_if_selected(out, opts,
                       skipped_verdict("corollary26", "Corollary 26",
                                       "hypothesis violated: graph is bipartite"));
    }
  } else {
    std::string reason =
        rec.vt == VtVerdict::Skipped
            ? "vertex-transitivity unknown (search skipped at this size)"
            : "hypothesis violated: graph is not vertex-transitive";
    push_if_selected(out, opts,
                     skipped_verdict("corollary26", "Corollary 26", reason));
    push_if_selected(out, opts,
                     skipped_verdict("quantization",
                                     "Section 4 Theorem (simple eigenvalues)",
                                     reason));
  }

  if (opts.cayley) {
    if (rec.bipartite) {
      push_if_selected(out, opts,
                       skipped_verdict("corollary16", "Corollary 16",
                                       "hypothesis violated: graph is bipartite"));
    } else {
      for (auto& v :
           corollary16_check(graph, s, e, opts.corollary16_applicable, tol))
        push_if_selected(out, opts, std::move(v));
    }
  }
  return rec;
}

RunSummary summarize(const std::vector<GraphRecord>& records) {
  RunSummary sum;
  for (const auto& r : records)
    for (const auto& v : r.verdicts) {
      ++sum.checks_total;
      if (v.skipped)
        ++sum.skipped;
      else if (v.holds)
        ++sum.holds;
      else
        ++sum.failed;
    }
  return sum;
}

std::vector<std::pair<std::string, Graph>> build_corpus(
    unsigned seed, const RandomSpec& spec, bool include_random) {
  std::vector<std::pair<std::string, Graph>> corpus;
  for (int n = 3; n <= 11; ++n)
    corpus.emplace_back("cycle-" + std::to_string(n), make_family("cycle", {n}));
  for (int n = 3; n <= 6; ++n)
    corpus.emplace_back("complete-" + std::to_string(n),
                        make_family("complete", {n}));
  corpus.emplace_back("complete_bipartite-2-3",
                      make_family("complete_bipartite", {2, 3}));
  corpus.emplace_back("petersen", make_family("petersen", {}));
  corpus.emplace_back("hypercube-3", make_family("hypercube", {3}));
  // circulant Cayley graphs
  struct CirculantSpec { int n; std::vector<int> gens; };
  for (const auto& cs : {CirculantSpec{5, {1, 4}}, CirculantSpec{7, {1, 2, 5, 6}},
                         CirculantSpec{9, {1, 8}}}) {
    GroupTable zt = make_cyclic_group(cs.n);
    std::string id = "cayley-z" + std::to_string(cs.n);
    corpus.emplace_back(id, cayley_graph(zt, GeneratingSet{cs.gens}));
  }

  if (include_random) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick_n(spec.n_min, spec.n_max);
    std::uniform_real_distribution<double> pick_p(spec.p_min, spec.p_max);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < spec.count; ++i) {
      bool made = false;
      for (int attempt = 0; attempt < spec.retry_budget && !made; ++attempt) {
        int n = pick_n(rng);
        double p = pick_p(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
        Graph g = build_graph(n, std::move(edges));
        if (!is_connected(g)) continue;
        corpus.emplace_back("random-" + std::to_string(i), std::move(g));
        made = true;
      }
      if (!made)
        throw std::runtime_error(
            "random corpus spec produced no connected graph within budget");
    }
  }
  return corpus;
}

nlohmann::json record_to_json(const GraphRecord& r) {
  nlohmann::json j;
  j["graph_id"] = r.graph_id;
  j["source"] = r.source;
  j["n"] = r.graph.n;
  j["m"] = r.graph.edges.size();
  if (r.graph.meta.regular_degree)
    j["regular_degree"] = *r.graph.meta.regular_degree;
  else
    j["regular_degree"] = nullptr;
  j["connected"] = r.connected;
  j["bipartite"] = r.bipartite;
  j["vertex_transitive"] = vt_verdict_name(r.vt);
  j["vt_provenance"] = vt_provenance_name(r.vt_provenance);

  auto spectrum = nlohmann::json::array();
  for (double mu : r.spectrum.values) spectrum.push_back(fixed12(mu));
  j["spectrum"] = spectrum;
  j["spectrum_residual"] = r.spectrum.residual;

  j["h"] = {{"num", r.profile.h.num},
            {"den", r.profile.h.den},
            {"value", fixed12(r.profile.h.value())}};
  j["h_witness"] = r.profile.witness.members;
  if (r.profile.h_out) {
    j["h_out"] = {{"num", r.profile.h_out->num},
                  {"den", r.profile.h_out->den},
                  {"value", fixed12(r.profile.h_out->value())}};
    j["h_out_witness"] = r.profile.h_out_witness->members;
  }

  auto verdicts = nlohmann::json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  j["verdicts"] = verdicts;

  if (r.ratios) {
    j["prior_bound_ratios"] = {{"edge", fixed12(r.ratios->edge_ratio)},
                               {"vertex", fixed12(r.ratios->vertex_ratio)}};
  }
  return j;
}

nlohmann::json report_to_json(const std::vector<GraphRecord>& records,
                              const VerifyOptions& opts, unsigned seed) {
  nlohmann::json j;
  j["config"] = {{"tol", opts.tol},
                 {"max_enum_n", opts.max_enum_n},
                 {"vt_search_limit", opts.vt_search_limit},
                 {"seed", seed}};
  auto graphs = nlohmann::json::array();
  for (const auto& r : records) graphs.push_back(record_to_json(r));
  j["graphs"] = graphs;
  RunSummary sum = summarize(records);
  j["summary"] = {{"checks_total", sum.checks_total},
                  {"holds", sum.holds},
                  {"skipped", sum.skipped},
                  {"failed", sum.failed}};
  return j;
}

std::string report_to_csv(const std::vector<GraphRecord>& records) {
  std::ostringstream out;
  out << "graph_id,check,anchor,status,lhs,rhs,slack,tol\n";
  for (const auto& r : records)
    for (const auto& v : r.verdicts) {
      const char* status = v.skipped ? "skipped" : (v.holds ? "holds" : "failed");
      out << r.graph_id << ',' << v.name << ",\"" << v.anchor << "\","
          << status << ',';
      if (v.skipped)
        out << ",,,";
      else
        out << fixed12(v.lhs) << ',' << fixed12(v.rhs) << ','
            << fixed12(v.slack) << ',' << v.tol;
      out << '\n';
    }
  return out.str();
}

}  // namespace gaplab
