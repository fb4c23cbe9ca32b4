#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaplab/checks.hpp"
#include "gaplab/expansion.hpp"
#include "gaplab/graph.hpp"
#include "gaplab/spectrum.hpp"
#include "gaplab/verdict.hpp"

namespace gaplab {

struct VerifyOptions {
  double tol = 1e-9;
  int max_enum_n = 24;      // cut enumeration limit
  int vt_search_limit = 16; // automorphism search limit
  bool assume_vt = false;   // user-asserted vertex-transitivity
  bool cayley = false;      // input came through the Cayley constructor
  bool corollary16_applicable = false;
  // empty = run everything applicable; otherwise only checks whose name
  // starts with one of these prefixes
  std::vector<std::string> checks;
};

// One fully analyzed graph: spectrum, exact expansion, and all verdicts the
// hypotheses admit (inadmissible checks appear as skipped, never failed).
struct GraphRecord {
  std::string graph_id;
  std::string source;
  Graph graph;
  bool connected = false;
  bool bipartite = false;
  VtVerdict vt = VtVerdict::Skipped;
  VtProvenance vt_provenance = VtProvenance::Unknown;
  Spectrum spectrum;
  ExpansionProfile profile;
  std::vector<Verdict> verdicts;
  std::optional<PriorBoundRatios> ratios;
};

GraphRecord analyze_graph(std::string graph_id, std::string source,
                          const Graph& g, const VerifyOptions& opts);

struct RunSummary {
  int checks_total = 0;
  int holds = 0;
  int skipped = 0;
  int failed = 0;
};

RunSummary summarize(const std::vector<GraphRecord>& records);

struct RandomSpec {
  int count = 100;
  int n_min = 4;
  int n_max = 14;
  double p_min = 0.25;
  double p_max = 0.75;
  int retry_budget = 500;  // resamples per graph until connected
};

// Named families plus seeded Erdos-Renyi graphs conditioned on connectivity.
std::vector<std::pair<std::string, Graph>> build_corpus(
    unsigned seed, const RandomSpec& spec, bool include_random = true);

nlohmann::json record_to_json(const GraphRecord& r);
nlohmann::json report_to_json(const std::vector<GraphRecord>& records,
                              const VerifyOptions& opts, unsigned seed);
std::string report_to_csv(const std::vector<GraphRecord>& records);

std::string fixed12(double x);

}  // namespace gaplab
