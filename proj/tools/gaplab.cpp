#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaplab/cayley.hpp"
#include "gaplab/report.hpp"

namespace {

using namespace gaplab;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// "cycle 5" or "complete_bipartite 2 3"
Graph graph_from_family_spec(const std::string& spec) {
  std::istringstream in(spec);
  std::string name;
  if (!(in >> name)) throw std::invalid_argument("empty family spec");
  std::vector<int> params;
  int p;
  while (in >> p) params.push_back(p);
  return make_family(name, params);
}

Graph load_graph(const std::string& file, const std::string& family) {
  if (!family.empty()) return graph_from_family_spec(family);
  if (!file.empty()) return parse_graph(read_file(file));
  throw std::invalid_argument("need an input file or --family");
}

std::vector<int> parse_generators(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

void print_verdicts(const GraphRecord& rec) {
  std::cout << rec.graph_id << ": n=" << rec.graph.n
            << " m=" << rec.graph.edges.size()
            << " connected=" << (rec.connected ? "yes" : "no")
            << " bipartite=" << (rec.bipartite ? "yes" : "no")
            << " vt=" << vt_verdict_name(rec.vt) << " ("
            << vt_provenance_name(rec.vt_provenance) << ")\n";
  std::cout << "  h = " << rec.profile.h.num << "/" << rec.profile.h.den
            << " = " << fixed12(rec.profile.h.value()) << "\n";
  if (rec.profile.h_out)
    std::cout << "  h_out = " << rec.profile.h_out->num << "/"
              << rec.profile.h_out->den << " = "
              << fixed12(rec.profile.h_out->value()) << "\n";
  std::cout << "  spectrum:";
  for (double mu : rec.spectrum.values) std::cout << ' ' << fixed12(mu);
  std::cout << "\n";
  for (const auto& v : rec.verdicts) {
    if (v.skipped) {
      std::cout << "  [skip] " << v.name << " — " << v.reason << "\n";
    } else {
      std::cout << "  [" << (v.holds ? " ok " : "FAIL") << "] " << v.name
                << "  lhs=" << fixed12(v.lhs) << " rhs=" << fixed12(v.rhs)
                << " slack=" << fixed12(v.slack) << "  (" << v.anchor << ")\n";
    }
  }
  if (rec.ratios)
    std::cout << "  prior-bound ratios: edge=" << fixed12(rec.ratios->edge_ratio)
              << " vertex=" << fixed12(rec.ratios->vertex_ratio) << "\n";
}

int emit_and_exit(const std::vector<GraphRecord>& records,
                  const VerifyOptions& opts, unsigned seed,
                  const std::string& out_path) {
  if (!out_path.empty()) {
    write_file(out_path, report_to_json(records, opts, seed).dump(2) + "\n");
    std::string csv_path = out_path;
    auto dot = csv_path.rfind('.');
    if (dot != std::string::npos) csv_path.resize(dot);
    csv_path += ".csv";
    write_file(csv_path, report_to_csv(records));
  }
  RunSummary sum = summarize(records);
  std::cout << "checks: " << sum.checks_total << "  holds: " << sum.holds
            << "  skipped: " << sum.skipped << "  failed: " << sum.failed
            << "\n";
  return sum.failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral-gap and expansion verifier for finite graphs"};
  app.require_subcommand(1);

  std::string file, family, out_path, gens_csv, group_file;
  double tol = 1e-9;
  int max_n = 24, vt_limit = 16, count = 100;
  unsigned seed = 42;
  bool assume_vt = false, assert_simple = false;
  std::vector<std::string> checks;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "edge-list file");
    cmd->add_option("--family", family, "family spec, e.g. \"cycle 5\"");
  };

  auto* cmd_family = app.add_subcommand("family", "emit a named family as an edge list");
  std::string family_name;
  std::vector<int> family_params;
  cmd_family->add_option("name", family_name)->required();
  cmd_family->add_option("params", family_params);
  cmd_family->add_option("--out", out_path);

  auto* cmd_spectrum = app.add_subcommand("spectrum", "normalized adjacency eigenvalues");
  add_input(cmd_spectrum);

  auto* cmd_cheeger = app.add_subcommand("cheeger", "exact edge-expansion with witness");
  add_input(cmd_cheeger);
  cmd_cheeger->add_option("--max-n", max_n, "cut enumeration limit");

  auto* cmd_verify = app.add_subcommand("verify", "run all applicable checks");
  add_input(cmd_verify);
  cmd_verify->add_option("--tol", tol);
  cmd_verify->add_option("--max-n", max_n);
  cmd_verify->add_option("--vt-limit", vt_limit);
  cmd_verify->add_flag("--assume-vt", assume_vt, "assert vertex-transitivity");
  cmd_verify->add_option("--checks", checks, "run only checks with these name prefixes");
  cmd_verify->add_option("--out", out_path, "write JSON report (CSV alongside)");

  auto* cmd_cayley = app.add_subcommand("cayley", "build a Cayley graph and verify");
  cmd_cayley->add_option("group", group_file, "group table file")->required();
  cmd_cayley->add_option("--gens", gens_csv, "comma-separated generator indices")->required();
  cmd_cayley->add_flag("--assert-simple", assert_simple, "declare the group simple");
  cmd_cayley->add_option("--tol", tol);
  cmd_cayley->add_option("--max-n", max_n);
  cmd_cayley->add_option("--checks", checks);
  cmd_cayley->add_option("--out", out_path);

  auto* cmd_corpus = app.add_subcommand("corpus", "run families plus random graphs");
  cmd_corpus->add_option("--seed", seed);
  cmd_corpus->add_option("--count", count, "number of random graphs");
  cmd_corpus->add_option("--tol", tol);
  cmd_corpus->add_option("--out", out_path, "write JSON report (CSV alongside)");

  CLI11_PARSE(app, argc, argv);

  try {
    VerifyOptions opts;
    opts.tol = tol;
    opts.max_enum_n = max_n;
    opts.vt_search_limit = vt_limit;
    opts.assume_vt = assume_vt;
    opts.checks = checks;

    if (*cmd_family) {
      Graph g = make_family(family_name, family_params);
      std::string text = to_edge_list(g);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      return 0;
    }
    if (*cmd_spectrum) {
      Graph g = load_graph(file, family);
      Spectrum s = normalized_spectrum(g);
      for (double mu : s.values) std::cout << fixed12(mu) << "\n";
      return 0;
    }
    if (*cmd_cheeger) {
      Graph g = load_graph(file, family);
      ExpansionProfile p = cheeger_constant(g, max_n);
      std::cout << "h = " << p.h.num << "/" << p.h.den << " = "
                << fixed12(p.h.value()) << "\n";
      std::cout << "witness S = {";
      for (size_t i = 0; i < p.witness.members.size(); ++i)
        std::cout << (i ? "," : "") << p.witness.members[i];
      std::cout << "}  |dS| = " << p.witness.boundary_size
                << "  vol(S) = " << p.witness.vol_s << "\n";
      return 0;
    }
    if (*cmd_verify) {
      Graph g = load_graph(file, family);
      std::string source = family.empty() ? file : "family " + family;
      GraphRecord rec = analyze_graph("input", source, g, opts);
      print_verdicts(rec);
      return emit_and_exit({rec}, opts, seed, out_path);
    }
    if (*cmd_cayley) {
      GroupTable gt = parse_group(read_file(group_file));
      gt.asserted_simple = assert_simple;
      GeneratingSet s{parse_generators(gens_csv)};
      Graph g = cayley_graph(gt, s);
      opts.cayley = true;
      opts.corollary16_applicable = corollary16_applicable(gt);
      GraphRecord rec = analyze_graph("cayley", group_file, g, opts);
      print_verdicts(rec);
      return emit_and_exit({rec}, opts, seed, out_path);
    }
    if (*cmd_corpus) {
      RandomSpec rspec;
      rspec.count = count;
      auto corpus = build_corpus(seed, rspec);
      std::vector<GraphRecord> records;
      for (auto& [id, g] : corpus) {
        VerifyOptions gopts = opts;
        if (id.rfind("cayley-z", 0) == 0) {
          gopts.cayley = true;
          int order = std::stoi(id.substr(8));
          gopts.corollary16_applicable = order % 2 == 1;
        }
        records.push_back(analyze_graph(id, "corpus", g, gopts));
      }
      return emit_and_exit(records, opts, seed, out_path);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
