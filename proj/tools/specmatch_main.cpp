// specmatch: exact fractional matching numbers, graph spectra, and
// verification of the spectral threshold conditions that guarantee large
// fractional matchings. See README.md for the report format.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specmatch/bounds.hpp"
#include "specmatch/families.hpp"
#include "specmatch/fracmatch.hpp"
#include "specmatch/graph.hpp"
#include "specmatch/scan.hpp"
#include "specmatch/spectral.hpp"

namespace {

using namespace specmatch;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == '"') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

const char* kCsvHeader =
    "graph6,theorem,n,delta,a,b,k,lambda1,threshold,two_mu_f,verdict";

std::string csv_row(const std::string& graph6, const ScanRecord& r) {
  std::ostringstream out;
  out << graph6 << ',' << to_string(r.theorem) << ',' << r.n << ',' << r.delta
      << ',' << fmt(r.a) << ',' << fmt(r.b) << ',' << fmt(r.k) << ','
      << fmt(r.lambda1) << ',' << fmt(r.threshold) << ',' << r.two_mu_f << ','
      << to_string(r.verdict);
  return out.str();
}

std::string json_row(const std::string& graph6, const ScanRecord& r) {
  std::ostringstream out;
  out << "{\"graph6\":\"" << json_escape(graph6) << "\",\"theorem\":\""
      << to_string(r.theorem) << "\",\"n\":" << r.n << ",\"delta\":" << r.delta
      << ",\"a\":" << fmt(r.a) << ",\"b\":" << fmt(r.b)
      << ",\"k\":" << fmt(r.k) << ",\"lambda1\":" << fmt(r.lambda1)
      << ",\"threshold\":" << fmt(r.threshold)
      << ",\"two_mu_f\":" << r.two_mu_f << ",\"verdict\":\""
      << to_string(r.verdict) << "\"}";
  return out.str();
}

int brute_cap_from_env() {
  const char* text = std::getenv("SPECMATCH_BRUTE_CAP");
  if (!text) return 20;
  try {
    int cap = std::stoi(text);
    if (cap < 0 || cap > 62) throw std::out_of_range("cap");
    return cap;
  } catch (const std::exception&) {
    throw std::domain_error(
        "SPECMATCH_BRUTE_CAP must be an integer in [0, 62]");
  }
}

struct OutputFile {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit OutputFile(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    stream = &file;
  }
};

int run_analyze(const std::string& graph6, double a, double b, double k,
                std::optional<double> alpha, double epsilon, bool json) {
  Graph g = parse_graph6(graph6);
  const std::string canonical = write_graph6(g);
  const int n = g.vertex_count();
  if (!(k > 0.0 && k < static_cast<double>(n)))
    throw std::domain_error("k must lie in (0, n); n is " +
                            std::to_string(n));

  GridSpec grid;
  grid.a = {a};
  grid.b = {b};
  grid.k = {k};
  auto records = evaluate_graph(g, grid, epsilon, alpha);

  const HalfInt mu = fractional_matching_number(g);
  const auto witness = fractional_matching_witness(g);
  const auto spectrum = eigenvalues(build_matrix(g, SpectralParams(a, b)));
  const int cap = brute_cap_from_env();
  std::optional<DeficiencyWitness> deficiency;
  if (n <= cap) deficiency = deficiency_bruteforce(g, cap);

  bool counterexample = false;
  for (const auto& r : records)
    if (r.verdict == VerdictLabel::counterexample) counterexample = true;

  if (json) {
    std::ostringstream out;
    out << "{\"graph6\":\"" << json_escape(canonical) << "\",\"n\":" << n
        << ",\"delta\":" << degree_profile(g).min_degree
        << ",\"two_mu_f\":" << mu.twice << ",\"mu_f\":\"" << mu.str()
        << "\",\"spectrum\":[";
    for (std::size_t i = 0; i < spectrum.values.size(); ++i)
      out << (i ? "," : "") << fmt(spectrum.values[i]);
    out << "],\"witness\":[";
    bool first = true;
    for (const auto& [edge, w2] : witness.twice_weight) {
      out << (first ? "" : ",") << '[' << edge.first << ',' << edge.second
          << ',' << w2 << ']';
      first = false;
    }
    out << "],\"deficiency\":";
    if (deficiency) {
      out << "{\"value\":" << deficiency->value << ",\"s\":[";
      for (std::size_t i = 0; i < deficiency->set_s.size(); ++i)
        out << (i ? "," : "") << deficiency->set_s[i];
      out << "],\"t\":[";
      for (std::size_t i = 0; i < deficiency->isolated_t.size(); ++i)
        out << (i ? "," : "") << deficiency->isolated_t[i];
      out << "]}";
    } else {
      out << "null";
    }
    out << ",\"records\":[";
    for (std::size_t i = 0; i < records.size(); ++i)
      out << (i ? "," : "") << json_row(canonical, records[i]);
    out << "]}";
    std::cout << out.str() << '\n';
  } else {
    std::cout << "graph6: " << canonical << '\n';
    std::cout << "n: " << n << '\n';
    std::cout << "delta: " << degree_profile(g).min_degree << '\n';
    std::cout << "mu_f: " << mu.str() << " (two_mu_f=" << mu.twice << ")\n";
    std::cout << "spectrum a=" << fmt(a) << " b=" << fmt(b) << ":";
    for (double v : spectrum.values) std::cout << ' ' << fmt(v);
    std::cout << '\n';
    if (deficiency) {
      std::cout << "deficiency: value=" << deficiency->value << " S=[";
      for (std::size_t i = 0; i < deficiency->set_s.size(); ++i)
        std::cout << (i ? " " : "") << deficiency->set_s[i];
      std::cout << "] T=[";
      for (std::size_t i = 0; i < deficiency->isolated_t.size(); ++i)
        std::cout << (i ? " " : "") << deficiency->isolated_t[i];
      std::cout << "]\n";
    } else {
      std::cout << "deficiency: skipped (n > " << cap
                << "; raise SPECMATCH_BRUTE_CAP to force)\n";
    }
    std::cout << "witness:";
    if (witness.twice_weight.empty()) std::cout << " none";
    for (const auto& [edge, w2] : witness.twice_weight)
      std::cout << " (" << edge.first << ',' << edge.second
                << ")=" << HalfInt{w2}.str();
    std::cout << '\n';
    std::cout << kCsvHeader << '\n';
    for (const auto& r : records) std::cout << csv_row(canonical, r) << '\n';
  }
  return counterexample ? 2 : 0;
}

int run_scan(const std::string& corpus_path, const std::string& grid_text,
             double epsilon, const std::string& out_path, bool json,
             int jobs) {
  std::vector<std::string> lines;
  if (corpus_path == "-") {
    std::string line;
    while (std::getline(std::cin, line)) lines.push_back(line);
  } else {
    std::ifstream in(corpus_path);
    if (!in)
      throw std::runtime_error("cannot open corpus file " + corpus_path);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  GridSpec grid = parse_grid(grid_text);
  OutputFile out(out_path);
  if (!json) *out.stream << kCsvHeader << '\n';
  auto sink = [&](std::size_t, const std::string& graph6,
                  const std::vector<ScanRecord>& records) {
    for (const auto& r : records)
      *out.stream << (json ? json_row(graph6, r) : csv_row(graph6, r)) << '\n';
  };
  ScanReport report = scan_corpus(lines, grid, epsilon, jobs, sink);
  out.stream->flush();
  if (out.stream->fail()) throw std::runtime_error("report write failed");

  for (const auto& note : report.skipped_lines)
    std::cerr << "skipped " << note << '\n';
  std::cerr << "graphs=" << report.counts.graphs
            << " skipped=" << report.counts.skipped
            << " vacuous=" << report.counts.vacuous
            << " confirmed=" << report.counts.confirmed
            << " boundary=" << report.counts.boundary
            << " counterexample=" << report.counts.counterexample << '\n';
  for (const auto& ce : report.counterexamples)
    std::cerr << "counterexample: " << csv_row(ce.graph6, ce.record) << '\n';
  return report.counts.counterexample > 0 ? 2 : 0;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(start, end - start);
    std::size_t eq = part.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("params: expected key=value in '" + part +
                                  "'");
    out[part.substr(0, eq)] = part.substr(eq + 1);
    start = end + 1;
  }
  return out;
}

int param_int(const std::map<std::string, std::string>& params,
              const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("params: missing '" + key + "'");
  return std::stoi(it->second);
}

double param_double(const std::map<std::string, std::string>& params,
                    const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("params: missing '" + key + "'");
  return std::stod(it->second);
}

// "K3" complete, "E3" edgeless, or a graph6 string; vertex count must be
// delta.
Graph parse_h_graph(const std::string& text, int delta) {
  Graph h;
  if ((text[0] == 'K' || text[0] == 'E') &&
      text.find_first_not_of("0123456789", 1) == std::string::npos &&
      text.size() > 1) {
    int size = std::stoi(text.substr(1));
    std::vector<std::pair<int, int>> edges;
    if (text[0] == 'K')
      for (int u = 0; u < size; ++u)
        for (int v = u + 1; v < size; ++v) edges.emplace_back(u, v);
    h = Graph(size, edges);
  } else {
    h = parse_graph6(text);
  }
  if (h.vertex_count() != delta)
    throw std::invalid_argument("h must have exactly delta=" +
                                std::to_string(delta) + " vertices, got " +
                                std::to_string(h.vertex_count()));
  return h;
}

int run_construct(const std::string& family, const std::string& params_text,
                  const std::string& out_path, std::uint64_t seed,
                  int count) {
  auto params = parse_params(params_text);
  OutputFile out(out_path);
  if (family == "complete_bipartite") {
    Graph g = complete_bipartite(param_int(params, "p"),
                                 param_int(params, "q"));
    *out.stream << write_graph6(g) << '\n';
  } else if (family == "family_b") {
    FamilyBSpec spec;
    spec.delta = param_int(params, "delta");
    spec.k = param_int(params, "k");
    spec.x_size = params.contains("m")
                      ? param_int(params, "m")
                      : family_b_minimal_x(spec.delta, spec.k);
    auto result = family_b(spec);
    *out.stream << write_graph6(result.graph) << '\n';
    std::cerr << "family_b delta=" << spec.delta << " k=" << spec.k
              << " m=" << spec.x_size << " x_degree=" << result.x_degree
              << " connected=" << (result.connected ? "yes" : "no") << '\n';
  } else if (family == "join_exception") {
    int delta = param_int(params, "delta");
    auto it = params.find("h");
    if (it == params.end())
      throw std::invalid_argument("params: missing 'h'");
    Graph h = parse_h_graph(it->second, delta);
    Graph g = join_exception(delta, h.edges());
    *out.stream << write_graph6(g) << '\n';
  } else if (family == "random") {
    int n = param_int(params, "n");
    double p = param_double(params, "p");
    for (int i = 0; i < count; ++i)
      *out.stream << write_graph6(random_graph(n, p, seed + i)) << '\n';
  } else {
    throw std::invalid_argument(
        "unknown family '" + family +
        "' (complete_bipartite, family_b, join_exception, random)");
  }
  out.stream->flush();
  if (out.stream->fail()) throw std::runtime_error("write failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fractional matching numbers, graph spectra, and spectral-threshold "
      "verification"};
  app.require_subcommand(1);

  std::string graph6;
  double a = 0.0, b = 1.0, k = 1.0, epsilon = 1e-9;
  std::optional<double> alpha;
  bool json = false;

  auto* analyze = app.add_subcommand(
      "analyze", "run every check against one graph6 graph");
  analyze->add_option("graph6", graph6, "graph6 string")->required();
  analyze->add_option("--a", a, "diagonal coefficient (default 0)");
  analyze->add_option("--b", b, "adjacency coefficient (default 1)");
  analyze->add_option("--k", k, "conclusion slack (default 1)");
  analyze->add_option("--alpha", alpha,
                      "evaluate the convex-family checks at this alpha");
  analyze->add_option("--epsilon", epsilon, "boundary band (default 1e-9)");
  analyze->add_flag("--json", json, "emit one JSON object");

  std::string corpus_path, grid_text, out_path = "-";
  int jobs = 1;
  auto* scan = app.add_subcommand(
      "scan", "apply every check to each graph6 line of a corpus");
  scan->add_option("corpus", corpus_path, "corpus file, or - for stdin")
      ->required();
  scan->add_option("--grid", grid_text,
                   "parameter grid, e.g. a=0,0.5,1,2;b=1;k=0.5,1,2");
  scan->add_option("--epsilon", epsilon, "boundary band (default 1e-9)");
  scan->add_option("--out", out_path, "report path, - for stdout");
  scan->add_flag("--json", json, "JSON lines instead of CSV");
  scan->add_option("--jobs", jobs, "worker threads (default 1)");

  std::string family, params_text;
  std::uint64_t seed = 0;
  int count = 1;
  auto* construct = app.add_subcommand(
      "construct", "emit graphs from the built-in families as graph6");
  construct
      ->add_option("family", family,
                   "complete_bipartite | family_b | join_exception | random")
      ->required();
  construct
      ->add_option("params", params_text,
                   "key=value list, e.g. delta=2,k=1,m=2 or n=12,p=0.3")
      ->required();
  construct->add_option("--out", out_path, "output path, - for stdout");
  construct->add_option("--seed", seed, "seed for random (default 0)");
  construct->add_option("--count", count,
                        "graphs to draw for random (default 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(graph6, a, b, k, alpha, epsilon, json);
    if (*scan) return run_scan(corpus_path, grid_text, epsilon, out_path,
                               json, jobs);
    return run_construct(family, params_text, out_path, seed, count);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
