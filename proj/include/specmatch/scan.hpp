#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specmatch/bounds.hpp"
#include "specmatch/graph.hpp"

namespace specmatch {

/// Identifiers of the checks a scan applies. These are the stable ids used
/// in report files; see the README table for the statement each one
/// verifies.
enum class TheoremId {
  th2,    // minimum-degree condition
  th1,    // spectral condition on the graph
  th5,    // spectral condition on the complement
  co3i,   // signless Laplacian instance on the graph
  co3ii,  // signless Laplacian instance on the complement
  co4i,   // convex family, alpha = 0
  co4ii,  // convex family, 0 < alpha <= 1/2
  co4iii, // convex family, 1/2 < alpha <= 1
  co4iv,  // convex family on the complement
  th3,    // lower bound on mu_f
  th4,    // perfect-matching condition on the graph
  th7,    // perfect-matching condition on the complement
  fpm_final,  // refined complement condition, reported as "final"
};

std::string_view to_string(TheoremId id);

/// Cartesian parameter grid. Defaults match the standing certification
/// sweep. a >= 0, b > 0, k > 0 are validated at parse time; k < n is
/// checked per graph and emits a vacuous record rather than an error.
struct GridSpec {
  std::vector<double> a{0.0, 0.5, 1.0, 2.0};
  std::vector<double> b{1.0};
  std::vector<double> k{0.5, 1.0, 2.0};
};

/// Parses "a=0,0.5,1,2;b=1;k=0.5,1,2". Missing keys keep their defaults.
GridSpec parse_grid(std::string_view text);

struct ScanRecord {
  TheoremId theorem = TheoremId::th2;
  int n = 0;
  int delta = 0;
  double a = 0.0;
  double b = 0.0;
  double k = 0.0;
  double lambda1 = 0.0;
  double threshold = 0.0;
  int two_mu_f = 0;
  VerdictLabel verdict = VerdictLabel::vacuous;
};

/// Every record for one graph, in a fixed order (th2 per k; th1/th5 per
/// (a,b,k); co3 per k; co4 per (alpha,k) for grid a values <= 1, or for
/// alpha_override when given; th3/th4/th7/final per a). Conventions in the
/// k column: 0 marks the k-free lower bound records, 1 is implicit for the
/// perfect-matching checks. th2 records carry a = b = 0 and show delta in
/// the lambda1 column.
std::vector<ScanRecord> evaluate_graph(
    const Graph& g, const GridSpec& grid, double epsilon,
    std::optional<double> alpha_override = std::nullopt);

struct ScanCounts {
  long vacuous = 0;
  long confirmed = 0;
  long boundary = 0;
  long counterexample = 0;
  long graphs = 0;
  long skipped = 0;
};

struct CounterexampleRecord {
  std::string graph6;
  ScanRecord record;
};

struct ScanReport {
  ScanCounts counts;
  std::vector<CounterexampleRecord> counterexamples;
  std::vector<std::string> skipped_lines;  // "line N: reason"
};

/// Called once per corpus line, in input order, jobs notwithstanding.
using RecordSink = std::function<void(
    std::size_t line_index, const std::string& graph6,
    const std::vector<ScanRecord>& records)>;

/// Applies evaluate_graph to every corpus line. Lines that are empty,
/// comments (# or >>), or unparseable are recorded as skipped, never
/// silently dropped. jobs > 1 distributes graphs over a worker pool; the
/// sink still sees lines in input order, so reports are byte-identical
/// regardless of the job count.
ScanReport scan_corpus(const std::vector<std::string>& lines,
                       const GridSpec& grid, double epsilon, int jobs,
                       const RecordSink& sink = nullptr);

}  // namespace specmatch
