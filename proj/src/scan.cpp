#include "specmatch/scan.hpp"

#include <atomic>
#include <charconv>
#include <stdexcept>
#include <thread>

namespace specmatch {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::th2: return "th2";
    case TheoremId::th1: return "th1";
    case TheoremId::th5: return "th5";
    case TheoremId::co3i: return "co3i";
    case TheoremId::co3ii: return "co3ii";
    case TheoremId::co4i: return "co4i";
    case TheoremId::co4ii: return "co4ii";
    case TheoremId::co4iii: return "co4iii";
    case TheoremId::co4iv: return "co4iv";
    case TheoremId::th3: return "th3";
    case TheoremId::th4: return "th4";
    case TheoremId::th7: return "th7";
    case TheoremId::fpm_final: return "final";
  }
  return "?";
}

GridSpec parse_grid(std::string_view text) {
  GridSpec grid;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    start = end + 1;
    if (part.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t eq = part.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("grid: expected key=values in '" +
                                  std::string(part) + "'");
    std::string_view key = part.substr(0, eq);
    std::vector<double>* target = nullptr;
    if (key == "a") target = &grid.a;
    else if (key == "b") target = &grid.b;
    else if (key == "k") target = &grid.k;
    else
      throw std::invalid_argument("grid: unknown key '" + std::string(key) +
                                  "'");
    target->clear();
    std::string_view values = part.substr(eq + 1);
    std::size_t vstart = 0;
    while (vstart <= values.size()) {
      std::size_t vend = values.find(',', vstart);
      if (vend == std::string_view::npos) vend = values.size();
      std::string token(values.substr(vstart, vend - vstart));
      if (token.empty())
        throw std::invalid_argument("grid: empty value for '" +
                                    std::string(key) + "'");
      std::size_t used = 0;
      double value = std::stod(token, &used);
      if (used != token.size())
        throw std::invalid_argument("grid: bad number '" + token + "'");
      target->push_back(value);
      if (vend == values.size()) break;
      vstart = vend + 1;
    }
    if (end == text.size()) break;
  }
  for (double a : grid.a)
    if (!(a >= 0.0)) throw std::invalid_argument("grid: a must be >= 0");
  for (double b : grid.b)
    if (!(b > 0.0)) throw std::invalid_argument("grid: b must be > 0");
  for (double k : grid.k)
    if (!(k > 0.0)) throw std::invalid_argument("grid: k must be > 0");
  if (grid.a.empty() || grid.b.empty() || grid.k.empty())
    throw std::invalid_argument("grid: a, b and k all need values");
  return grid;
}

namespace {

ScanRecord from_verdict(TheoremId id, const Graph& g, double a, double b,
                        double k, const Verdict& v) {
  ScanRecord r;
  r.theorem = id;
  r.n = g.vertex_count();
  r.delta = degree_profile(g).min_degree;
  r.a = a;
  r.b = b;
  r.k = k;
  r.lambda1 = v.lambda1;
  r.threshold = v.threshold;
  r.two_mu_f = v.mu_f.twice;
  r.verdict = verdict_label(v);
  return r;
}

// k values outside (0, n) never reach the checks; the record stays in the
// report as vacuous so grids stay rectangular.
bool k_fits(const Graph& g, double k) {
  return k > 0.0 && k < static_cast<double>(g.vertex_count());
}

ScanRecord vacuous_record(TheoremId id, const Graph& g, double a, double b,
                          double k, int two_mu_f) {
  ScanRecord r;
  r.theorem = id;
  r.n = g.vertex_count();
  r.delta = degree_profile(g).min_degree;
  r.a = a;
  r.b = b;
  r.k = k;
  r.two_mu_f = two_mu_f;
  r.verdict = VerdictLabel::vacuous;
  return r;
}

}  // namespace

std::vector<ScanRecord> evaluate_graph(const Graph& g, const GridSpec& grid,
                                       double epsilon,
                                       std::optional<double> alpha_override) {
  std::vector<ScanRecord> records;
  const int two_mu =
      g.vertex_count() >= 2 ? fractional_matching_number(g).twice : 0;

  for (double k : grid.k) {
    if (!k_fits(g, k)) {
      records.push_back(vacuous_record(TheoremId::th2, g, 0, 0, k, two_mu));
      continue;
    }
    records.push_back(
        from_verdict(TheoremId::th2, g, 0, 0, k,
                     check_min_degree_condition(g, k)));
  }

  for (double a : grid.a)
    for (double b : grid.b)
      for (double k : grid.k) {
        if (!k_fits(g, k)) {
          records.push_back(vacuous_record(TheoremId::th1, g, a, b, k, two_mu));
          records.push_back(vacuous_record(TheoremId::th5, g, a, b, k, two_mu));
          continue;
        }
        BoundQuery query{k, SpectralParams(a, b), epsilon};
        records.push_back(from_verdict(TheoremId::th1, g, a, b, k,
                                       check_spectral_condition(g, query)));
        records.push_back(from_verdict(TheoremId::th5, g, a, b, k,
                                       check_complement_condition(g, query)));
      }

  for (double k : grid.k) {
    if (!k_fits(g, k)) {
      records.push_back(vacuous_record(TheoremId::co3i, g, 1, 1, k, two_mu));
      records.push_back(vacuous_record(TheoremId::co3ii, g, 1, 1, k, two_mu));
      continue;
    }
    BoundQuery query{k, SpectralParams(1.0, 1.0), epsilon};
    records.push_back(from_verdict(TheoremId::co3i, g, 1, 1, k,
                                   check_spectral_condition(g, query)));
    records.push_back(from_verdict(TheoremId::co3ii, g, 1, 1, k,
                                   check_complement_condition(g, query)));
  }

  std::vector<double> alphas;
  if (alpha_override) {
    alphas.push_back(*alpha_override);
  } else {
    for (double a : grid.a)
      if (a <= 1.0) alphas.push_back(a);
  }
  for (double alpha : alphas)
    for (double k : grid.k) {
      TheoremId branch = alpha == 0.0  ? TheoremId::co4i
                         : alpha <= 0.5 ? TheoremId::co4ii
                                        : TheoremId::co4iii;
      if (!k_fits(g, k)) {
        records.push_back(
            vacuous_record(branch, g, alpha, 1.0 - alpha, k, two_mu));
        records.push_back(
            vacuous_record(TheoremId::co4iv, g, alpha, 1.0 - alpha, k, two_mu));
        continue;
      }
      records.push_back(from_verdict(
          branch, g, alpha, 1.0 - alpha, k,
          check_alpha_condition(g, alpha, k, epsilon,
                                AlphaBranch::graph_side)));
      records.push_back(from_verdict(
          TheoremId::co4iv, g, alpha, 1.0 - alpha, k,
          check_alpha_condition(g, alpha, k, epsilon,
                                AlphaBranch::complement_side)));
    }

  for (double a : grid.a) {
    auto lower = mu_f_lower_bound(g, a, epsilon);
    ScanRecord r;
    r.theorem = TheoremId::th3;
    r.n = g.vertex_count();
    r.delta = degree_profile(g).min_degree;
    r.a = a;
    r.b = 1.0;
    r.k = 0.0;
    r.lambda1 = lower.lambda1;
    r.threshold = lower.bound;
    r.two_mu_f = two_mu;
    if (!lower.in_regime)
      r.verdict = VerdictLabel::vacuous;
    else if (!lower.holds)
      r.verdict = VerdictLabel::counterexample;
    else if (lower.tight)
      r.verdict = VerdictLabel::boundary;
    else
      r.verdict = VerdictLabel::confirmed;
    records.push_back(r);

    auto fpm = check_fpm_spectral(g, a, epsilon);
    records.push_back(
        from_verdict(TheoremId::th4, g, a, 1, 1, fpm.graph_condition));
    records.push_back(
        from_verdict(TheoremId::th7, g, a, 1, 1, fpm.complement_condition));
    records.push_back(
        from_verdict(TheoremId::fpm_final, g, a, 1, 1,
                     fpm.complement_refined));
  }

  return records;
}

ScanReport scan_corpus(const std::vector<std::string>& lines,
                       const GridSpec& grid, double epsilon, int jobs,
                       const RecordSink& sink) {
  if (jobs < 1) throw std::domain_error("jobs must be >= 1");
  ScanReport report;

  struct LineResult {
    bool skipped = false;
    std::string note;
    std::string graph6;
    std::vector<ScanRecord> records;
  };

  auto process = [&](std::size_t index, LineResult& out) {
    const std::string& raw = lines[index];
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') {
      out.skipped = true;
      out.note = "line " + std::to_string(index + 1) + ": blank or comment";
      return;
    }
    try {
      Graph g = parse_graph6(line);
      out.graph6 = write_graph6(g);
      out.records = evaluate_graph(g, grid, epsilon);
    } catch (const std::exception& e) {
      out.skipped = true;
      out.note =
          "line " + std::to_string(index + 1) + ": " + e.what();
    }
  };

  std::vector<LineResult> results(lines.size());
  const int workers =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), lines.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < lines.size(); ++i) process(i, results[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < lines.size();
             i = next.fetch_add(1))
          process(i, results[i]);
      });
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < results.size(); ++i) {
    LineResult& r = results[i];
    if (r.skipped) {
      ++report.counts.skipped;
      report.skipped_lines.push_back(r.note);
      continue;
    }
    ++report.counts.graphs;
    for (const ScanRecord& rec : r.records) {
      switch (rec.verdict) {
        case VerdictLabel::vacuous: ++report.counts.vacuous; break;
        case VerdictLabel::confirmed: ++report.counts.confirmed; break;
        case VerdictLabel::boundary: ++report.counts.boundary; break;
        case VerdictLabel::counterexample:
          ++report.counts.counterexample;
          report.counterexamples.push_back({r.graph6, rec});
          break;
      }
    }
    if (sink) sink(i, r.graph6, r.records);
  }
  return report;
}

}  // namespace specmatch
