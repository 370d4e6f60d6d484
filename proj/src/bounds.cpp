#include "specmatch/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "specmatch/families.hpp"

namespace specmatch {

VerdictLabel verdict_label(const Verdict& v) {
  if (v.boundary) return VerdictLabel::boundary;
  if (!v.premise_holds) return VerdictLabel::vacuous;
  return v.conclusion_holds ? VerdictLabel::confirmed
                            : VerdictLabel::counterexample;
}

std::string_view to_string(VerdictLabel label) {
  switch (label) {
    case VerdictLabel::vacuous: return "vacuous";
    case VerdictLabel::confirmed: return "confirmed";
    case VerdictLabel::boundary: return "boundary";
    case VerdictLabel::counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

double phi(double a, int n, int delta, double k) {
  if (!(a >= 0.0)) throw std::domain_error("phi: a must be >= 0");
  if (!(k > 0.0) || !(k < static_cast<double>(n)))
    throw std::domain_error("phi: k must lie in (0, n)");
  if (delta < 1) throw std::domain_error("phi: delta must be >= 1");
  // delta <= (n-k)/2 exactly, i.e. k <= n - 2*delta with an integer right
  // side, so the comparison is exact in doubles.
  if (k > static_cast<double>(n - 2 * delta))
    throw std::domain_error("phi: delta must satisfy delta <= (n-k)/2");
  const double nd = static_cast<double>(n);
  if (a == 0.0) return delta * std::sqrt(1.0 + 2.0 * k / (nd - k));
  if (a <= 1.0) return 2.0 * a * delta * nd / (nd - k);
  return a * delta * (nd + k) / (nd - k);
}

namespace {

// Exact evaluation of "2*mu_f > n - k": the left side and n are integers,
// so this is the integer-vs-double comparison k > n - 2*mu_f, which IEEE
// arithmetic performs without rounding at this scale.
bool conclusion_exceeds(const Graph& g, double k, const HalfInt& mu) {
  return k > static_cast<double>(g.vertex_count() - mu.twice);
}

void stamp_common(Verdict& v, const Graph& g, double k) {
  v.extra["n"] = g.vertex_count();
  v.extra["k"] = k;
  v.extra["delta"] = degree_profile(g).min_degree;
}

// Shared hypothesis gate. Returns false (with the verdict already filled
// in as vacuous) when the theorem's standing hypotheses cannot hold.
bool gate_hypotheses(Verdict& v, const Graph& g, double k,
                     double epsilon = 0.0) {
  if (!(epsilon >= 0.0)) throw std::domain_error("epsilon must be >= 0");
  stamp_common(v, g, k);
  if (g.vertex_count() >= 2) v.mu_f = fractional_matching_number(g);
  if (!(k > 0.0) || !(k < static_cast<double>(g.vertex_count())))
    throw std::domain_error("k must lie in (0, n)");
  if (g.vertex_count() <= 1) {
    v.extra["trivial"] = 1;
    return false;
  }
  if (!is_connected(g)) {
    v.extra["disconnected"] = 1;
    return false;
  }
  return true;
}

}  // namespace

Verdict check_min_degree_condition(const Graph& g, double k) {
  Verdict v;
  if (!gate_hypotheses(v, g, k)) return v;
  const int n = g.vertex_count();
  const int delta = degree_profile(g).min_degree;
  v.lambda1 = static_cast<double>(delta);
  v.threshold = (static_cast<double>(n) - k) / 2.0;
  v.premise_holds = k > static_cast<double>(n - 2 * delta);
  v.conclusion_holds = conclusion_exceeds(g, k, v.mu_f);
  return v;
}

Verdict check_spectral_condition(const Graph& g, const BoundQuery& query) {
  Verdict v;
  if (!gate_hypotheses(v, g, query.k, query.epsilon)) return v;
  const int n = g.vertex_count();
  const int delta = degree_profile(g).min_degree;
  if (query.k > static_cast<double>(n - 2 * delta)) {
    v = check_min_degree_condition(g, query.k);
    v.extra["routed"] = 1;
    return v;
  }
  v.lambda1 = spectral_radius(build_matrix(g, query.params));
  v.threshold =
      query.params.b * phi(query.params.a / query.params.b, n, delta, query.k);
  v.boundary = std::fabs(v.lambda1 - v.threshold) <= query.epsilon;
  v.premise_holds = v.lambda1 < v.threshold - query.epsilon;
  v.conclusion_holds = conclusion_exceeds(g, query.k, v.mu_f);
  return v;
}

Verdict check_complement_condition(const Graph& g, const BoundQuery& query) {
  Verdict v;
  if (!gate_hypotheses(v, g, query.k, query.epsilon)) return v;
  const int n = g.vertex_count();
  const int delta = degree_profile(g).min_degree;
  if (query.k > static_cast<double>(n - 2 * delta)) {
    v = check_min_degree_condition(g, query.k);
    v.extra["routed"] = 1;
    return v;
  }
  v.lambda1 = spectral_radius(build_matrix(complement(g), query.params));
  v.threshold = (query.params.a + query.params.b) * (delta + query.k - 1.0);
  v.boundary = std::fabs(v.lambda1 - v.threshold) <= query.epsilon;
  v.premise_holds = v.lambda1 < v.threshold - query.epsilon;
  v.conclusion_holds = conclusion_exceeds(g, query.k, v.mu_f);
  return v;
}

Verdict check_alpha_condition(const Graph& g, double alpha, double k,
                              double epsilon, AlphaBranch branch) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error("alpha must lie in [0, 1]");
  const bool complement_side = branch == AlphaBranch::complement_side;

  Verdict v;
  if (alpha < 1.0) {
    BoundQuery query{k, SpectralParams(alpha, 1.0 - alpha), epsilon};
    v = complement_side ? check_complement_condition(g, query)
                        : check_spectral_condition(g, query);
  } else {
    if (!gate_hypotheses(v, g, k, epsilon)) {
      v.extra["alpha"] = alpha;
      v.extra["branch"] = complement_side ? 4 : 3;
      return v;
    }
    const int n = g.vertex_count();
    const int delta = degree_profile(g).min_degree;
    if (k > static_cast<double>(n - 2 * delta)) {
      v = check_min_degree_condition(g, k);
      v.extra["routed"] = 1;
    } else {
      v.lambda1 = spectral_radius(
          build_alpha_matrix(complement_side ? complement(g) : g, 1.0));
      v.threshold = complement_side
                        ? delta + k - 1.0
                        : delta * (static_cast<double>(n) + k) /
                              (static_cast<double>(n) - k);
      v.boundary = std::fabs(v.lambda1 - v.threshold) <= epsilon;
      v.premise_holds = v.lambda1 < v.threshold - epsilon;
      v.conclusion_holds = conclusion_exceeds(g, k, v.mu_f);
    }
  }

  v.extra["alpha"] = alpha;
  int branch_id;
  if (complement_side)
    branch_id = 4;
  else if (alpha == 0.0)
    branch_id = 1;
  else if (alpha <= 0.5)
    branch_id = 2;
  else
    branch_id = 3;
  v.extra["branch"] = branch_id;

  // The delegated thresholds must coincide with the published closed forms
  // for each branch; drift here would mean the two formulations diverged.
  if (!v.extra.contains("routed") && !v.extra.contains("trivial") &&
      !v.extra.contains("disconnected")) {
    const double n = v.extra["n"];
    const double delta = v.extra["delta"];
    double closed_form;
    switch (branch_id) {
      case 1: closed_form = delta * std::sqrt(1.0 + 2.0 * k / (n - k)); break;
      case 2: closed_form = 2.0 * alpha * delta * n / (n - k); break;
      case 3: closed_form = alpha * delta * (n + k) / (n - k); break;
      default: closed_form = delta + k - 1.0; break;
    }
    if (std::fabs(v.threshold - closed_form) >
        1e-9 * std::max(1.0, std::fabs(closed_form)))
      throw std::logic_error("alpha threshold drifted from its closed form");
  }
  return v;
}

LowerBoundResult mu_f_lower_bound(const Graph& g, double a, double epsilon) {
  if (!(a >= 0.0)) throw std::domain_error("a must be >= 0");
  if (!(epsilon >= 0.0)) throw std::domain_error("epsilon must be >= 0");
  LowerBoundResult out;
  const int n = g.vertex_count();
  const int delta = n > 0 ? degree_profile(g).min_degree : 0;
  if (n == 0) return out;
  out.mu_f = fractional_matching_number(g);
  if (delta == 0) {
    // Isolated vertices give nothing to bound with; mu_f >= 0 trivially.
    out.holds = true;
    out.tight = out.mu_f.twice == 0;
    return out;
  }
  out.in_regime = is_connected(g) && 2 * delta <= n - 1;
  out.lambda1 = spectral_radius(build_matrix(g, SpectralParams(a, 1.0)));
  const double nd = static_cast<double>(n);
  const double dd = static_cast<double>(delta);
  if (a == 0.0)
    out.bound = nd * dd * dd / (out.lambda1 * out.lambda1 + dd * dd);
  else if (a <= 1.0)
    out.bound = a * dd * nd / out.lambda1;
  else
    out.bound = a * dd * nd / (out.lambda1 + a * dd);
  const double mu = 0.5 * out.mu_f.twice;
  out.holds = mu >= out.bound - epsilon;
  out.tight = std::fabs(mu - out.bound) <= epsilon;
  if (out.tight) {
    const int k_star = n - out.mu_f.twice;
    out.tight_outside_family = !matches_family_b(g, delta, k_star);
  }
  return out;
}

std::optional<std::vector<int>> join_exception_witness(const Graph& g) {
  const int n = g.vertex_count();
  const int delta = n > 0 ? degree_profile(g).min_degree : 0;
  if (delta < 1 || n != 2 * delta + 1) return std::nullopt;
  std::vector<int> low, high;
  for (int v = 0; v < n; ++v)
    (g.degree(v) == delta ? low : high).push_back(v);
  if (static_cast<int>(low.size()) != delta + 1) return std::nullopt;
  for (int t : low) {
    for (int u : low)
      if (u != t && g.has_edge(t, u)) return std::nullopt;
    for (int s : high)
      if (!g.has_edge(t, s)) return std::nullopt;
  }
  return high;
}

FpmVerdicts check_fpm_spectral(const Graph& g, double a, double epsilon) {
  if (!(a >= 0.0)) throw std::domain_error("a must be >= 0");
  if (!(epsilon >= 0.0)) throw std::domain_error("epsilon must be >= 0");
  FpmVerdicts out;
  const int n = g.vertex_count();
  const int delta = n > 0 ? degree_profile(g).min_degree : 0;

  auto gate = [&](Verdict& v) {
    v.extra["n"] = n;
    v.extra["k"] = 1.0;
    v.extra["delta"] = delta;
    if (n >= 2) v.mu_f = fractional_matching_number(g);
    if (n <= 1) {
      v.extra["trivial"] = 1;
      return false;
    }
    if (!is_connected(g)) {
      v.extra["disconnected"] = 1;
      return false;
    }
    if (2 * delta > n - 1 || delta < 1) {
      // Covered by the plain minimum-degree condition; out of scope here.
      v.extra["out_of_regime"] = 1;
      return false;
    }
    return true;
  };

  const bool live = gate(out.graph_condition);
  gate(out.complement_condition);
  gate(out.complement_refined);
  if (!live) return out;

  const bool fpm = has_fractional_perfect_matching(g);
  const double lambda_g =
      spectral_radius(build_matrix(g, SpectralParams(a, 1.0)));
  const double lambda_c =
      spectral_radius(build_matrix(complement(g), SpectralParams(a, 1.0)));

  auto fill = [&](Verdict& v, double lambda, double threshold) {
    v.lambda1 = lambda;
    v.threshold = threshold;
    v.boundary = std::fabs(lambda - threshold) <= epsilon;
    v.premise_holds = lambda < threshold - epsilon;
    v.conclusion_holds = fpm;
  };
  fill(out.graph_condition, lambda_g, phi(a, n, delta, 1.0));
  fill(out.complement_condition, lambda_c, (a + 1.0) * delta);
  fill(out.complement_refined, lambda_c, (a + 1.0) * (delta + 1.0));

  if (out.complement_refined.premise_holds && !fpm) {
    if (auto witness = join_exception_witness(g)) {
      out.complement_refined.conclusion_holds = true;
      out.complement_refined.extra["exception"] = 1;
    }
  }
  return out;
}

}  // namespace specmatch
