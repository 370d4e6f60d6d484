#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specmatch/fracmatch.hpp"
#include "specmatch/graph.hpp"
#include "specmatch/spectral.hpp"

namespace specmatch {

/// One theorem check against one graph. k is the slack parameter of the
/// conclusion "2*mu_f > n - k" and must land in (0, n) for the target
/// graph; epsilon is the width of the boundary band around the spectral
/// threshold, inside which no counterexample is ever declared.
struct BoundQuery {
  double k = 1.0;
  SpectralParams params{0.0, 1.0};
  double epsilon = 1e-9;
};

/// Outcome of a single check.
///   premise_holds    strict premise (e.g. lambda1 < threshold - epsilon)
///   conclusion_holds the guaranteed conclusion, evaluated exactly
///   boundary         |lambda1 - threshold| <= epsilon
/// A counterexample is premise && !conclusion && !boundary; the quantities
/// are kept so reports can be reproduced. extra carries named diagnostic
/// values (routing, branch selection, exception flags).
struct Verdict {
  bool premise_holds = false;
  bool conclusion_holds = false;
  bool boundary = false;
  double lambda1 = 0.0;
  double threshold = 0.0;
  HalfInt mu_f;
  std::map<std::string, double> extra;
};

enum class VerdictLabel { vacuous, confirmed, boundary, counterexample };

VerdictLabel verdict_label(const Verdict& v);
std::string_view to_string(VerdictLabel label);

/// Spectral threshold
///   a = 0:        delta * sqrt(1 + 2k/(n-k))
///   0 < a <= 1:   2 a delta n / (n-k)
///   a > 1:        a delta (n+k) / (n-k)
/// The jump at a = 0 is genuine, not a removable discontinuity. Domain:
/// a >= 0, 0 < k < n, 1 <= delta <= (n-k)/2; violations raise
/// std::domain_error naming the constraint.
double phi(double a, int n, int delta, double k);

/// delta > (n-k)/2 forces 2*mu_f > n-k outright. Exact arithmetic: both
/// comparisons reduce to an integer against k. No boundary verdicts.
Verdict check_min_degree_condition(const Graph& g, double k);

/// lambda1(a D + b A) < b * phi(a/b, n, delta, k) implies 2*mu_f > n - k
/// for connected graphs with delta <= (n-k)/2. Graphs with
/// delta > (n-k)/2 are dispatched to check_min_degree_condition instead
/// (extra["routed"] = 1).
Verdict check_spectral_condition(const Graph& g, const BoundQuery& query);

/// Complement-side variant: lambda1 of a D + b A built on the complement,
/// against (a+b)(delta + k - 1) with delta still measured on g.
Verdict check_complement_condition(const Graph& g, const BoundQuery& query);

enum class AlphaBranch {
  graph_side,       // alpha*D + (1-alpha)*A on g, threshold by alpha range
  complement_side,  // same matrix on the complement, threshold delta+k-1
};

/// Checks the convex family alpha*D + (1-alpha)*A, alpha in [0, 1]. For
/// alpha < 1 this delegates to the (a, b) checks with (alpha, 1-alpha) and
/// asserts that the delegated threshold equals the closed form for the
/// branch; alpha = 1 is evaluated directly on the degree diagonal.
/// extra["branch"] records 1..4 (alpha = 0, alpha <= 1/2, alpha > 1/2,
/// complement).
Verdict check_alpha_condition(const Graph& g, double alpha, double k,
                              double epsilon = 1e-9,
                              AlphaBranch branch = AlphaBranch::graph_side);

/// Guaranteed lower bound on mu_f from lambda1 = lambda1(a D + A):
///   a = 0:      n delta^2 / (lambda1^2 + delta^2)
///   0 < a <= 1: a delta n / lambda1
///   a > 1:      a delta n / (lambda1 + a delta)
/// Evaluated for any connected graph; in_regime marks delta <= (n-1)/2.
/// tight_outside_family is set when equality holds but the graph fails
/// the structural biregular-family test for (delta, n - 2*mu_f), so
/// equality cases outside the known tight family are surfaced rather than
/// asserted against.
struct LowerBoundResult {
  double bound = 0.0;
  bool holds = false;
  bool tight = false;
  bool in_regime = false;
  bool tight_outside_family = false;
  double lambda1 = 0.0;
  HalfInt mu_f;
};

LowerBoundResult mu_f_lower_bound(const Graph& g, double a,
                                  double epsilon = 1e-9);

/// The three k = 1 (perfect fractional matching) conditions, evaluated
/// together on the a D + A matrices of g and its complement:
///   graph_condition      lambda1(g) < phi(a, n, delta, 1)
///   complement_condition lambda1(complement) < (a+1) delta
///   complement_refined   lambda1(complement) < (a+1)(delta+1), which
///                        guarantees a perfect fractional matching unless
///                        the graph is an isolated-class join; that
///                        exception is verified constructively
///                        (extra["exception"] = 1) instead of being taken
///                        on faith.
struct FpmVerdicts {
  Verdict graph_condition;
  Verdict complement_condition;
  Verdict complement_refined;
};

FpmVerdicts check_fpm_spectral(const Graph& g, double a,
                               double epsilon = 1e-9);

/// If g is exactly (delta+1) isolated vertices joined to a graph on delta
/// vertices, returns that delta-vertex class; otherwise nothing. The test
/// is structural: n = 2*delta+1 and the degree-delta vertices form an
/// independent set of size delta+1 adjacent to everything else.
std::optional<std::vector<int>> join_exception_witness(const Graph& g);

}  // namespace specmatch
