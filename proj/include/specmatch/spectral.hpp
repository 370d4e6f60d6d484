#pragma once

#include <span>
#include <vector>

#include "specmatch/graph.hpp"

namespace specmatch {

/// Parameters (a, b) of the matrix family a*D(G) + b*A(G). Validated at
/// construction: a >= 0 and b > 0. a = 0 selects the adjacency matrix
/// itself, (1, 1) the signless Laplacian.
struct SpectralParams {
  double a;
  double b;
  SpectralParams(double a, double b);
};

/// Dense symmetric matrix with finite entries. set() writes both (i, j)
/// and (j, i) so symmetry holds exactly by construction.
class SymMatrix {
 public:
  explicit SymMatrix(int n);

  int dim() const { return n_; }
  double operator()(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, double value);
  const std::vector<double>& data() const { return e_; }
  double frobenius_norm() const;

 private:
  std::size_t idx(int i, int j) const;
  int n_;
  std::vector<double> e_;
};

/// a*D(g) + b*A(g).
SymMatrix build_matrix(const Graph& g, const SpectralParams& params);

/// alpha*D(g) + (1-alpha)*A(g) for alpha in [0, 1]. This is the one place
/// where the adjacency coefficient may vanish: alpha = 1 yields the bare
/// degree diagonal, which the (a, b) family above deliberately excludes.
SymMatrix build_alpha_matrix(const Graph& g, double alpha);

struct Spectrum {
  /// Eigenvalues in non-increasing order.
  std::vector<double> values;
  /// max_i max-norm of M*v_i - values[i]*v_i over the computed pairs.
  double residual = 0.0;
};

/// Full spectrum via cyclic Jacobi rotations with threshold sweeps.
/// Deterministic; throws std::runtime_error (reporting the off-diagonal
/// norm reached) if 100 sweeps do not push the off-diagonal Frobenius norm
/// below tol.
Spectrum eigenvalues(const SymMatrix& m, double tol = 1e-10);

/// Largest eigenvalue of an entrywise nonnegative symmetric matrix.
/// Runs shifted power iteration (all-ones start, Rayleigh-quotient
/// stopping, one seeded pseudorandom restart on stall) and cross-checks
/// the result against eigenvalues().values[0]; disagreement beyond 10*tol
/// is an error, never silently resolved in favor of either route.
double spectral_radius(const SymMatrix& m, double tol = 1e-10);

struct QuotientMatrix {
  std::vector<std::vector<int>> blocks;
  int classes = 0;
  /// Row-major m x m matrix of average block row sums.
  std::vector<double> entries;
  /// True iff every block of the source matrix has constant row sums
  /// (checked per row against the block's first row within 1e-12, which is
  /// exact for the dyadic-rational entries the graph matrices produce).
  bool equitable = false;

  double entry(int i, int j) const {
    return entries[static_cast<std::size_t>(i) *
                       static_cast<std::size_t>(classes) +
                   static_cast<std::size_t>(j)];
  }
};

/// Quotient of m over an ordered partition of its index set. The partition
/// must cover 0..dim-1 with disjoint nonempty classes.
QuotientMatrix quotient_matrix(const SymMatrix& m,
                               const std::vector<std::vector<int>>& partition);

/// Eigenvalues of the (generally non-symmetric) quotient, obtained from
/// the similar symmetric matrix B_ij = blocksum_ij / sqrt(|X_i| |X_j|).
Spectrum quotient_spectrum(const QuotientMatrix& q, double tol = 1e-10);

struct InterlacingResult {
  bool holds = false;
  /// True iff some split index k makes the top k and bottom m-k inequalities
  /// equalities (within tol).
  bool tight = false;
};

/// Checks theta_i >= eta_i >= theta_{n-m+i} (1-based) for non-increasing
/// sequences with |theta| > |eta| >= 1, within tol.
InterlacingResult interlaces(std::span<const double> theta,
                             std::span<const double> eta, double tol = 1e-9);

/// Largest eigenvalue of the 2x2 quotient [[a r/s, r/s], [r/t, a r/t]]
/// of a biregular bipartite graph with r edges and side degrees r/s, r/t:
///   (a(r/s + r/t) + sqrt((a^2-1)(r/s - r/t)^2 + (r/s + r/t)^2)) / 2.
double quotient_radius_bipartite(double a, double r, double s, double t);

/// Same value expressed through (delta, |X|, |Y|) for a bipartite graph
/// whose Y side is delta-regular and whose X side has constant degree
/// delta*|Y|/|X|.
double family_quotient_radius(double a, int delta, int x_size, int y_size);

}  // namespace specmatch
