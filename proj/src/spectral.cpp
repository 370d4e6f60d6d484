#include "specmatch/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>

#include "specmatch/prng.hpp"

namespace specmatch {

SpectralParams::SpectralParams(double a_, double b_) : a(a_), b(b_) {
  if (!(a >= 0.0) || !std::isfinite(a))
    throw std::domain_error("matrix parameter a must be >= 0");
  if (!(b > 0.0) || !std::isfinite(b))
    throw std::domain_error("matrix parameter b must be > 0");
}

SymMatrix::SymMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  e_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

std::size_t SymMatrix::idx(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(j);
}

void SymMatrix::set(int i, int j, double value) {
  if (!std::isfinite(value))
    throw std::invalid_argument("matrix entries must be finite");
  e_[idx(i, j)] = value;
  e_[idx(j, i)] = value;
}

double SymMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : e_) sum += v * v;
  return std::sqrt(sum);
}

SymMatrix build_matrix(const Graph& g, const SpectralParams& params) {
  const int n = g.vertex_count();
  SymMatrix m(n);
  for (int v = 0; v < n; ++v) {
    m.set(v, v, params.a * g.degree(v));
    for (int u : g.neighbors(v))
      if (u > v) m.set(v, u, params.b);
  }
  return m;
}

SymMatrix build_alpha_matrix(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error("alpha must lie in [0, 1]");
  if (alpha < 1.0) return build_matrix(g, SpectralParams(alpha, 1.0 - alpha));
  SymMatrix m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m.set(v, v, g.degree(v));
  return m;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      double v = a[static_cast<std::size_t>(p) * n + q];
      sum += v * v;
    }
  return std::sqrt(2.0 * sum);
}

// One Jacobi rotation annihilating a_pq, accumulated into the column
// basis v.
void rotate(std::vector<double>& a, std::vector<double>& v, int n, int p,
            int q) {
  const double apq = a[static_cast<std::size_t>(p) * n + q];
  const double app = a[static_cast<std::size_t>(p) * n + p];
  const double aqq = a[static_cast<std::size_t>(q) * n + q];
  const double tau = (aqq - app) / (2.0 * apq);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
  a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
  a[static_cast<std::size_t>(p) * n + q] = 0.0;
  a[static_cast<std::size_t>(q) * n + p] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    double aip = a[static_cast<std::size_t>(i) * n + p];
    double aiq = a[static_cast<std::size_t>(i) * n + q];
    a[static_cast<std::size_t>(i) * n + p] = c * aip - s * aiq;
    a[static_cast<std::size_t>(p) * n + i] = c * aip - s * aiq;
    a[static_cast<std::size_t>(i) * n + q] = s * aip + c * aiq;
    a[static_cast<std::size_t>(q) * n + i] = s * aip + c * aiq;
  }
  for (int i = 0; i < n; ++i) {
    double vip = v[static_cast<std::size_t>(i) * n + p];
    double viq = v[static_cast<std::size_t>(i) * n + q];
    v[static_cast<std::size_t>(i) * n + p] = c * vip - s * viq;
    v[static_cast<std::size_t>(i) * n + q] = s * vip + c * viq;
  }
}

}  // namespace

Spectrum eigenvalues(const SymMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("tolerance must be > 0");
  const int n = m.dim();
  std::vector<double> a = m.data();
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  // Converge well below the requested tolerance; the floor keeps the loop
  // finite when tol*1e-2 dips under machine precision for this matrix.
  const double fro = m.frobenius_norm();
  const double target =
      std::max(tol * 1e-2, 8.0 * n * DBL_EPSILON * std::max(fro, 1.0));
  const int max_sweeps = 100;

  double off = off_diagonal_norm(a, n);
  for (int sweep = 0; sweep < max_sweeps && off > target; ++sweep) {
    const double skip = target / (n > 1 ? n : 1);
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::fabs(a[static_cast<std::size_t>(p) * n + q]) > skip)
          rotate(a, v, n, p, q);
    off = off_diagonal_norm(a, n);
  }
  if (off > tol)
    throw std::runtime_error(
        "jacobi sweep cap reached with off-diagonal norm " +
        std::to_string(off));

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a[static_cast<std::size_t>(x) * n + x] >
           a[static_cast<std::size_t>(y) * n + y];
  });

  Spectrum s;
  s.values.reserve(static_cast<std::size_t>(n));
  for (int i : order) s.values.push_back(a[static_cast<std::size_t>(i) * n + i]);

  for (int col : order) {
    const double lambda = a[static_cast<std::size_t>(col) * n + col];
    for (int i = 0; i < n; ++i) {
      double mv = 0.0;
      for (int j = 0; j < n; ++j)
        mv += m(i, j) * v[static_cast<std::size_t>(j) * n + col];
      s.residual = std::max(
          s.residual,
          std::fabs(mv - lambda * v[static_cast<std::size_t>(i) * n + col]));
    }
  }
  return s;
}

double spectral_radius(const SymMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("tolerance must be > 0");
  const int n = m.dim();
  double max_row = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (m(i, j) < 0.0)
        throw std::domain_error(
            "spectral_radius requires an entrywise nonnegative matrix");
      row += m(i, j);
    }
    max_row = std::max(max_row, row);
  }

  // Shift keeps the dominant eigenvalue strictly largest in modulus even
  // for bipartite adjacency spectra (where -lambda_1 is present).
  const double shift = max_row + 1.0;
  std::vector<double> x(static_cast<std::size_t>(n),
                        1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(static_cast<std::size_t>(n));

  const double r_target = std::max(tol * 0.1, 64.0 * DBL_EPSILON * shift);
  double rho = 0.0;
  double prev_rho = 0.0;
  bool converged = false;
  bool restarted = false;
  int flat = 0;
  const int max_iter = 100000;
  for (int iter = 0; iter < max_iter; ++iter) {
    for (int i = 0; i < n; ++i) {
      double sum = shift * x[i];
      for (int j = 0; j < n; ++j) sum += m(i, j) * x[j];
      y[i] = sum;
    }
    rho = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double rnorm = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = y[i] - rho * x[i];
      rnorm += d * d;
    }
    rnorm = std::sqrt(rnorm);
    if (rnorm <= r_target) {
      converged = true;
      break;
    }
    flat = (std::fabs(rho - prev_rho) < tol * 1e-3) ? flat + 1 : 0;
    prev_rho = rho;
    if (flat >= 50 && !restarted) {
      // A stalled Rayleigh quotient with a large residual means the start
      // vector had no weight on the dominant eigenvector; reseed once.
      SplitMix64 rng(0x5eedf00dULL);
      for (double& xi : x) xi = rng.next_double() + 0.5;
      double norm = std::sqrt(
          std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
      for (double& xi : x) xi /= norm;
      restarted = true;
      flat = 0;
      continue;
    }
    double norm = std::sqrt(
        std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }

  const double power_value = rho - shift;
  const double jacobi_value = eigenvalues(m, tol).values.front();
  if (std::fabs(power_value - jacobi_value) > 10.0 * tol)
    throw std::runtime_error(
        "power iteration and jacobi disagree on the spectral radius: " +
        std::to_string(power_value) + " vs " + std::to_string(jacobi_value));
  if (!converged && std::fabs(power_value - jacobi_value) > tol)
    throw std::runtime_error("power iteration did not converge");
  return power_value;
}

QuotientMatrix quotient_matrix(
    const SymMatrix& m, const std::vector<std::vector<int>>& partition) {
  const int n = m.dim();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int covered = 0;
  for (const auto& cls : partition) {
    if (cls.empty())
      throw std::invalid_argument("partition class must be nonempty");
    for (int v : cls) {
      if (v < 0 || v >= n)
        throw std::out_of_range("partition index out of range");
      if (seen[v])
        throw std::invalid_argument("partition classes must be disjoint");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n)
    throw std::invalid_argument("partition must cover every index");

  QuotientMatrix q;
  q.blocks = partition;
  q.classes = static_cast<int>(partition.size());
  q.entries.assign(
      static_cast<std::size_t>(q.classes) * static_cast<std::size_t>(q.classes),
      0.0);
  q.equitable = true;
  for (int i = 0; i < q.classes; ++i) {
    for (int j = 0; j < q.classes; ++j) {
      double first = 0.0;
      double total = 0.0;
      bool have_first = false;
      for (int v : partition[i]) {
        double row_sum = 0.0;
        for (int u : partition[j]) row_sum += m(v, u);
        total += row_sum;
        if (!have_first) {
          first = row_sum;
          have_first = true;
        } else if (std::fabs(row_sum - first) >
                   1e-12 * std::max(1.0, std::fabs(first))) {
          q.equitable = false;
        }
      }
      q.entries[static_cast<std::size_t>(i) * q.classes + j] =
          total / static_cast<double>(partition[i].size());
    }
  }
  return q;
}

Spectrum quotient_spectrum(const QuotientMatrix& q, double tol) {
  SymMatrix b(q.classes);
  for (int i = 0; i < q.classes; ++i) {
    const double si = static_cast<double>(q.blocks[i].size());
    for (int j = i; j < q.classes; ++j) {
      const double sj = static_cast<double>(q.blocks[j].size());
      // entry(i,j)*|X_i| is the block sum; dividing by sqrt(|X_i||X_j|)
      // gives the symmetric matrix similar to the quotient.
      b.set(i, j, q.entry(i, j) * si / std::sqrt(si * sj));
    }
  }
  return eigenvalues(b, tol);
}

InterlacingResult interlaces(std::span<const double> theta,
                             std::span<const double> eta, double tol) {
  const std::size_t n = theta.size();
  const std::size_t m = eta.size();
  if (m < 1 || n <= m)
    throw std::invalid_argument(
        "interlacing needs sequences with |theta| > |eta| >= 1");
  if (!(tol >= 0.0)) throw std::domain_error("tolerance must be >= 0");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (theta[i] < theta[i + 1])
      throw std::invalid_argument("theta is not sorted non-increasing");
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (eta[i] < eta[i + 1])
      throw std::invalid_argument("eta is not sorted non-increasing");

  InterlacingResult out;
  out.holds = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (theta[i] + tol < eta[i] || eta[i] + tol < theta[n - m + i]) {
      out.holds = false;
      break;
    }
  }
  if (!out.holds) return out;

  for (std::size_t split = 0; split <= m; ++split) {
    bool ok = true;
    for (std::size_t i = 0; i < split && ok; ++i)
      ok = std::fabs(theta[i] - eta[i]) <= tol;
    for (std::size_t i = split; i < m && ok; ++i)
      ok = std::fabs(theta[n - m + i] - eta[i]) <= tol;
    if (ok) {
      out.tight = true;
      break;
    }
  }
  return out;
}

double quotient_radius_bipartite(double a, double r, double s, double t) {
  if (!(a >= 0.0)) throw std::domain_error("a must be >= 0");
  if (!(r >= 0.0)) throw std::domain_error("edge count must be >= 0");
  if (!(s > 0.0) || !(t > 0.0))
    throw std::domain_error("side sizes must be > 0");
  const double sum = r / s + r / t;
  const double diff = r / s - r / t;
  const double disc = (a * a - 1.0) * diff * diff + sum * sum;
  return 0.5 * (a * sum + std::sqrt(std::max(disc, 0.0)));
}

double family_quotient_radius(double a, int delta, int x_size, int y_size) {
  if (delta < 1) throw std::domain_error("delta must be >= 1");
  if (x_size < 1 || y_size < 1)
    throw std::domain_error("side sizes must be >= 1");
  return quotient_radius_bipartite(
      a, static_cast<double>(delta) * y_size, x_size, y_size);
}

}  // namespace specmatch
