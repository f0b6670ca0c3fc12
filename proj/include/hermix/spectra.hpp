#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "hermix/errors.hpp"
#include "hermix/gain.hpp"
#include "hermix/graph.hpp"

namespace hermix {

using Complex = std::complex<double>;

/// omega^e for omega = exp(2*pi*i/k).
inline Complex unit_root(long long e, RootParameter k) {
  int r = k.reduce(e);
  if (r == 0) return {1.0, 0.0};
  double angle = 2.0 * std::numbers::pi * r / k.value();
  return {std::cos(angle), std::sin(angle)};
}

/// Dense complex matrix equal to its conjugate transpose. The lower
/// triangle is always stored as the exact conjugate of the upper one.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t n) : n_(n), data_(n * n) {}

  /// Validates exact Hermitian symmetry of a row-major n*n array.
  HermitianMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), data_(std::move(entries)) {
    if (data_.size() != n * n) throw NotHermitian("entry count does not match n*n");
    for (std::size_t i = 0; i < n; ++i) {
      if (data_[i * n + i].imag() != 0.0) throw NotHermitian("diagonal entry is not real");
      for (std::size_t j = i + 1; j < n; ++j)
        if (data_[j * n + i] != std::conj(data_[i * n + j]))
          throw NotHermitian("entry (" + std::to_string(j) + ", " + std::to_string(i) +
                             ") is not the conjugate of its transpose");
    }
  }

  std::size_t order() const noexcept { return n_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Sets (i, j) = z and (j, i) = conj(z). Diagonal values must be real.
  void set(std::size_t i, std::size_t j, Complex z) {
    if (i == j && z.imag() != 0.0) throw NotHermitian("diagonal entry is not real");
    data_[i * n_ + j] = z;
    data_[j * n_ + i] = std::conj(z);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  std::vector<Complex> multiply(const std::vector<Complex>& x) const {
    std::vector<Complex> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < n_; ++j) s += data_[i * n_ + j] * x[j];
      y[i] = s;
    }
    return y;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// Complex realization of the gain matrix: omega^e -> cos + i sin, absent -> 0.
inline HermitianMatrix hermitian_matrix(const GainMatrix& m) {
  HermitianMatrix h(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = i + 1; j < m.order(); ++j)
      if (const auto& e = m(i, j)) h.set(i, j, unit_root(*e, m.root()));
  return h;
}

inline HermitianMatrix hermitian_matrix(const MixedGraph& g, RootParameter k) {
  return hermitian_matrix(gain_matrix(g, k));
}

struct Spectrum {
  std::vector<double> values;  // descending
  double residual = 0.0;       // max_i ||H x_i - lambda_i x_i||_2

  std::size_t size() const noexcept { return values.size(); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
  double radius() const {
    return values.empty() ? 0.0 : std::max(std::abs(values.front()), std::abs(values.back()));
  }
  double trace() const {
    double s = 0.0;
    for (double x : values) s += x;
    return s;
  }
};

inline constexpr double residual_factor = 1e-9;

namespace detail {

using Solver = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>;

// Eigen reads only the lower triangle; ours is the exact conjugate of the
// upper one, so either half gives the same matrix.
inline Solver solve(const HermitianMatrix& h) {
  const auto n = static_cast<Eigen::Index>(h.order());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Solver eig(m, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) throw ConvergenceFailure("Hermitian eigensolver did not converge");
  return eig;
}

inline std::vector<Complex> column(const Solver& eig, Eigen::Index c) {
  const auto& v = eig.eigenvectors();
  std::vector<Complex> x(static_cast<std::size_t>(v.rows()));
  for (Eigen::Index i = 0; i < v.rows(); ++i) x[static_cast<std::size_t>(i)] = v(i, c);
  return x;
}

inline double residual_norm(const HermitianMatrix& h, const std::vector<Complex>& x, double lambda) {
  auto hx = h.multiply(x);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(hx[i] - lambda * x[i]);
  return std::sqrt(s);
}

inline double residual_bound(const HermitianMatrix& h) {
  return residual_factor * static_cast<double>(h.order()) * h.max_abs();
}

inline void check_residual(const HermitianMatrix& h, double residual) {
  if (!(residual <= residual_bound(h)))
    throw ConvergenceFailure("eigenpair residual " + std::to_string(residual) +
                             " exceeds bound " + std::to_string(residual_bound(h)));
}

}  // namespace detail

/// Real eigenvalues of h, sorted descending, with the worst residual over
/// all computed eigenpairs.
inline Spectrum eigenvalues(const HermitianMatrix& h) {
  const std::size_t n = h.order();
  Spectrum out;
  if (n == 0) return out;

  const auto eig = detail::solve(h);
  const auto& ev = eig.eigenvalues();
  out.values.assign(ev.data(), ev.data() + ev.size());
  std::reverse(out.values.begin(), out.values.end());
  for (Eigen::Index c = 0; c < ev.size(); ++c)
    out.residual = std::max(out.residual, detail::residual_norm(h, detail::column(eig, c), ev[c]));
  detail::check_residual(h, out.residual);
  return out;
}

inline Spectrum eigenvalues(const MixedGraph& g, RootParameter k) {
  return eigenvalues(hermitian_matrix(g, k));
}

inline double spectral_radius(const MixedGraph& g, RootParameter k) {
  return eigenvalues(g, k).radius();
}

struct Eigenpair {
  double value = 0.0;
  std::vector<Complex> vector;  // unit 2-norm
  double residual = 0.0;
};

/// Largest eigenvalue of h with a unit eigenvector.
inline Eigenpair leading_eigenpair(const HermitianMatrix& h) {
  const std::size_t n = h.order();
  if (n == 0) throw InputError("leading eigenpair of an empty matrix");
  const auto eig = detail::solve(h);
  const auto top = static_cast<Eigen::Index>(n) - 1;
  Eigenpair out;
  out.value = eig.eigenvalues()[top];
  out.vector = detail::column(eig, top);
  double norm = 0.0;
  for (const auto& z : out.vector) norm += std::norm(z);
  norm = std::sqrt(norm);
  for (auto& z : out.vector) z /= norm;
  out.residual = detail::residual_norm(h, out.vector, out.value);
  detail::check_residual(h, out.residual);
  return out;
}

inline constexpr double default_cospectral_tolerance = 1e-8;

struct CospectralResult {
  bool cospectral = false;
  double max_gap = std::numeric_limits<double>::infinity();
};

/// Largest entrywise difference of two descending spectra of equal length.
inline double spectrum_gap(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a.values[i] - b.values[i]));
  return gap;
}

inline CospectralResult cospectral(const MixedGraph& a, const MixedGraph& b, RootParameter k,
                                   double tol = default_cospectral_tolerance) {
  if (a.order() != b.order()) return {};
  double gap = spectrum_gap(eigenvalues(a, k), eigenvalues(b, k));
  return {gap <= tol, gap};
}

}  // namespace hermix
