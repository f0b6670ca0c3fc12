#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "hermix/errors.hpp"
#include "hermix/spectra.hpp"

namespace hermix {

inline constexpr std::size_t default_oracle_cap = 10;
inline constexpr double coefficient_imag_tolerance = 1e-9;

/// Coefficients of det(lambda I - H), lowest power first, computed with
/// the Faddeev-LeVerrier recurrence in complex arithmetic:
///   M_1 = I,  c_{n-m} = -tr(H M_m) / m,  M_{m+1} = H M_m + c_{n-m} I.
/// Independent of the eigensolver; intended as a cross-check for small n.
inline std::vector<double> char_poly(const HermitianMatrix& h, std::size_t cap = default_oracle_cap) {
  const std::size_t n = h.order();
  if (n > cap) throw OracleCapExceeded(n, cap);

  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  std::vector<Complex> m(n * n), hm(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;

  for (std::size_t step = 1; step <= n; ++step) {
    Complex trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Complex s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += h(i, l) * m[l * n + j];
        hm[i * n + j] = s;
      }
      trace += hm[i * n + i];
    }
    const Complex coeff = -trace / static_cast<double>(step);
    c[n - step] = coeff;
    m = hm;
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += coeff;
  }

  std::vector<double> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (std::abs(c[i].imag()) > coefficient_imag_tolerance)
      throw NonRealCoefficient("coefficient of lambda^" + std::to_string(i) +
                               " has imaginary part " + std::to_string(c[i].imag()));
    out[i] = c[i].real();
  }
  return out;
}

/// Horner evaluation; coefficients lowest power first.
inline double evaluate_polynomial(const std::vector<double>& coeffs, double x) {
  double y = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) y = y * x + *it;
  return y;
}

inline std::vector<double> derivative(const std::vector<double>& coeffs) {
  if (coeffs.size() <= 1) return {};
  std::vector<double> d(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) d[i - 1] = coeffs[i] * static_cast<double>(i);
  return d;
}

namespace detail {

// Root of p in [lo, hi] given that p has at most one sign change there.
// Without a sign change, the endpoint of smaller |p| is a multiple root
// shared with the derivative.
inline double bracketed_root(const std::vector<double>& p, double lo, double hi) {
  double flo = evaluate_polynomial(p, lo);
  double fhi = evaluate_polynomial(p, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0)) return std::abs(flo) <= std::abs(fhi) ? lo : hi;
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double fm = evaluate_polynomial(p, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// All roots, ascending, of a polynomial known to have only real roots.
///
/// Works up the derivative chain: the roots of p' split the line into
/// intervals each holding exactly one root of p (Rolle plus real-rootedness),
/// which bisection then locates. A root of multiplicity m is a simple root
/// of the (m-1)-th derivative, so repeated roots come out as accurately as
/// simple ones.
inline std::vector<double> real_rooted_roots(std::vector<double> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.size() <= 1) return {};

  const double lead = coeffs.back();
  for (double& c : coeffs) c /= lead;
  double bound = 1.0;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) bound = std::max(bound, 1.0 + std::abs(coeffs[i]));

  std::vector<std::vector<double>> chain{coeffs};
  while (chain.back().size() > 2) chain.push_back(derivative(chain.back()));

  std::vector<double> roots{-chain.back()[0] / chain.back()[1]};
  for (auto level = chain.rbegin() + 1; level != chain.rend(); ++level) {
    std::vector<double> next;
    next.reserve(roots.size() + 1);
    double lo = -bound;
    for (double critical : roots) {
      next.push_back(detail::bracketed_root(*level, lo, std::max(lo, critical)));
      lo = std::max(lo, critical);
    }
    next.push_back(detail::bracketed_root(*level, lo, bound));
    roots = std::move(next);
  }
  return roots;
}

}  // namespace hermix
