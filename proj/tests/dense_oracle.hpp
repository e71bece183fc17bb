#pragma once

// Test-only dense-matrix oracle: explicit 2^N x 2^N arithmetic, independent
// of the sparse Pauli algebra it is used to check.

#include <complex>
#include <vector>

#include "cdquench/pauli.hpp"

namespace cdq::testing {

using Mat = std::vector<std::vector<std::complex<double>>>;

inline Mat zeros(std::size_t dim) {
  return Mat(dim, std::vector<std::complex<double>>(dim, {0.0, 0.0}));
}

inline Mat to_dense(const PauliString& s) {
  const std::size_t dim = std::size_t{1} << s.n_sites;
  // Start from identity and fold in one site at a time: entry (r, c) is the
  // product of single-site matrix elements over all sites.
  Mat m = zeros(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      std::complex<double> v(1.0, 0.0);
      std::size_t handled = 0;
      for (const auto& [site, op] : s.letters) {
        const int br = (r >> site) & 1, bc = (c >> site) & 1;
        handled |= std::size_t{1} << site;
        switch (op) {
          case PauliOp::X: v *= (br != bc) ? 1.0 : 0.0; break;
          case PauliOp::Y:
            v *= (br != bc) ? (br ? std::complex<double>(0, 1) : std::complex<double>(0, -1))
                            : 0.0;
            break;
          case PauliOp::Z: v *= (br == bc) ? (br ? -1.0 : 1.0) : 0.0; break;
        }
        if (v == std::complex<double>(0.0, 0.0)) break;
      }
      // Identity on all remaining sites.
      if (((r ^ c) & ~handled) != 0) v = 0.0;
      m[r][c] = v;
    }
  return m;
}

inline Mat to_dense(const PauliSum& sum) {
  const std::size_t dim = std::size_t{1} << sum.n_sites;
  Mat acc = zeros(dim);
  for (const auto& [s, coeff] : sum.terms) {
    const Mat m = to_dense(s);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) acc[r][c] += coeff * m[r][c];
  }
  return acc;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t dim = a.size();
  Mat out = zeros(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t c = 0; c < dim; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

inline Mat sub(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < out.size(); ++c) out[r][c] -= b[r][c];
  return out;
}

inline std::complex<double> trace(const Mat& m) {
  std::complex<double> t(0, 0);
  for (std::size_t r = 0; r < m.size(); ++r) t += m[r][r];
  return t;
}

inline Mat dagger(const Mat& m) {
  Mat out = zeros(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out[r][c] = std::conj(m[c][r]);
  return out;
}

// Tr(A^dag B) / 2^N
inline std::complex<double> dense_hs_inner(const Mat& a, const Mat& b) {
  return trace(matmul(dagger(a), b)) / static_cast<double>(a.size());
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      worst = std::max(worst, std::abs(a[r][c] - b[r][c]));
  return worst;
}

}  // namespace cdq::testing
