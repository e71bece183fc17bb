#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cdq {

using cplx = std::complex<double>;

enum class PauliOp : std::uint8_t { X, Y, Z };

char pauli_char(PauliOp p);

/// A single Pauli word on n_sites qubits. Sites not listed carry identity.
/// `letters` is kept sorted by site index (canonical form).
struct PauliString {
  int n_sites = 0;
  std::vector<std::pair<int, PauliOp>> letters;

  PauliString() = default;
  PauliString(int n, std::vector<std::pair<int, PauliOp>> ops);

  bool is_identity() const { return letters.empty(); }
  int weight() const { return static_cast<int>(letters.size()); }

  auto operator<=>(const PauliString&) const = default;

  std::string to_string() const;  // e.g. "Y0 Z1", "I" for identity
};

PauliString single(int n_sites, int site, PauliOp p);
PauliString two(int n_sites, int site_a, PauliOp a, int site_b, PauliOp b);

/// a * b = phase * result, phase in {1, -1, i, -i}.
std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b);

/// Sparse linear combination of Pauli strings. Terms with coefficient
/// magnitude below 1e-14 are pruned after every arithmetic operation.
/// std::map keyed by the canonical string gives deterministic iteration.
struct PauliSum {
  int n_sites = 0;
  std::map<PauliString, cplx> terms;

  PauliSum() = default;
  explicit PauliSum(int n) : n_sites(n) {}

  static constexpr double prune_tol = 1e-14;

  void add_term(const PauliString& s, cplx coeff);
  void prune();

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(cplx scale);

  bool empty() const { return terms.empty(); }
  bool is_hermitian(double tol = 1e-12) const;

  std::string to_string() const;  // debug rendering, e.g. "(0,2)*Y0 Z1"
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator*(cplx scale, PauliSum a);

/// AB - BA. Commuting strings contribute nothing.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Normalized Hilbert-Schmidt inner product Tr(A^dag B) / 2^N.
cplx hs_inner(const PauliSum& a, const PauliSum& b);

}  // namespace cdq
