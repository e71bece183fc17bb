#include "cdquench/pauli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cdq {

char pauli_char(PauliOp p) {
  switch (p) {
    case PauliOp::X: return 'X';
    case PauliOp::Y: return 'Y';
    case PauliOp::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(int n, std::vector<std::pair<int, PauliOp>> ops)
    : n_sites(n), letters(std::move(ops)) {
  std::sort(letters.begin(), letters.end());
  for (size_t i = 0; i < letters.size(); ++i) {
    const int site = letters[i].first;
    if (site < 0 || site >= n_sites)
      throw std::invalid_argument("PauliString: site index out of range");
    if (i > 0 && letters[i - 1].first == site)
      throw std::invalid_argument("PauliString: duplicate site");
  }
}

std::string PauliString::to_string() const {
  if (letters.empty()) return "I";
  std::ostringstream out;
  bool first = true;
  for (const auto& [site, op] : letters) {
    if (!first) out << ' ';
    out << pauli_char(op) << site;
    first = false;
  }
  return out.str();
}

PauliString single(int n_sites, int site, PauliOp p) {
  return PauliString(n_sites, {{site, p}});
}

PauliString two(int n_sites, int site_a, PauliOp a, int site_b, PauliOp b) {
  return PauliString(n_sites, {{site_a, a}, {site_b, b}});
}

namespace {

// Single-site product table: a*b = phase * c, with identity encoded as -1.
// Returns (phase, c or -1).
std::pair<cplx, int> single_site_product(PauliOp a, PauliOp b) {
  if (a == b) return {cplx(1, 0), -1};
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  // X=0, Y=1, Z=2; XY=iZ, YZ=iX, ZX=iY (cyclic), anticyclic gets -i.
  const int ic = 3 - ia - ib;
  const bool cyclic = (ib == (ia + 1) % 3);
  return {cyclic ? cplx(0, 1) : cplx(0, -1), ic};
}

}  // namespace

std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b) {
  if (a.n_sites != b.n_sites)
    throw std::invalid_argument("pauli multiply: size mismatch");
  cplx phase(1, 0);
  std::vector<std::pair<int, PauliOp>> out;
  out.reserve(a.letters.size() + b.letters.size());
  size_t i = 0, j = 0;
  while (i < a.letters.size() || j < b.letters.size()) {
    if (j == b.letters.size() ||
        (i < a.letters.size() && a.letters[i].first < b.letters[j].first)) {
      out.push_back(a.letters[i++]);
    } else if (i == a.letters.size() || b.letters[j].first < a.letters[i].first) {
      out.push_back(b.letters[j++]);
    } else {
      const auto [p, c] = single_site_product(a.letters[i].second, b.letters[j].second);
      phase *= p;
      if (c >= 0) out.emplace_back(a.letters[i].first, static_cast<PauliOp>(c));
      ++i;
      ++j;
    }
  }
  PauliString result;
  result.n_sites = a.n_sites;
  result.letters = std::move(out);
  return {phase, std::move(result)};
}

void PauliSum::add_term(const PauliString& s, cplx coeff) {
  if (s.n_sites != n_sites) throw std::invalid_argument("PauliSum: size mismatch");
  auto [it, inserted] = terms.emplace(s, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) < prune_tol) terms.erase(it);
}

void PauliSum::prune() {
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) < prune_tol)
      it = terms.erase(it);
    else
      ++it;
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_sites != n_sites) throw std::invalid_argument("PauliSum: size mismatch");
  for (const auto& [s, c] : other.terms) add_term(s, c);
  return *this;
}

PauliSum& PauliSum::operator*=(cplx scale) {
  for (auto& [s, c] : terms) c *= scale;
  prune();
  return *this;
}

PauliSum operator+(PauliSum a, const PauliSum& b) {
  a += b;
  return a;
}

PauliSum operator*(cplx scale, PauliSum a) {
  a *= scale;
  return a;
}

bool PauliSum::is_hermitian(double tol) const {
  // Pauli strings are Hermitian, so Hermiticity means real coefficients.
  for (const auto& [s, c] : terms)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

std::string PauliSum::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : terms) {
    if (!first) out << " + ";
    out << '(' << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)*" << s.to_string();
    first = false;
  }
  return out.str();
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  if (a.n_sites != b.n_sites) throw std::invalid_argument("commutator: size mismatch");
  PauliSum out(a.n_sites);
  for (const auto& [sa, ca] : a.terms)
    for (const auto& [sb, cb] : b.terms) {
      auto [phase, prod] = multiply(sa, sb);
      // [P, Q] = (phase - phase*) P Q when PQ = phase * R and QP = conj(phase) * R:
      // two Pauli strings either commute or anticommute, and the product phase
      // is +-1 when they commute, +-i when they anticommute.
      if (std::abs(phase.imag()) < 0.5) continue;  // commuting pair
      out.add_term(prod, ca * cb * (phase * 2.0));
    }
  return out;
}

cplx hs_inner(const PauliSum& a, const PauliSum& b) {
  if (a.n_sites != b.n_sites) throw std::invalid_argument("hs_inner: size mismatch");
  cplx acc(0, 0);
  const PauliSum& small = a.terms.size() <= b.terms.size() ? a : b;
  const PauliSum& large = a.terms.size() <= b.terms.size() ? b : a;
  const bool small_is_a = &small == &a;
  for (const auto& [s, c] : small.terms) {
    const auto it = large.terms.find(s);
    if (it == large.terms.end()) continue;
    acc += small_is_a ? std::conj(c) * it->second : std::conj(it->second) * c;
  }
  return acc;
}

}  // namespace cdq
