#include "linkhom/magnus.hpp"

#include <cstdlib>

namespace linkhom {

namespace {

// Indices seen as a bitmask; ranks beyond 63 are rejected up front, far above
// anything the finite-dimensionality of the algebra makes usable.
std::uint64_t monomial_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (int i : m) mask |= std::uint64_t{1} << i;
  return mask;
}

int checked_rank(int rank) {
  if (rank < 0) throw argument_error("rank must be nonnegative");
  if (rank > 63) throw argument_error("rank too large");
  return rank;
}

}  // namespace

void check_monomial(int rank, const Monomial& m) {
  std::uint64_t seen = 0;
  for (int i : m) {
    if (i < 1 || i > rank)
      throw argument_error("monomial index " + std::to_string(i) +
                           " out of range for rank " + std::to_string(rank));
    std::uint64_t bit = std::uint64_t{1} << i;
    if (seen & bit)
      throw argument_error("monomial repeats index " + std::to_string(i));
    seen |= bit;
  }
}

ReducedPolynomial::ReducedPolynomial(int rank) : rank_(checked_rank(rank)) {}

ReducedPolynomial ReducedPolynomial::constant(int rank, const Int& value) {
  ReducedPolynomial p(rank);
  if (value != 0) p.terms_.emplace(Monomial{}, value);
  return p;
}

ReducedPolynomial ReducedPolynomial::variable(int rank, int index) {
  ReducedPolynomial p(rank);
  check_monomial(rank, {index});
  p.terms_.emplace(Monomial{static_cast<std::int32_t>(index)}, Int(1));
  return p;
}

int ReducedPolynomial::degree() const {
  if (terms_.empty()) return 0;
  // map is ordered by degree first, so the last term is maximal
  return static_cast<int>(terms_.rbegin()->first.size());
}

Int ReducedPolynomial::coefficient(const Monomial& m) const {
  check_monomial(rank_, m);
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void ReducedPolynomial::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ReducedPolynomial add(const ReducedPolynomial& a, const ReducedPolynomial& b) {
  if (a.rank() != b.rank()) throw argument_error("rank mismatch in sum");
  ReducedPolynomial out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

ReducedPolynomial sub(const ReducedPolynomial& a, const ReducedPolynomial& b) {
  if (a.rank() != b.rank()) throw argument_error("rank mismatch in difference");
  ReducedPolynomial out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
  return out;
}

ReducedPolynomial poly_mul(const ReducedPolynomial& a,
                           const ReducedPolynomial& b) {
  if (a.rank() != b.rank()) throw argument_error("rank mismatch in product");
  ReducedPolynomial out(a.rank());
  for (const auto& [ma, ca] : a.terms()) {
    std::uint64_t mask_a = monomial_mask(ma);
    for (const auto& [mb, cb] : b.terms()) {
      if (mask_a & monomial_mask(mb)) continue;  // repeated index: term is zero
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

ReducedPolynomial expand(const FreeWord& w) {
  int n = w.rank();
  ReducedPolynomial p = ReducedPolynomial::constant(n, 1);
  for (FLetter l : w.letters()) {
    int index = std::abs(l);
    Int sign = l > 0 ? 1 : -1;
    // p *= 1 + sign*X_index: append the index to every term not mentioning it
    std::uint64_t bit = std::uint64_t{1} << index;
    std::vector<std::pair<Monomial, Int>> extra;
    extra.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
      if (monomial_mask(m) & bit) continue;
      Monomial mm = m;
      mm.push_back(static_cast<std::int32_t>(index));
      extra.emplace_back(std::move(mm), sign * c);
    }
    for (auto& [m, c] : extra) p.add_term(m, c);
  }
  return p;
}

ReducedPolynomial kill_index(const ReducedPolynomial& p, int index) {
  if (index < 1 || index > p.rank())
    throw argument_error("index " + std::to_string(index) +
                         " out of range for rank " + std::to_string(p.rank()));
  ReducedPolynomial out(p.rank());
  std::uint64_t bit = std::uint64_t{1} << index;
  for (const auto& [m, c] : p.terms())
    if (!(monomial_mask(m) & bit)) out.add_term(m, c);
  return out;
}

Int mu_coefficient(const ReducedPolynomial& p, const Monomial& idx) {
  return p.coefficient(idx);
}

std::string format(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (int i : m) {
    out += 'X';
    out += std::to_string(i);
  }
  return out;
}

std::string format(const ReducedPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string coeff = a.str();
    if (m.empty()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff;
      out += format(m);
    }
  }
  return out;
}

}  // namespace linkhom
