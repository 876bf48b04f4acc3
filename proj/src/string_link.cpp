#include "linkhom/string_link.hpp"

#include <algorithm>
#include <numeric>

namespace linkhom {

StringLink::StringLink(BraidWord rep) : rep_(std::move(rep)) {
  if (!is_pure(rep_))
    throw not_pure_error(
        "string link representative must be a pure braid; underlying "
        "permutation is " +
        format_permutation(underlying_permutation(rep_)));
}

StringLink StringLink::identity(int components) {
  return StringLink(BraidWord(components));
}

InvariantVector::InvariantVector(std::vector<ReducedPolynomial> entries)
    : entries_(std::move(entries)) {
  int n = static_cast<int>(entries_.size());
  for (const auto& e : entries_)
    if (e.rank() != n)
      throw argument_error("invariant entry rank disagrees with component count");
}

const ReducedPolynomial& InvariantVector::entry(int strand) const {
  if (strand < 1 || strand > components())
    throw argument_error("strand " + std::to_string(strand) + " out of range");
  return entries_[strand - 1];
}

FreeWord longitude(const StringLink& s, int strand) {
  return extract_conjugator(artin_image(s.rep(), strand), strand);
}

namespace {

// Expansions of the images of x_k, x_{k+1} under one braid letter. Every
// non-constant term of either image mentions the variable the permutation
// sends k (resp. k+1) to, so substituting them for X_k, X_{k+1} kills the
// repeated-index ideal and descends to the reduced algebra.
std::pair<ReducedPolynomial, ReducedPolynomial> letter_images(int n,
                                                              BLetter l) {
  int k = std::abs(l);
  if (l > 0)
    return {expand(FreeWord(n, {k, k + 1, -k})), expand(FreeWord(n, {k}))};
  return {expand(FreeWord(n, {k + 1})),
          expand(FreeWord(n, {-(k + 1), k, k + 1}))};
}

// Algebra endomorphism X_k -> fk - 1, X_{k+1} -> fk1 - 1, X_m -> X_m.
ReducedPolynomial substitute_pair(const ReducedPolynomial& p, int k,
                                  const ReducedPolynomial& fk,
                                  const ReducedPolynomial& fk1) {
  int n = p.rank();
  ReducedPolynomial one = ReducedPolynomial::constant(n, 1);
  ReducedPolynomial gk = fk - one;
  ReducedPolynomial gk1 = fk1 - one;
  ReducedPolynomial out(n);
  for (const auto& [m, c] : p.terms()) {
    ReducedPolynomial term = ReducedPolynomial::constant(n, c);
    for (int idx : m) {
      if (idx == k)
        term = term * gk;
      else if (idx == k + 1)
        term = term * gk1;
      else
        term = term * ReducedPolynomial::variable(n, idx);
    }
    out = out + term;
  }
  return out;
}

// Expansion of the image of x_target under the word, letter by letter.
// Mirrors artin_image followed by expand, but every intermediate lives in
// the finite-dimensional reduced algebra, while the image as a free word
// can grow exponentially with the braid length.
ReducedPolynomial tracked_image(const BraidWord& b, int target) {
  ReducedPolynomial acc = expand(FreeWord::generator(b.strands(), target));
  for (BLetter l : b.letters()) {
    auto [fk, fk1] = letter_images(b.strands(), l);
    acc = substitute_pair(acc, std::abs(l), fk, fk1);
  }
  return acc;
}

// For a pure braid the tracked image is 1 + K X_i K^{-1} with K the reduced
// longitude expansion. Killing X_i is a quotient map, so the terms that end
// in X_i are exactly w X_i over the terms w of K.
ReducedPolynomial strip_core(const ReducedPolynomial& e, int i) {
  ReducedPolynomial out(e.rank());
  for (const auto& [m, c] : e.terms())
    if (!m.empty() && m.back() == i)
      out.add_term(Monomial(m.begin(), m.end() - 1), c);
  return out;
}

}  // namespace

InvariantVector invariants(const StringLink& s) {
  int n = s.components();
  std::vector<ReducedPolynomial> entries;
  entries.reserve(n);
  for (int i = 1; i <= n; ++i)
    entries.push_back(strip_core(tracked_image(s.rep(), i), i));
  return InvariantVector(std::move(entries));
}

bool link_homotopy_equal(const StringLink& a, const StringLink& b) {
  if (a.components() != b.components())
    throw mismatch_error("cannot compare links with " +
                         std::to_string(a.components()) + " and " +
                         std::to_string(b.components()) + " components");
  return invariants(a) == invariants(b);
}

StringLink stack(const StringLink& a, const StringLink& b) {
  if (a.components() != b.components())
    throw mismatch_error("cannot stack links with " +
                         std::to_string(a.components()) + " and " +
                         std::to_string(b.components()) + " components");
  return StringLink(compose(a.rep(), b.rep()));
}

StringLink inverse(const StringLink& s) { return StringLink(s.rep().inverse()); }

StringLink delta_i(const StringLink& s, int strand) {
  return StringLink(delete_strand(s.rep(), strand));
}

std::vector<StringLink> delta(const StringLink& s) {
  std::vector<StringLink> out;
  out.reserve(s.components());
  for (int i = 1; i <= s.components(); ++i) out.push_back(delta_i(s, i));
  return out;
}

namespace {

bool trivial_invariants(const StringLink& s) {
  InvariantVector v = invariants(s);
  for (int i = 1; i <= v.components(); ++i) {
    const auto& terms = v.entry(i).terms();
    if (terms.size() != 1) return false;
    if (!terms.begin()->first.empty() || terms.begin()->second != 1)
      return false;
  }
  return true;
}

}  // namespace

bool is_borromean(const StringLink& s) {
  if (s.components() == 1) return true;
  for (int i = 1; i <= s.components(); ++i)
    if (!trivial_invariants(delta_i(s, i))) return false;
  return true;
}

std::vector<Monomial> borromean_basis(int components) {
  if (components < 1) throw argument_error("component count must be positive");
  if (components == 1) return {};
  Monomial head(components - 2);
  std::iota(head.begin(), head.end(), 1);
  std::vector<Monomial> basis;
  do {
    Monomial m = head;
    m.push_back(static_cast<std::int32_t>(components - 1));
    basis.push_back(std::move(m));
  } while (std::next_permutation(head.begin(), head.end()));
  return basis;
}

std::vector<Int> borromean_coordinates(const StringLink& s) {
  if (!is_borromean(s))
    throw domain_error("link is not Borromean: some strand deletion is nontrivial");
  if (s.components() == 1) return {};
  const ReducedPolynomial last = invariants(s).entry(s.components());
  std::vector<Int> coords;
  for (const Monomial& m : borromean_basis(s.components()))
    coords.push_back(last.coefficient(m));
  return coords;
}

Int mu(const StringLink& s, const Monomial& idx) {
  if (idx.size() < 2)
    throw argument_error("mu needs at least two indices");
  check_monomial(s.components(), idx);
  int strand = idx.back();
  Monomial prefix(idx.begin(), idx.end() - 1);
  return invariants(s).entry(strand).coefficient(prefix);
}

std::optional<InvariantDifference> first_difference(const InvariantVector& a,
                                                    const InvariantVector& b) {
  if (a.components() != b.components())
    throw mismatch_error("cannot diff invariant vectors of different sizes");
  MonomialOrder less;
  std::optional<InvariantDifference> best;
  for (int strand = 1; strand <= a.components(); ++strand) {
    const auto& ta = a.entry(strand).terms();
    const auto& tb = b.entry(strand).terms();
    auto ia = ta.begin();
    auto ib = tb.begin();
    std::optional<InvariantDifference> diff;
    while (ia != ta.end() || ib != tb.end()) {
      if (ib == tb.end() || (ia != ta.end() && less(ia->first, ib->first))) {
        diff = {strand, ia->first, ia->second, Int(0)};
        break;
      }
      if (ia == ta.end() || less(ib->first, ia->first)) {
        diff = {strand, ib->first, Int(0), ib->second};
        break;
      }
      if (ia->second != ib->second) {
        diff = {strand, ia->first, ia->second, ib->second};
        break;
      }
      ++ia;
      ++ib;
    }
    if (!diff) continue;
    if (!best || less(diff->monomial, best->monomial) ||
        (!less(best->monomial, diff->monomial) && diff->strand < best->strand))
      best = diff;
  }
  return best;
}

}  // namespace linkhom
