#pragma once

#include <optional>
#include <vector>

#include "linkhom/braid.hpp"
#include "linkhom/magnus.hpp"

namespace linkhom {

// String link up to link-homotopy, carried by a pure braid representative.
// Every string link is link-homotopic to a pure braid, and all operations
// below are invariant under the choice of representative.
class StringLink {
 public:
  explicit StringLink(BraidWord rep);  // throws not_pure_error
  static StringLink identity(int components);

  int components() const { return rep_.strands(); }
  const BraidWord& rep() const { return rep_; }

 private:
  BraidWord rep_;
};

// Reduced expansions of the per-strand longitudes; a complete invariant:
// two string links are link-homotopic iff their vectors agree. Entry i has
// constant term 1 and never mentions X_i.
class InvariantVector {
 public:
  explicit InvariantVector(std::vector<ReducedPolynomial> entries);

  int components() const { return static_cast<int>(entries_.size()); }
  const ReducedPolynomial& entry(int strand) const;  // 1-based

  friend bool operator==(const InvariantVector&,
                         const InvariantVector&) = default;

 private:
  std::vector<ReducedPolynomial> entries_;
};

// The conjugating word lambda_i with artin_image(rep, i) = lambda_i x_i
// lambda_i^{-1}. Well defined up to a power of x_i, which the reduced
// expansion with X_i killed does not see.
FreeWord longitude(const StringLink& s, int strand);

InvariantVector invariants(const StringLink& s);

// Complete decision procedure. Throws mismatch_error when component counts
// differ.
bool link_homotopy_equal(const StringLink& a, const StringLink& b);

// Monoid/group structure: a on the bottom, then b.
StringLink stack(const StringLink& a, const StringLink& b);
StringLink inverse(const StringLink& s);

// Deletes one strand, renumbering the rest; a homomorphism for stacking.
StringLink delta_i(const StringLink& s, int strand);

// All single-strand deletions, in strand order.
std::vector<StringLink> delta(const StringLink& s);

// True when every single-strand deletion is trivial.
bool is_borromean(const StringLink& s);

// Monomials X_{w(1)}..X_{w(n-2)} X_{n-1} over the (n-2)! permutations w in
// lexicographic order; reading entry n at these monomials is a complete
// coordinate system on Borromean links, which form a free abelian group of
// that rank.
std::vector<Monomial> borromean_basis(int components);

// Coordinates of a Borromean link in the basis above.
// Throws domain_error when the link is not Borromean.
std::vector<Int> borromean_coordinates(const StringLink& s);

// mu(idx): idx = (i_1 .. i_k, i) with distinct entries; the coefficient of
// X_{i_1}..X_{i_k} in entry i. Degree-1 values are linking numbers.
Int mu(const StringLink& s, const Monomial& idx);

struct InvariantDifference {
  int strand;        // 1-based
  Monomial monomial; // where the entries first disagree
  Int left, right;
};

// First disagreement in (degree, lexicographic monomial, strand) order;
// nullopt when the vectors are equal.
std::optional<InvariantDifference> first_difference(const InvariantVector& a,
                                                    const InvariantVector& b);

}  // namespace linkhom
