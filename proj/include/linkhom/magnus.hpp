#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linkhom/free_word.hpp"

namespace linkhom {

using Int = boost::multiprecision::cpp_int;

// Monomial in noncommuting variables X_1..X_rank: the ordered sequence of
// indices. The empty sequence is the constant monomial 1. Monomials that
// repeat an index are zero in the reduced algebra and are never stored.
using Monomial = std::vector<std::int32_t>;

// Degree first, then lexicographic. This is the deterministic term order
// used for storage, printing and difference witnesses.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Integer polynomial in noncommuting X_1..X_rank subject to the relations
// "any monomial with a repeated index is zero". The algebra is finite
// dimensional, so products of the generators 1 +- X_i stay small and the
// substitution x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i is exactly involutive:
// (1 + X_i)(1 - X_i) = 1 because X_i^2 = 0.
class ReducedPolynomial {
 public:
  using TermMap = std::map<Monomial, Int, MonomialOrder>;

  explicit ReducedPolynomial(int rank);

  static ReducedPolynomial constant(int rank, const Int& value);
  static ReducedPolynomial variable(int rank, int index);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // degree of the zero polynomial is 0

  // Coefficient of m, zero when the term is absent. The monomial must be
  // valid for this rank (distinct in-range indices).
  Int coefficient(const Monomial& m) const;

  // Adds c * m, erasing the term if the total cancels. Internal building
  // block for the arithmetic below; m must be valid.
  void add_term(const Monomial& m, const Int& c);

  friend bool operator==(const ReducedPolynomial&,
                         const ReducedPolynomial&) = default;

 private:
  int rank_;
  TermMap terms_;
};

// Throws argument_error unless every index is in 1..rank and none repeats.
void check_monomial(int rank, const Monomial& m);

ReducedPolynomial add(const ReducedPolynomial& a, const ReducedPolynomial& b);
ReducedPolynomial sub(const ReducedPolynomial& a, const ReducedPolynomial& b);
ReducedPolynomial poly_mul(const ReducedPolynomial& a,
                           const ReducedPolynomial& b);
inline ReducedPolynomial operator+(const ReducedPolynomial& a,
                                   const ReducedPolynomial& b) {
  return add(a, b);
}
inline ReducedPolynomial operator-(const ReducedPolynomial& a,
                                   const ReducedPolynomial& b) {
  return sub(a, b);
}
inline ReducedPolynomial operator*(const ReducedPolynomial& a,
                                   const ReducedPolynomial& b) {
  return poly_mul(a, b);
}

// Image of w under x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i, one letter at a
// time, reducing after every multiplication. A group homomorphism into the
// units of the algebra.
ReducedPolynomial expand(const FreeWord& w);

// Deletes every term whose monomial mentions the given index.
ReducedPolynomial kill_index(const ReducedPolynomial& p, int index);

// Coefficient of the (distinct-index) monomial in p.
Int mu_coefficient(const ReducedPolynomial& p, const Monomial& idx);

std::string format(const Monomial& m);           // "X1X2"; empty is "1"
std::string format(const ReducedPolynomial& p);  // "1 + X1X2 - X2X1"

}  // namespace linkhom
