#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linkhom/free_word.hpp"

namespace linkhom {

// Letter of a braid word: +k encodes sigma_k, -k encodes sigma_k^{-1},
// where k in 1..n-1 is the pair of adjacent positions being crossed.
using BLetter = std::int32_t;

// Permutation of {1..n}: image[i-1] is where i is sent.
using Permutation = std::vector<int>;

// Word in the Artin generators on n strands. Letters act left to right;
// strand labels are the positions at the start of the word.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, const std::vector<BLetter>& letters);

  int strands() const { return strands_; }
  const std::vector<BLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity_word() const { return letters_.empty(); }

  BraidWord inverse() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BLetter> letters_;
};

// Where each strand ends up. Composition satisfies
// underlying_permutation(compose(a, b)) = perm(b) o perm(a).
Permutation underlying_permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);
// "[2 1 3]". Named apart from the other formatters: Permutation and Monomial
// are both vectors of int-sized integers, so overloads would collide.
std::string format_permutation(const Permutation& p);

// Band generator A_{ij} (1 <= i < j <= strands): strand j reaches over
// strands j-1..i+1, loops around strand i, and returns.
//   A_{ij} = (sigma_{j-1} .. sigma_{i+1}) sigma_i^2 (sigma_{i+1}^-1 .. sigma_{j-1}^-1)
BraidWord band_generator(int strands, int i, int j);

// Concatenation a then b. Strand counts must agree.
BraidWord compose(const BraidWord& a, const BraidWord& b);
inline BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  return compose(a, b);
}
BraidWord invert(const BraidWord& b);

// Removes the strand with bottom label `strand` from a pure braid,
// renumbering the remaining strands. Deletion of different strands commutes
// after the index shift, and each deletion is a monoid homomorphism.
BraidWord delete_strand(const BraidWord& b, int strand);

// Half the signed count of crossings between strands i and j of a pure
// braid; equals their linking number in the closure.
long long crossing_linking(const BraidWord& b, int i, int j);

// Image of the meridian x_strand under the composite generator substitution
// of the word, letters applied left to right.
FreeWord artin_image(const BraidWord& b, int strand);

// Text form. Header "n=<count>:" then letters "s<k>", "s<k>^-1" and band
// generators "A<i>,<j>", "A<i>,<j>^-1"; "#" starts a comment to end of line.
// Band tokens are expanded at parse time, so parse(format(w)) round-trips
// on sigma words only.
BraidWord parse_braid(std::string_view text);
std::string format(const BraidWord& b);

}  // namespace linkhom
