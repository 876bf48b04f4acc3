#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkhom/errors.hpp"

namespace linkhom {

// Letter of a free-group word: +i encodes the generator x_i, -i encodes
// x_i^{-1}, with 1 <= i <= rank. 0 is never a valid letter.
using FLetter = std::int32_t;

// Freely reduced word in F(rank), the free group on x_1..x_rank.
// Reduction happens on construction; instances are immutable values, so
// equality of reduced letter sequences is equality in the group.
class FreeWord {
 public:
  explicit FreeWord(int rank);
  FreeWord(int rank, const std::vector<FLetter>& letters);

  static FreeWord generator(int rank, int index, int sign = +1);

  int rank() const { return rank_; }
  const std::vector<FLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  FreeWord inverse() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_;
  std::vector<FLetter> letters_;
};

// Free reduction of an arbitrary letter sequence. Same as the two-argument
// constructor; the result is independent of cancellation order.
FreeWord reduce(int rank, const std::vector<FLetter>& letters);

// Group operations. Ranks must agree.
FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& a);
inline FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  return multiply(a, b);
}

// Generator substitution of sigma_k^{sign} (1 <= k <= rank-1), applied
// letterwise and then reduced:
//   sigma_k:      x_k -> x_k x_{k+1} x_k^{-1},  x_{k+1} -> x_k
//   sigma_k^{-1}: x_k -> x_{k+1},               x_{k+1} -> x_{k+1}^{-1} x_k x_{k+1}
// All other generators are fixed.
FreeWord artin_apply(int k, int sign, const FreeWord& w);

// For w that is literally a reduced conjugate lambda x_index lambda^{-1},
// returns the unique such lambda not ending in x_index^{+-1}.
// Throws not_pure_error otherwise.
FreeWord extract_conjugator(const FreeWord& w, int index);

// "x1 x2^-1"; the empty word prints as "1".
std::string format(const FreeWord& w);

}  // namespace linkhom
