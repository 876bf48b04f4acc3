#include "linkhom/free_word.hpp"

#include <cstdlib>
#include <iterator>

namespace linkhom {

namespace {

int checked_rank(int rank) {
  if (rank < 0) throw argument_error("free group rank must be nonnegative");
  return rank;
}

void check_letter(int rank, FLetter l) {
  int idx = std::abs(l);
  if (idx < 1 || idx > rank)
    throw argument_error("letter index " + std::to_string(idx) +
                         " out of range for rank " + std::to_string(rank));
}

// Push with cancellation against the top of the stack.
void push_reduced(std::vector<FLetter>& stack, FLetter l) {
  if (!stack.empty() && stack.back() == -l)
    stack.pop_back();
  else
    stack.push_back(l);
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(checked_rank(rank)) {}

FreeWord::FreeWord(int rank, const std::vector<FLetter>& letters)
    : rank_(checked_rank(rank)) {
  letters_.reserve(letters.size());
  for (FLetter l : letters) {
    check_letter(rank_, l);
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::generator(int rank, int index, int sign) {
  if (sign != 1 && sign != -1) throw argument_error("generator sign must be +-1");
  return FreeWord(rank, {static_cast<FLetter>(sign * index)});
}

FreeWord FreeWord::inverse() const {
  FreeWord out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(-*it);
  return out;
}

FreeWord reduce(int rank, const std::vector<FLetter>& letters) {
  return FreeWord(rank, letters);
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank())
    throw argument_error("rank mismatch in free-word product");
  std::vector<FLetter> stack = a.letters();
  stack.reserve(stack.size() + b.size());
  for (FLetter l : b.letters()) push_reduced(stack, l);
  return FreeWord(a.rank(), stack);
}

FreeWord invert(const FreeWord& a) { return a.inverse(); }

FreeWord artin_apply(int k, int sign, const FreeWord& w) {
  int n = w.rank();
  if (k < 1 || k > n - 1)
    throw argument_error("generator position " + std::to_string(k) +
                         " out of range for rank " + std::to_string(n));
  if (sign != 1 && sign != -1) throw argument_error("sign must be +-1");

  std::vector<FLetter> out;
  out.reserve(3 * w.size());
  auto emit = [&](std::initializer_list<FLetter> img, bool inverse_of) {
    if (!inverse_of) {
      for (FLetter l : img) push_reduced(out, l);
    } else {
      for (auto it = std::rbegin(img); it != std::rend(img); ++it)
        push_reduced(out, -*it);
    }
  };
  FLetter a = static_cast<FLetter>(k), b = static_cast<FLetter>(k + 1);
  for (FLetter l : w.letters()) {
    int idx = std::abs(l);
    bool inv = l < 0;
    if (idx == k) {
      if (sign > 0)
        emit({a, b, static_cast<FLetter>(-a)}, inv);  // x_k -> x_k x_{k+1} x_k^-1
      else
        emit({b}, inv);  // x_k -> x_{k+1}
    } else if (idx == k + 1) {
      if (sign > 0)
        emit({a}, inv);  // x_{k+1} -> x_k
      else
        emit({static_cast<FLetter>(-b), a, b}, inv);  // x_{k+1} -> x_{k+1}^-1 x_k x_{k+1}
    } else {
      push_reduced(out, l);
    }
  }
  return FreeWord(n, out);
}

FreeWord extract_conjugator(const FreeWord& w, int index) {
  int n = w.rank();
  if (index < 1 || index > n)
    throw argument_error("strand index " + std::to_string(index) +
                         " out of range for rank " + std::to_string(n));
  const auto& ls = w.letters();
  std::size_t m = ls.size();
  auto fail = [&] {
    throw not_pure_error("longitude image of x" + std::to_string(index) +
                         " is not a conjugate of it (word: " + format(w) + ")");
  };
  if (m % 2 == 0) fail();
  std::size_t h = m / 2;
  if (ls[h] != static_cast<FLetter>(index)) fail();
  for (std::size_t q = 0; q < h; ++q)
    if (ls[m - 1 - q] != -ls[q]) fail();
  std::vector<FLetter> prefix(ls.begin(), ls.begin() + h);
  // a contiguous slice of a reduced word is reduced, and the defining scheme
  // guarantees the prefix does not end in x_index^{+-1}
  return FreeWord(n, prefix);
}

std::string format(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t q = 0; q < w.size(); ++q) {
    FLetter l = w.letters()[q];
    if (q) out += ' ';
    out += 'x';
    out += std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace linkhom
