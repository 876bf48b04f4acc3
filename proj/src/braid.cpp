#include "linkhom/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace linkhom {

namespace {

int checked_strands(int n) {
  if (n < 1) throw argument_error("strand count must be positive");
  return n;
}

void check_letter(int n, BLetter l) {
  int k = std::abs(l);
  if (k < 1 || k > n - 1)
    throw argument_error("generator position " + std::to_string(k) +
                         " out of range for " + std::to_string(n) + " strands");
}

void check_strand(int n, int i) {
  if (i < 1 || i > n)
    throw argument_error("strand " + std::to_string(i) +
                         " out of range for " + std::to_string(n) + " strands");
}

void require_pure(const BraidWord& b, const char* op) {
  if (!is_pure(b))
    throw not_pure_error(std::string(op) + " requires a pure braid; underlying permutation is " +
                         format_permutation(underlying_permutation(b)));
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(checked_strands(strands)) {}

BraidWord::BraidWord(int strands, const std::vector<BLetter>& letters)
    : strands_(checked_strands(strands)), letters_(letters) {
  for (BLetter l : letters_) check_letter(strands_, l);
}

BraidWord BraidWord::inverse() const {
  std::vector<BLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(-*it);
  return BraidWord(strands_, out);
}

Permutation underlying_permutation(const BraidWord& b) {
  int n = b.strands();
  std::vector<int> at(n + 1);  // at[p] = strand currently at position p
  std::iota(at.begin(), at.end(), 0);
  for (BLetter l : b.letters()) {
    int k = std::abs(l);
    std::swap(at[k], at[k + 1]);
  }
  Permutation perm(n);
  for (int p = 1; p <= n; ++p) perm[at[p] - 1] = p;
  return perm;
}

bool is_pure(const BraidWord& b) {
  Permutation p = underlying_permutation(b);
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i + 1) return false;
  return true;
}

std::string format_permutation(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  out += ']';
  return out;
}

BraidWord band_generator(int strands, int i, int j) {
  check_strand(strands, i);
  check_strand(strands, j);
  if (i >= j) throw argument_error("band generator needs i < j");
  std::vector<BLetter> ls;
  ls.reserve(2 * (j - i));
  for (int m = j - 1; m > i; --m) ls.push_back(static_cast<BLetter>(m));
  ls.push_back(static_cast<BLetter>(i));
  ls.push_back(static_cast<BLetter>(i));
  for (int m = i + 1; m < j; ++m) ls.push_back(static_cast<BLetter>(-m));
  return BraidWord(strands, ls);
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw argument_error("strand count mismatch in braid composition");
  std::vector<BLetter> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), ls);
}

BraidWord invert(const BraidWord& b) { return b.inverse(); }

BraidWord delete_strand(const BraidWord& b, int strand) {
  int n = b.strands();
  check_strand(n, strand);
  require_pure(b, "strand deletion");
  if (n == 1) throw argument_error("cannot delete the only strand");
  std::vector<BLetter> out;
  out.reserve(b.size());
  int p = strand;  // current position of the deleted strand
  for (BLetter l : b.letters()) {
    int k = std::abs(l);
    if (k == p) {
      p = k + 1;  // deleted strand crosses; drop the letter
    } else if (k + 1 == p) {
      p = k;
    } else {
      out.push_back(l > 0 ? static_cast<BLetter>(k < p ? k : k - 1)
                          : static_cast<BLetter>(-(k < p ? k : k - 1)));
    }
  }
  return BraidWord(n - 1, out);
}

long long crossing_linking(const BraidWord& b, int i, int j) {
  int n = b.strands();
  check_strand(n, i);
  check_strand(n, j);
  if (i == j) throw argument_error("linking number needs two distinct strands");
  require_pure(b, "linking number");
  std::vector<int> at(n + 1);
  std::iota(at.begin(), at.end(), 0);
  long long total = 0;
  for (BLetter l : b.letters()) {
    int k = std::abs(l);
    int s1 = at[k], s2 = at[k + 1];
    if ((s1 == i && s2 == j) || (s1 == j && s2 == i))
      total += l > 0 ? 1 : -1;
    std::swap(at[k], at[k + 1]);
  }
  // a pure braid crosses any two strands an even number of times
  if (total % 2 != 0)
    throw argument_error("internal: odd crossing count on a pure braid");
  return total / 2;
}

FreeWord artin_image(const BraidWord& b, int strand) {
  check_strand(b.strands(), strand);
  FreeWord w = FreeWord::generator(b.strands(), strand);
  for (BLetter l : b.letters())
    w = artin_apply(std::abs(l), l > 0 ? 1 : -1, w);
  return w;
}

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    if (at_end() || peek() != c)
      throw parse_error(std::string("expected '") + c + "' " + what, pos);
    ++pos;
  }

  int read_int(const char* what) {
    std::size_t start = pos;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start)
      throw parse_error(std::string("expected ") + what, start);
    if (pos - start > 7) throw parse_error("number too large", start);
    int value = 0;
    for (std::size_t q = start; q < pos; ++q) value = value * 10 + (text[q] - '0');
    return value;
  }

  // consumes "^-1" if present
  bool read_inverse_mark() {
    if (!at_end() && peek() == '^') {
      std::size_t start = pos;
      ++pos;
      if (!at_end() && peek() == '-') {
        ++pos;
        if (!at_end() && peek() == '1') {
          ++pos;
          return true;
        }
      }
      throw parse_error("expected \"^-1\"", start);
    }
    return false;
  }
};

}  // namespace

BraidWord parse_braid(std::string_view text) {
  Scanner sc{text};
  sc.skip_space();
  sc.expect('n', "to start the strand-count header");
  sc.expect('=', "after 'n'");
  std::size_t npos = sc.pos;
  int n = sc.read_int("strand count");
  sc.expect(':', "after the strand count");
  if (n < 1) throw parse_error("strand count must be positive", npos);

  std::vector<BLetter> letters;
  for (;;) {
    sc.skip_space();
    if (sc.at_end()) break;
    std::size_t tok = sc.pos;
    char c = sc.peek();
    if (c == 's') {
      ++sc.pos;
      int k = sc.read_int("generator position after 's'");
      bool inv = sc.read_inverse_mark();
      if (k < 1 || k > n - 1)
        throw parse_error("generator position " + std::to_string(k) +
                              " out of range for n=" + std::to_string(n),
                          tok);
      letters.push_back(static_cast<BLetter>(inv ? -k : k));
    } else if (c == 'A') {
      ++sc.pos;
      int i = sc.read_int("strand index after 'A'");
      sc.expect(',', "between band-generator strands");
      int j = sc.read_int("second band-generator strand");
      bool inv = sc.read_inverse_mark();
      if (i < 1 || j < 1 || i >= j || j > n)
        throw parse_error("band generator A" + std::to_string(i) + "," +
                              std::to_string(j) + " out of range for n=" +
                              std::to_string(n),
                          tok);
      BraidWord band = band_generator(n, i, j);
      if (inv) band = band.inverse();
      letters.insert(letters.end(), band.letters().begin(),
                     band.letters().end());
    } else {
      throw parse_error("unexpected character '" + std::string(1, c) + "'",
                        tok);
    }
  }
  return BraidWord(n, letters);
}

std::string format(const BraidWord& b) {
  std::string out = "n=" + std::to_string(b.strands()) + ":";
  for (BLetter l : b.letters()) {
    out += " s";
    out += std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace linkhom
