#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ggl/bigint.hpp"

namespace ggl {

// Letters of F(a_1,...,a_k) are nonzero signed indices: +i is the i-th
// generator, -i its inverse. Enumeration and serialization order the 2k
// letters as a, a^-1, b, b^-1, ...:
//   letter_index(+1)=0, letter_index(-1)=1, letter_index(+2)=2, ...
using Letters = std::vector<int>;

struct Alphabet {
  int rank;  // k >= 2
};

inline int letter_index(int letter) {
  int abs = letter < 0 ? -letter : letter;
  return 2 * (abs - 1) + (letter < 0 ? 1 : 0);
}

inline int letter_at(int index) {
  int gen = index / 2 + 1;
  return (index % 2) ? -gen : gen;
}

void check_rank(int k);
void check_letters(const Letters& letters, int k);

// Freely reduced word. Constructed through free_reduce or the factories
// below; the letter sequence never contains x followed by x^-1.
struct Word {
  int rank = 2;
  Letters letters;

  int length() const { return static_cast<int>(letters.size()); }
  Word inverse() const;
  bool operator==(const Word&) const = default;
};

// Freely reduced and last letter != inverse of first. Empty and length-1
// words count as cyclically reduced.
struct CyclicWord {
  Word word;

  int length() const { return word.length(); }
  bool operator==(const CyclicWord&) const = default;
};

bool is_freely_reduced(const Letters& letters);
bool is_cyclically_reduced(const Letters& letters);

Word free_reduce(const Letters& raw, const Alphabet& alphabet);
Word make_word(int k, Letters letters);              // validates reducedness
CyclicWord cyclic_reduce(const Word& w);
CyclicWord make_cyclic(int k, Letters letters);      // validates
Letters rotate(const Letters& letters, int offset);  // cyclic rotation

// Text format: compact `abAB...` for k <= 26 (i-th lowercase letter for a_i,
// uppercase for its inverse); generic `1 2 -1 -2` otherwise. Empty renders
// as a lone epsilon.
std::string format_word(const Word& w);
std::string format_letters(const Letters& letters, int k);
Word parse_word(int k, const std::string& text);           // free-reduces input
CyclicWord parse_cyclic_word(int k, const std::string& text);

// Exact count of cyclically reduced words of length n in F_k:
//   (2k-1)^n + 1 + (k-1)[1 + (-1)^n]  for n >= 1, and 1 for n = 0.
BigUint count_cyclic(int n, int k);
double count_cyclic_ln(int n, int k);

// Emits every cyclically reduced word of length n exactly once, in
// lexicographic order under the letter order above. Visitor returns false
// to stop early.
void enumerate_cyclic(int n, int k, const std::function<bool(const CyclicWord&)>& visit);
std::vector<CyclicWord> all_cyclic(int n, int k);

// Walks the same enumeration tree but only counts leaves; the exhaustive
// oracle for the closed-form count at depths where materializing every
// word would dominate the runtime.
std::uint64_t enumeration_count(int n, int k);

// Uniform over cyclically reduced words of length n; deterministic in seed.
// Rejection over uniform freely reduced words (< 2 expected attempts).
CyclicWord sample_cyclic(int n, int k, std::uint64_t seed);

// Deterministic letter-consuming machine over the 2k letters, used for
// transfer-matrix counting. kReject is a dead state.
struct LetterAutomaton {
  static constexpr int kReject = -1;
  int rank = 2;
  int start = 0;
  std::vector<std::vector<int>> next;  // [state][letter_index] -> state / kReject
  std::vector<char> accept;

  int step(int state, int letter) const { return next[state][letter_index(letter)]; }

  static LetterAutomaton accept_all(int k);
  // Rejects any word containing `factor` as a (linear) factor. KMP states.
  static LetterAutomaton avoiding_factor(int k, const Letters& factor);
  // Accepts exactly the words whose first run_len letters all equal `letter`.
  static LetterAutomaton head_run(int k, int letter, int run_len);
};

// Exact count of cyclically reduced words of length n accepted by the
// machine. Dynamic programming over (state, first letter, last letter).
BigUint count_cyclic_accepted(int n, int k, const LetterAutomaton& machine);

// n -> exact count, with cached natural logs.
struct CountTable {
  std::map<int, BigUint> entries;
  std::optional<double> ln_of(int n) const;
};

}  // namespace ggl
