#include "ggl/words.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "ggl/errors.hpp"
#include "ggl/rng.hpp"

namespace ggl {

void check_rank(int k) {
  if (k < 2) throw input_error("alphabet rank must be at least 2, got " + std::to_string(k));
}

void check_letters(const Letters& letters, int k) {
  for (int l : letters) {
    if (l == 0 || l > k || l < -k)
      throw input_error("letter " + std::to_string(l) + " invalid for rank " + std::to_string(k));
  }
}

bool is_freely_reduced(const Letters& letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i + 1] == -letters[i]) return false;
  return true;
}

bool is_cyclically_reduced(const Letters& letters) {
  if (!is_freely_reduced(letters)) return false;
  if (letters.size() >= 2 && letters.back() == -letters.front()) return false;
  return true;
}

Word Word::inverse() const {
  Letters inv(letters.rbegin(), letters.rend());
  for (int& l : inv) l = -l;
  return Word{rank, std::move(inv)};
}

Word free_reduce(const Letters& raw, const Alphabet& alphabet) {
  check_rank(alphabet.rank);
  check_letters(raw, alphabet.rank);
  Letters stack;
  stack.reserve(raw.size());
  for (int l : raw) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word{alphabet.rank, std::move(stack)};
}

Word make_word(int k, Letters letters) {
  check_rank(k);
  check_letters(letters, k);
  if (!is_freely_reduced(letters)) throw input_error("letters are not freely reduced");
  return Word{k, std::move(letters)};
}

CyclicWord cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[hi - 1] == -w.letters[lo]) {
    ++lo;
    --hi;
  }
  return CyclicWord{Word{w.rank, Letters(w.letters.begin() + lo, w.letters.begin() + hi)}};
}

CyclicWord make_cyclic(int k, Letters letters) {
  Word w = make_word(k, std::move(letters));
  if (w.letters.size() >= 2 && w.letters.back() == -w.letters.front())
    throw input_error("word is not cyclically reduced");
  return CyclicWord{std::move(w)};
}

Letters rotate(const Letters& letters, int offset) {
  if (letters.empty()) return {};
  int n = static_cast<int>(letters.size());
  int shift = ((offset % n) + n) % n;
  Letters out;
  out.reserve(letters.size());
  out.insert(out.end(), letters.begin() + shift, letters.end());
  out.insert(out.end(), letters.begin(), letters.begin() + shift);
  return out;
}

std::string format_letters(const Letters& letters, int k) {
  if (letters.empty()) return "ε";
  if (k <= 26) {
    std::string out;
    out.reserve(letters.size());
    for (int l : letters)
      out.push_back(static_cast<char>((l > 0 ? 'a' + l : 'A' - l) - 1));
    return out;
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out << ' ';
    out << letters[i];
  }
  return out.str();
}

std::string format_word(const Word& w) { return format_letters(w.letters, w.rank); }

namespace {

Letters parse_letters(int k, const std::string& text) {
  if (text.empty() || text == "ε") return {};
  const bool generic =
      text.find(' ') != std::string::npos || text.find('-') != std::string::npos ||
      std::any_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); });
  Letters letters;
  if (generic) {
    std::istringstream in(text);
    int v;
    while (in >> v) letters.push_back(v);
    if (!in.eof()) throw input_error("malformed generic word text: " + text);
  } else {
    if (k > 26) throw input_error("compact word text requires rank <= 26");
    for (char c : text) {
      if (c >= 'a' && c <= 'z')
        letters.push_back(c - 'a' + 1);
      else if (c >= 'A' && c <= 'Z')
        letters.push_back(-(c - 'A' + 1));
      else
        throw input_error(std::string("invalid character '") + c + "' in word text");
    }
  }
  return letters;
}

}  // namespace

Word parse_word(int k, const std::string& text) {
  return free_reduce(parse_letters(k, text), Alphabet{k});
}

CyclicWord parse_cyclic_word(int k, const std::string& text) {
  return cyclic_reduce(parse_word(k, text));
}

BigUint count_cyclic(int n, int k) {
  check_rank(k);
  if (n < 0) throw input_error("length must be nonnegative");
  if (n == 0) return BigUint{1};
  BigUint out = BigUint::pow(2 * k - 1, static_cast<unsigned>(n));
  out += BigUint{1};
  if (n % 2 == 0) out += BigUint{static_cast<std::uint64_t>(k - 1) * 2};
  return out;
}

double count_cyclic_ln(int n, int k) { return count_cyclic(n, k).ln(); }

namespace {

bool enumerate_rec(Letters& prefix, int n, int k,
                   const std::function<bool(const CyclicWord&)>& visit) {
  int pos = static_cast<int>(prefix.size());
  if (pos == n) {
    return visit(CyclicWord{Word{k, prefix}});
  }
  for (int idx = 0; idx < 2 * k; ++idx) {
    int l = letter_at(idx);
    if (pos > 0 && l == -prefix[pos - 1]) continue;          // free reduction
    if (pos == n - 1 && n >= 2 && l == -prefix[0]) continue;  // cyclic closure
    prefix.push_back(l);
    bool keep_going = enumerate_rec(prefix, n, k, visit);
    prefix.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void enumerate_cyclic(int n, int k, const std::function<bool(const CyclicWord&)>& visit) {
  check_rank(k);
  if (n < 0) throw input_error("length must be nonnegative");
  Letters prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  enumerate_rec(prefix, n, k, visit);
}

std::vector<CyclicWord> all_cyclic(int n, int k) {
  std::vector<CyclicWord> out;
  enumerate_cyclic(n, k, [&](const CyclicWord& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

namespace {

std::uint64_t count_leaves(int pos, int n, int k, int first, int prev) {
  if (pos == n) return 1;
  std::uint64_t total = 0;
  for (int idx = 0; idx < 2 * k; ++idx) {
    const int l = letter_at(idx);
    if (pos > 0 && l == -prev) continue;
    if (pos == n - 1 && n >= 2 && l == -first) continue;
    total += count_leaves(pos + 1, n, k, pos == 0 ? l : first, l);
  }
  return total;
}

}  // namespace

std::uint64_t enumeration_count(int n, int k) {
  check_rank(k);
  if (n < 0) throw input_error("length must be nonnegative");
  return count_leaves(0, n, k, 0, 0);
}

CyclicWord sample_cyclic(int n, int k, std::uint64_t seed) {
  check_rank(k);
  if (n < 1) throw input_error("sample length must be at least 1");
  Rng rng(seed);
  Letters letters(static_cast<std::size_t>(n));
  for (;;) {
    letters[0] = letter_at(static_cast<int>(rng.below(2 * k)));
    for (int i = 1; i < n; ++i) {
      // Uniform over the 2k-1 letters that do not cancel the previous one.
      int skip = letter_index(-letters[i - 1]);
      int idx = static_cast<int>(rng.below(2 * k - 1));
      if (idx >= skip) ++idx;
      letters[i] = letter_at(idx);
    }
    if (n == 1 || letters.back() != -letters.front())
      return CyclicWord{Word{k, letters}};
  }
}

LetterAutomaton LetterAutomaton::accept_all(int k) {
  check_rank(k);
  LetterAutomaton m;
  m.rank = k;
  m.next.assign(1, std::vector<int>(2 * k, 0));
  m.accept = {1};
  return m;
}

LetterAutomaton LetterAutomaton::avoiding_factor(int k, const Letters& factor) {
  check_rank(k);
  check_letters(factor, k);
  if (factor.empty()) throw input_error("factor must be nonempty");
  const int f = static_cast<int>(factor.size());
  // KMP failure function over the factor.
  std::vector<int> fail(f, 0);
  for (int i = 1, j = 0; i < f; ++i) {
    while (j > 0 && factor[i] != factor[j]) j = fail[j - 1];
    if (factor[i] == factor[j]) ++j;
    fail[i] = j;
  }
  LetterAutomaton m;
  m.rank = k;
  m.next.assign(static_cast<std::size_t>(f), std::vector<int>(2 * k, 0));
  m.accept.assign(static_cast<std::size_t>(f), 1);
  for (int s = 0; s < f; ++s) {
    for (int idx = 0; idx < 2 * k; ++idx) {
      int l = letter_at(idx);
      int j = s;
      while (j > 0 && factor[j] != l) j = fail[j - 1];
      if (factor[j] == l) ++j;
      m.next[s][idx] = (j == f) ? kReject : j;
    }
  }
  return m;
}

LetterAutomaton LetterAutomaton::head_run(int k, int letter, int run_len) {
  check_rank(k);
  check_letters({letter}, k);
  if (run_len < 0) throw input_error("run length must be nonnegative");
  LetterAutomaton m;
  m.rank = k;
  const int states = run_len + 1;
  m.next.assign(static_cast<std::size_t>(states), std::vector<int>(2 * k, kReject));
  m.accept.assign(static_cast<std::size_t>(states), 0);
  for (int s = 0; s < run_len; ++s) m.next[s][letter_index(letter)] = s + 1;
  for (int idx = 0; idx < 2 * k; ++idx) m.next[run_len][idx] = run_len;
  m.accept[run_len] = 1;
  return m;
}

BigUint count_cyclic_accepted(int n, int k, const LetterAutomaton& machine) {
  check_rank(k);
  if (machine.rank != k) throw input_error("automaton rank does not match");
  if (n < 0) throw input_error("length must be nonnegative");
  if (n == 0) return machine.accept[machine.start] ? BigUint{1} : BigUint{};
  const int S = static_cast<int>(machine.next.size());
  const int A = 2 * k;
  // dp[(state*A + first)*A + last]
  auto cell = [A](int s, int first, int last) { return (s * A + first) * A + last; };
  std::vector<BigUint> dp(static_cast<std::size_t>(S) * A * A);
  for (int idx = 0; idx < A; ++idx) {
    int s = machine.next[machine.start][idx];
    if (s != LetterAutomaton::kReject) dp[cell(s, idx, idx)] += BigUint{1};
  }
  for (int step = 1; step < n; ++step) {
    std::vector<BigUint> nxt(dp.size());
    for (int s = 0; s < S; ++s) {
      for (int first = 0; first < A; ++first) {
        for (int last = 0; last < A; ++last) {
          const BigUint& cur = dp[cell(s, first, last)];
          if (cur.is_zero()) continue;
          const int banned = letter_index(-letter_at(last));
          for (int idx = 0; idx < A; ++idx) {
            if (idx == banned) continue;
            int t = machine.next[s][idx];
            if (t == LetterAutomaton::kReject) continue;
            nxt[cell(t, first, idx)] += cur;
          }
        }
      }
    }
    dp.swap(nxt);
  }
  BigUint total;
  for (int s = 0; s < S; ++s) {
    if (!machine.accept[s]) continue;
    for (int first = 0; first < A; ++first) {
      const int banned = letter_index(-letter_at(first));
      for (int last = 0; last < A; ++last) {
        if (n >= 2 && last == banned) continue;  // cyclic closure
        total += dp[cell(s, first, last)];
      }
    }
  }
  return total;
}

std::optional<double> CountTable::ln_of(int n) const {
  auto it = entries.find(n);
  if (it == entries.end() || it->second.is_zero()) return std::nullopt;
  return it->second.ln();
}

}  // namespace ggl
