#include "ggl/modular.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "ggl/errors.hpp"
#include "ggl/words.hpp"

namespace ggl {

namespace {

constexpr int kA = 0, kB = 1, kBInv = 2;

// -1: reduced pair; otherwise the pair rewrites to `replacement` (or to
// nothing when replacement == -2).
int pair_rule(int x, int y) {
  if (x == kA && y == kA) return -2;                       // aa -> e
  if ((x == kB && y == kBInv) || (x == kBInv && y == kB)) return -2;  // b b^-1 -> e
  if (x == kB && y == kB) return kBInv;                    // bb -> b^-1
  if (x == kBInv && y == kBInv) return kB;                 // b^-1 b^-1 -> b
  return -1;
}

void check_mod_letters(const ModLetters& letters) {
  for (int l : letters)
    if (l < 0 || l > 2) throw input_error("modular letters must be one of a, b, B");
}

}  // namespace

bool is_reduced_modular(const ModLetters& letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (pair_rule(letters[i], letters[i + 1]) != -1) return false;
  return true;
}

bool is_cyclically_reduced_modular(const ModLetters& letters) {
  if (!is_reduced_modular(letters)) return false;
  if (letters.size() >= 2 && pair_rule(letters.back(), letters.front()) != -1) return false;
  return true;
}

ModularWord reduce_modular(const ModLetters& raw) {
  check_mod_letters(raw);
  ModLetters stack;
  stack.reserve(raw.size());
  for (int l : raw) {
    int cur = l;
    while (!stack.empty()) {
      const int rule = pair_rule(stack.back(), cur);
      if (rule == -1) break;
      stack.pop_back();
      if (rule == -2) {
        cur = -1;
        break;
      }
      cur = rule;  // pair collapsed to a single letter; recheck below it
    }
    if (cur != -1) stack.push_back(cur);
  }
  return ModularWord{std::move(stack)};
}

ModularWord cyclic_reduce_modular(const ModularWord& w) {
  ModLetters cur = reduce_modular(w.letters).letters;
  while (cur.size() >= 2) {
    const int rule = pair_rule(cur.back(), cur.front());
    if (rule == -1) break;
    // rewrite across the wrap, then restore linear reducedness
    ModLetters next;
    if (rule == -2) {
      next.assign(cur.begin() + 1, cur.end() - 1);
    } else {
      next.push_back(rule);
      next.insert(next.end(), cur.begin() + 1, cur.end() - 1);
    }
    cur = reduce_modular(next).letters;
  }
  return ModularWord{std::move(cur)};
}

ModularWord inverse_modular(const ModularWord& w) {
  ModLetters inv(w.letters.rbegin(), w.letters.rend());
  for (int& l : inv) l = mod_inverse_letter(l);
  return ModularWord{std::move(inv)};
}

ModularWord eta(const ModularWord& w) {
  ModLetters out = w.letters;
  for (int& l : out) l = mod_eta_letter(l);
  return ModularWord{std::move(out)};
}

std::string format_modular(const ModularWord& w) {
  if (w.letters.empty()) return "ε";
  std::string out;
  out.reserve(w.letters.size());
  for (int l : w.letters) out.push_back(l == kA ? 'a' : (l == kB ? 'b' : 'B'));
  return out;
}

ModularWord parse_modular(const std::string& text) {
  if (text.empty() || text == "ε") return {};
  ModLetters letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == 'a')
      letters.push_back(kA);
    else if (c == 'b')
      letters.push_back(kB);
    else if (c == 'B')
      letters.push_back(kBInv);
    else
      throw input_error(std::string("invalid modular letter '") + c + "'");
  }
  return reduce_modular(letters);
}

BigUint count_cyclic_modular(int n) {
  if (n < 0) throw input_error("length must be nonnegative");
  if (n == 0) return BigUint{1};
  if (n == 1) return BigUint{3};
  if (n % 2 == 1) return BigUint{};
  BigUint out = BigUint::pow(2, static_cast<unsigned>(n / 2));
  out.mul_small(2);
  return out;
}

std::vector<ModularWord> enumerate_cyclic_modular(int n) {
  if (n < 0) throw input_error("length must be nonnegative");
  std::vector<ModularWord> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  ModLetters prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (is_cyclically_reduced_modular(prefix)) out.push_back(ModularWord{prefix});
      return;
    }
    for (int l = 0; l < 3; ++l) {
      if (pos > 0 && pair_rule(prefix[pos - 1], l) != -1) continue;
      prefix.push_back(l);
      self(self, pos + 1);
      prefix.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

ModLetters rotate_mod(const ModLetters& letters, int offset) {
  if (letters.empty()) return {};
  const int n = static_cast<int>(letters.size());
  const int shift = ((offset % n) + n) % n;
  ModLetters out;
  out.reserve(letters.size());
  out.insert(out.end(), letters.begin() + shift, letters.end());
  out.insert(out.end(), letters.begin(), letters.begin() + shift);
  return out;
}

// Lexicographic minimum over all rotations of w and of w^-1 (a < b < B).
ModLetters word_canonical(const ModularWord& w) {
  ModLetters best = w.letters;
  const ModLetters inv = inverse_modular(w).letters;
  for (int offset = 0; offset < w.length(); ++offset) {
    for (const ModLetters* base : {&w.letters, &inv}) {
      ModLetters rot = rotate_mod(*base, offset);
      if (rot < best) best = std::move(rot);
    }
  }
  return best;
}

std::string tuple_key(std::vector<ModLetters> parts) {
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& part : parts) {
    for (int l : part) key.push_back(static_cast<char>('0' + l));
    key.push_back('|');
  }
  return key;
}

}  // namespace

TupleOrbit tuple_orbit_of(const std::vector<ModularWord>& tuple) {
  if (tuple.empty()) throw input_error("tuple must be nonempty");
  std::vector<ModLetters> plain, flipped;
  plain.reserve(tuple.size());
  flipped.reserve(tuple.size());
  for (const ModularWord& w : tuple) {
    if (!is_cyclically_reduced_modular(w.letters))
      throw input_error("tuple entries must be cyclically reduced");
    plain.push_back(word_canonical(w));
    flipped.push_back(word_canonical(eta(w)));
  }
  TupleOrbit orbit;
  orbit.size = static_cast<int>(tuple.size());
  orbit.word_length = tuple.front().length();
  orbit.canonical_key = std::min(tuple_key(std::move(plain)), tuple_key(std::move(flipped)));
  return orbit;
}

namespace {

BigUint orbits_canonical(int m, int t, std::uint64_t cap) {
  const std::vector<ModularWord> words = enumerate_cyclic_modular(2 * t);
  const std::uint64_t count = words.size();
  double total = 1.0;
  for (int i = 0; i < m; ++i) total *= static_cast<double>(count);
  if (total > static_cast<double>(cap))
    throw cap_error("tuple enumeration of " + std::to_string(total) + " exceeds cap " +
                    std::to_string(cap));
  std::unordered_set<std::string> classes;
  std::vector<std::size_t> odometer(static_cast<std::size_t>(m), 0);
  std::vector<ModularWord> tuple(static_cast<std::size_t>(m));
  for (;;) {
    for (int i = 0; i < m; ++i) tuple[i] = words[odometer[i]];
    classes.insert(tuple_orbit_of(tuple).canonical_key);
    int pos = m - 1;
    while (pos >= 0 && ++odometer[pos] == count) {
      odometer[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return BigUint{classes.size()};
}

// m = 1: average fixed points of w -> rot_r(inv^e(eta^delta(w))) over the
// group of order 8t.
BigUint orbits_burnside(int t) {
  const std::vector<ModularWord> words = enumerate_cyclic_modular(2 * t);
  const int L = 2 * t;
  std::uint64_t fixed_total = 0;
  for (int r = 0; r < L; ++r) {
    for (int e = 0; e < 2; ++e) {
      for (int delta = 0; delta < 2; ++delta) {
        for (const ModularWord& w : words) {
          ModularWord image = delta ? eta(w) : w;
          if (e) image = inverse_modular(image);
          image.letters = rotate_mod(image.letters, r);
          if (image == w) ++fixed_total;
        }
      }
    }
  }
  const std::uint64_t group_order = static_cast<std::uint64_t>(8) * t;
  if (fixed_total % group_order != 0)
    throw std::logic_error("Burnside sum not divisible by group order");
  return BigUint{fixed_total / group_order};
}

}  // namespace

BigUint tuple_orbits(int m, int t, OrbitMode mode, std::uint64_t cap) {
  if (m < 1) throw input_error("tuple size must be at least 1");
  if (t < 1) throw input_error("half-length t must be at least 1");
  if (mode == OrbitMode::burnside) {
    if (m != 1) throw capability_error("Burnside mode implemented for m = 1");
    return orbits_burnside(t);
  }
  return orbits_canonical(m, t, cap);
}

KFormula k_formula(int m, int t) {
  if (m < 1 || t < 1) throw input_error("m and t must be at least 1");
  constexpr double kLn2 = 0.6931471805599453094;
  KFormula out;
  out.ln_value = static_cast<double>(m) * (t + 1) * kLn2 - kLn2 -
                 std::lgamma(static_cast<double>(m) + 1.0) -
                 static_cast<double>(m) * std::log(4.0 * t);
  out.value = std::exp(out.ln_value);
  return out;
}

JBound j_lower_bound(double epsilon, int t) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw input_error("epsilon must lie in (0,1)");
  if (t < 1) throw input_error("t must be at least 1");
  JBound out;
  out.multiplier = std::exp2(static_cast<double>(t) * epsilon);
  out.log2_ratio = (t + 1.0) - 4.0 - t * epsilon - std::log2(static_cast<double>(t));
  out.log2_value = out.multiplier * out.log2_ratio;
  out.valid = out.log2_ratio > 0.0;
  return out;
}

double i_upper_bound_log2log2(int k, int n) {
  check_rank(k);
  if (n < 1) throw input_error("n must be at least 1");
  return static_cast<double>(n) * std::log2(2.0 * k - 1.0);
}

}  // namespace ggl
