#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "ggl/bigint.hpp"
#include "ggl/errors.hpp"
#include "ggl/rng.hpp"
#include "ggl/words.hpp"

using namespace ggl;

TEST_CASE("biguint arithmetic and decimal rendering") {
  CHECK(BigUint{0}.to_decimal() == "0");
  CHECK(BigUint{12345}.to_decimal() == "12345");
  CHECK((BigUint{7} + BigUint{8}).to_decimal() == "15");
  // 2^130 straddles three limbs
  BigUint big = BigUint::pow(2, 130);
  CHECK(big.to_decimal() == "1361129467683753853853498429727072845824");
  CHECK((big - BigUint{1} + BigUint{1}) == big);
  CHECK((BigUint{1000000007} * BigUint{998244353}).to_decimal() == "998244359987710471");
  CHECK((BigUint::pow(10, 25) * BigUint::pow(10, 13)).to_decimal() ==
        "1" + std::string(38, '0'));
  CHECK(std::abs(BigUint::pow(3, 100).ln() - 100.0 * std::log(3.0)) < 1e-9 * 100 * std::log(3.0));
  CHECK(BigUint{5} < BigUint{6});
  CHECK(BigUint::pow(7, 30) > BigUint::pow(7, 29));
}

TEST_CASE("free reduction") {
  Alphabet f2{2};
  CHECK(free_reduce({1, -1, 2}, f2).letters == Letters{2});
  CHECK(free_reduce({1, 2, -2, -1}, f2).letters == Letters{});
  CHECK(free_reduce({1, 2, 1}, f2).letters == Letters{1, 2, 1});
  // idempotent
  Word once = free_reduce({1, 1, -1, 2, -2, -1}, f2);
  CHECK(free_reduce(once.letters, f2).letters == once.letters);
  CHECK_THROWS_AS(free_reduce({3}, f2), input_error);
  CHECK_THROWS_AS(free_reduce({0}, f2), input_error);
}

TEST_CASE("free reduction matches an iterated-scan model") {
  // model: delete the first cancelling pair found, restart, repeat
  auto model_reduce = [](Letters raw) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        if (raw[i + 1] == -raw[i]) {
          raw.erase(raw.begin() + i, raw.begin() + i + 2);
          changed = true;
          break;
        }
      }
    }
    return raw;
  };
  Rng rng(314159);
  for (int trial = 0; trial < 500; ++trial) {
    Letters raw;
    const int len = 1 + static_cast<int>(rng.below(14));
    for (int i = 0; i < len; ++i) raw.push_back(letter_at(static_cast<int>(rng.below(4))));
    CHECK(free_reduce(raw, Alphabet{2}).letters == model_reduce(raw));
  }
}

TEST_CASE("cyclic reduction") {
  Alphabet f2{2};
  CHECK(cyclic_reduce(make_word(2, {-1, 2, 1})).word.letters == Letters{2});
  CHECK(cyclic_reduce(make_word(2, {1, 2})).word.letters == Letters{1, 2});
  CHECK(cyclic_reduce(make_word(2, {2, -1, -2, 1})).word.letters == Letters{2, -1, -2, 1});
  // output never longer, and idempotent
  for (const Letters& raw : {Letters{1, 2, -1}, Letters{-2, 1, 1, 2}, Letters{1}}) {
    Word w = free_reduce(raw, f2);
    CyclicWord c = cyclic_reduce(w);
    CHECK(c.length() <= w.length());
    CHECK(cyclic_reduce(c.word).word.letters == c.word.letters);
  }
}

TEST_CASE("word text round trip") {
  CHECK(format_word(make_word(2, {1, 2, -1, -2})) == "abAB");
  CHECK(format_word(make_word(2, {})) == "ε");
  CHECK(parse_word(2, "abAB").letters == Letters{1, 2, -1, -2});
  CHECK(parse_word(2, "ε").letters == Letters{});
  CHECK(parse_word(3, "1 2 -1 -3").letters == Letters{1, 2, -1, -3});
  // parse free-reduces
  CHECK(parse_word(2, "aA").letters == Letters{});
  CHECK_THROWS_AS(parse_word(2, "xyz?"), input_error);
  CHECK_THROWS_AS(parse_word(2, "abc"), input_error);
  // ranks past 26 switch to the generic signed-index form
  Word wide = make_word(30, {27, -30, 1});
  CHECK(format_word(wide) == "27 -30 1");
  CHECK(parse_word(30, format_word(wide)) == wide);
  CHECK_THROWS_AS(parse_word(30, "abc"), input_error);  // compact needs k <= 26
}

TEST_CASE("rivin count against exhaustive enumeration") {
  CHECK(count_cyclic(0, 2).to_decimal() == "1");
  CHECK(count_cyclic(1, 2).to_decimal() == "4");
  CHECK(count_cyclic(2, 2).to_decimal() == "12");
  CHECK(count_cyclic(3, 2).to_decimal() == "28");
  for (int k : {2, 3}) {
    for (int n = 0; n <= 8; ++n) {
      std::uint64_t seen = 0;
      enumerate_cyclic(n, k, [&](const CyclicWord& w) {
        CHECK(is_cyclically_reduced(w.word.letters));
        CHECK(w.length() == n);
        ++seen;
        return true;
      });
      CHECK(BigUint{seen} == count_cyclic(n, k));
    }
  }
}

TEST_CASE("enumeration is lexicographic and duplicate-free") {
  std::vector<Letters> words;
  enumerate_cyclic(3, 2, [&](const CyclicWord& w) {
    words.push_back(w.word.letters);
    return true;
  });
  std::set<Letters> unique(words.begin(), words.end());
  CHECK(unique.size() == words.size());
  auto lex_less = [](const Letters& a, const Letters& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (letter_index(a[i]) != letter_index(b[i])) return letter_index(a[i]) < letter_index(b[i]);
    }
    return false;
  };
  for (std::size_t i = 0; i + 1 < words.size(); ++i) CHECK(lex_less(words[i], words[i + 1]));
  // n = 0 convention: exactly the empty word
  CHECK(all_cyclic(0, 2).size() == 1);
  CHECK(all_cyclic(1, 2).size() == 4);
}

TEST_CASE("rotations of cyclic words stay freely reduced") {
  for (int n = 1; n <= 8; ++n) {
    enumerate_cyclic(n, 2, [&](const CyclicWord& w) {
      for (int offset = 0; offset < n; ++offset)
        CHECK(is_freely_reduced(rotate(w.word.letters, offset)));
      return true;
    });
  }
}

TEST_CASE("sampling: determinism, validity, uniformity") {
  CHECK(sample_cyclic(10, 2, 42) == sample_cyclic(10, 2, 42));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CyclicWord w = sample_cyclic(10, 2, seed);
    CHECK(w.length() == 10);
    CHECK(is_cyclically_reduced(w.word.letters));
  }

  // n = 3, k = 2: each of the 28 words within 5 sigma of uniform
  const int trials = 100000;
  std::map<Letters, int> freq;
  for (int i = 0; i < trials; ++i) ++freq[sample_cyclic(3, 2, derive_seed(901, i)).word.letters];
  CHECK(freq.size() == 28);
  const double p = 1.0 / 28.0;
  const double sigma = std::sqrt(trials * p * (1 - p));
  for (const auto& [letters, count] : freq)
    CHECK(std::abs(count - trials * p) < 5 * sigma);

  // n = 1: chi-square over the 4 letters, p > 0.001 <=> stat < 16.27
  std::map<Letters, int> letter_freq;
  for (int i = 0; i < trials; ++i) ++letter_freq[sample_cyclic(1, 2, derive_seed(77, i)).word.letters];
  double chi2 = 0.0;
  for (const auto& [letters, count] : letter_freq) {
    double expected = trials / 4.0;
    chi2 += (count - expected) * (count - expected) / expected;
  }
  CHECK(letter_freq.size() == 4);
  CHECK(chi2 < 16.27);
}

TEST_CASE("transfer-matrix counting") {
  // accept-all machine reproduces the closed-form count
  for (int k : {2, 3})
    for (int n = 0; n <= 9; ++n)
      CHECK(count_cyclic_accepted(n, k, LetterAutomaton::accept_all(k)) == count_cyclic(n, k));

  // avoiding the factor aa: n=2 excludes exactly "aa", n=1 excludes nothing
  LetterAutomaton no_aa = LetterAutomaton::avoiding_factor(2, {1, 1});
  CHECK(count_cyclic_accepted(2, 2, no_aa).to_decimal() == "11");
  CHECK(count_cyclic_accepted(1, 2, no_aa).to_decimal() == "4");
  // cross-check against filtered enumeration up to n = 8
  for (int n = 3; n <= 8; ++n) {
    std::uint64_t expect = 0;
    enumerate_cyclic(n, 2, [&](const CyclicWord& w) {
      bool has_factor = false;
      for (int i = 0; i + 1 < n; ++i)
        if (w.word.letters[i] == 1 && w.word.letters[i + 1] == 1) has_factor = true;
      if (!has_factor) ++expect;
      return true;
    });
    CHECK(count_cyclic_accepted(n, 2, no_aa) == BigUint{expect});
  }

  // head-run machine vs direct enumeration
  for (int n = 1; n <= 8; ++n) {
    int run = (n + 1) / 2;
    std::uint64_t expect = 0;
    enumerate_cyclic(n, 2, [&](const CyclicWord& w) {
      bool headed = true;
      for (int i = 0; i < run; ++i)
        if (w.word.letters[i] != 1) headed = false;
      if (headed) ++expect;
      return true;
    });
    CHECK(count_cyclic_accepted(n, 2, LetterAutomaton::head_run(2, 1, run)) == BigUint{expect});
  }
}

TEST_CASE("count table logs") {
  CountTable table;
  table.entries[3] = count_cyclic(3, 2);
  table.entries[5] = BigUint{};
  CHECK(table.ln_of(3).has_value());
  CHECK(std::abs(*table.ln_of(3) - std::log(28.0)) < 1e-9);
  CHECK(!table.ln_of(5).has_value());
  CHECK(!table.ln_of(4).has_value());
}
