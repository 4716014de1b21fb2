#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ggl/bigint.hpp"

namespace ggl {

// Words over the modular group Z_2 * Z_3 in the alphabet {a, b, B} where
// B = b^-1. Letters are coded 0 = a, 1 = b, 2 = B. A word is reduced when
// it avoids the factors aa, bb, BB, bB, Bb; cyclically reduced when all its
// cyclic permutations are reduced too (single letters qualify).
using ModLetters = std::vector<int>;

inline int mod_inverse_letter(int l) { return l == 0 ? 0 : 3 - l; }  // a<->a, b<->B
inline int mod_eta_letter(int l) { return l == 0 ? 0 : 3 - l; }      // same letter map

struct ModularWord {
  ModLetters letters;
  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const ModularWord&) const = default;
};

bool is_reduced_modular(const ModLetters& letters);
bool is_cyclically_reduced_modular(const ModLetters& letters);

// Rewrites with aa -> e, bB -> e, Bb -> e, bb -> B, BB -> b to the fixed
// point (the normal form in Z_2 * Z_3 over this alphabet).
ModularWord reduce_modular(const ModLetters& raw);
// Additionally rewrites across the wrap until every cyclic permutation is
// reduced; the result is conjugate to the input.
ModularWord cyclic_reduce_modular(const ModularWord& w);
ModularWord inverse_modular(const ModularWord& w);
ModularWord eta(const ModularWord& w);  // a -> a, b -> b^-1, letterwise

std::string format_modular(const ModularWord& w);
ModularWord parse_modular(const std::string& text);  // reduces input

// 1 for n = 0; 3 for n = 1; 0 for odd n > 1; 2 * 2^{n/2} for even n.
BigUint count_cyclic_modular(int n);
std::vector<ModularWord> enumerate_cyclic_modular(int n);

enum class OrbitMode { canonical, burnside };

// Canonical key of a tuple's equivalence class: per word, the lexicographic
// minimum over rotations of w and w^-1 (a < b < B); the tuple key sorts the
// per-word forms and takes the minimum over the global eta flip. Two tuples
// get equal keys iff they are equivalent.
struct TupleOrbit {
  std::string canonical_key;
  int size = 0;         // m
  int word_length = 0;  // 2t
};
TupleOrbit tuple_orbit_of(const std::vector<ModularWord>& tuple);

// Number of equivalence classes of m-tuples of cyclically reduced words of
// length 2t under reordering x per-word cyclic permutation x per-word
// inversion x a global eta flip. Canonical mode enumerates all
// (2 * 2^t)^m tuples (capped); Burnside mode (m = 1 only) averages fixed
// points over the rotation x inversion x eta group of order 8t.
BigUint tuple_orbits(int m, int t, OrbitMode mode, std::uint64_t cap = 20'000'000);

// K_m(t) = 2^{m(t+1)} / (2 m! (4t)^m), kept in the log domain.
struct KFormula {
  double ln_value = 0.0;
  double value = 0.0;
};
KFormula k_formula(int m, int t);

// Dominant term of the lower bound on log2 J_eps(t):
//   2^{t eps} * log2( 2^{t+1} / (16 * 2^{t eps} * t) ),
// valid (as a lower bound with positive main term) iff the inner ratio
// exceeds 1. The constant prefactor stays symbolic.
struct JBound {
  double log2_value = 0.0;   // the dominant term, in bits
  double multiplier = 0.0;   // 2^{t eps}
  double log2_ratio = 0.0;   // log2 of the inner ratio
  bool valid = false;
};
JBound j_lower_bound(double epsilon, int t);

// I_k(n) <= 2^{(2k-1)^n}: returns log2 log2 of the bound, n * log2(2k-1).
double i_upper_bound_log2log2(int k, int n);

}  // namespace ggl
