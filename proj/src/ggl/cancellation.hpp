#pragma once

#include <vector>

#include "ggl/words.hpp"

namespace ggl {

// Relators are an ordered tuple (repetition allowed), each nonempty and
// cyclically reduced.
struct Presentation {
  int rank = 2;
  std::vector<CyclicWord> relators;
};

Presentation make_presentation(int k, std::vector<CyclicWord> relators);

// All cyclic permutations of every relator and its inverse, deduplicated.
std::vector<Word> symmetrize(const Presentation& p);

// A piece is a maximal common prefix of two distinct elements of the
// symmetrized set. C'(lambda) holds iff every piece occurring in a relator
// r has length strictly below lambda * |r|.
struct PieceReport {
  double lambda = 0.0;
  int max_piece = 0;
  std::vector<int> relator_max_piece;   // per relator
  std::vector<double> relator_ratio;    // max piece / |relator|
  bool satisfied = false;
};

PieceReport is_c_prime(const Presentation& p, double lambda);

// w = u^d as a letter sequence for some d >= 2 (divisor scan).
bool is_proper_power(const CyclicWord& w);

// Every cyclic window of length max(1, ceil(|r|/6)) contains all generator
// indices 1..k up to sign.
bool covers_all_generators(const CyclicWord& r, int k);

// Primitivity in F_k: gcd filter on the abelianization, then Whitehead
// peak reduction on the cyclic word; primitive iff cyclic length 1 is
// reached. The automorphism enumeration grows as 2k * 4^{k-1}; ranks past
// max_rank throw capability_error.
bool is_primitive(const Word& w, int max_rank = 4);

// mu / (15L + 3mu) and whether it sits within the C'(1/6) regime.
struct LambdaBound {
  double value = 0.0;
  bool within_one_sixth = false;
};
LambdaBound lambda_bound(double mu, int L);

}  // namespace ggl
