#pragma once

#include <optional>

#include "ggl/graphs.hpp"
#include "ggl/words.hpp"

namespace ggl {

struct ReadabilityParams {
  double mu = 0.0;         // in (0,1)
  std::optional<int> L;    // absent: plain mu-readability; present: L >= 2
  int rank = 2;            // ambient k

  void validate() const;
};

enum class ReadMode { exact, quotient };

struct ReadabilityVerdict {
  bool readable = false;
  ReadMode mode = ReadMode::quotient;
  int budget = 0;  // floor(mu * |w|) unordered edges
  std::optional<LabeledGraph> witness;
};

// Plain mu-readability: a connected folded graph with a base vertex, no
// degree-1 vertices except possibly the base, cycle rank <= k-1, volume
// <= mu|w|, reading w as an immersed path.
//
// exact mode enumerates all isomorphism classes of candidate graphs up to
// the volume budget (capped; throws capability_error past the cap).
// quotient mode folds w's path graph letter by letter; a traversed quotient
// has at most two degree-1 vertices (the path ends), and a single budgeted
// augmenting edge repairs a second one when possible. Positive verdicts are
// genuine witnesses in both modes; exact is the reference oracle.
ReadabilityVerdict is_mu_readable(const Word& w, const ReadabilityParams& params,
                                  ReadMode mode);

// (mu,L)-readability: folded connected graph, rank <= L, at most two
// degree-1 vertices, some vertex of degree < 2k, volume <= mu|w|. For
// L < k the quotient search is exact (the traversed subgraph of any witness
// is itself a witness and the degree condition is automatic); for L >= k
// this falls back to exact enumeration with the degree check.
ReadabilityVerdict is_muL_readable(const Word& w, const ReadabilityParams& params);
ReadabilityVerdict is_muL_readable(const Word& w, const ReadabilityParams& params,
                                   ReadMode mode);

// (mu,L)-goodness: no cyclic permutation of w or w^-1 has a contiguous
// subword of length >= ceil(|w|/2) that is (mu,L)-readable.
bool is_good(const CyclicWord& w, const ReadabilityParams& params);

// Closed-form thresholds and bounds (natural-log arithmetic, double output).
double mu_max_ao(int k);                 // log_{2k}(1 + 1/(4k-4))
double mu_max_a1(int k, int L);          // (1/3L) log_{2k}(1 + 1/(2(2k-1)^{3L} - 2))
double bound_lemma_ml(int k, double mu, int L);
// ln of C (mu n)^{3L+1} (6L)^n (2k-1)^{mu n}; ln_c defaults to ln 1 = 0.
double readable_count_bound_ln(int n, int k, double mu, int L, double ln_c = 0.0);

// Enumeration cap for the exact decider (max unordered edges in candidate
// witnesses). Requests past it throw capability_error.
inline constexpr int kExactVolumeCap = 8;

}  // namespace ggl
