#include "ggl/cancellation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ggl/errors.hpp"

namespace ggl {

Presentation make_presentation(int k, std::vector<CyclicWord> relators) {
  check_rank(k);
  for (const CyclicWord& r : relators) {
    if (r.length() == 0) throw input_error("relators must be nonempty");
    if (r.word.rank != k) throw input_error("relator rank does not match presentation");
  }
  return Presentation{k, std::move(relators)};
}

std::vector<Word> symmetrize(const Presentation& p) {
  std::set<Letters> seen;
  std::vector<Word> out;
  for (const CyclicWord& r : p.relators) {
    for (const Letters& base : {r.word.letters, r.word.inverse().letters}) {
      for (int offset = 0; offset < static_cast<int>(base.size()); ++offset) {
        Letters rot = rotate(base, offset);
        if (seen.insert(rot).second) out.push_back(Word{p.rank, std::move(rot)});
      }
    }
  }
  return out;
}

namespace {

// A cyclic shift of some relator (or its inverse), viewed in place inside a
// doubled letter buffer. Keeps the symmetrized set affordable at hundreds of
// thousands of elements.
struct ShiftView {
  const int* data;
  int len;
  int source;
};

int view_lcp(const ShiftView& a, const ShiftView& b) {
  const int n = std::min(a.len, b.len);
  int i = 0;
  while (i < n && a.data[i] == b.data[i]) ++i;
  return i;
}

bool view_less(const ShiftView& a, const ShiftView& b) {
  const int n = std::min(a.len, b.len);
  for (int i = 0; i < n; ++i)
    if (a.data[i] != b.data[i]) return a.data[i] < b.data[i];
  return a.len < b.len;
}

bool view_equal(const ShiftView& a, const ShiftView& b) {
  if (a.len != b.len) return false;
  return std::equal(a.data, a.data + a.len, b.data);
}

}  // namespace

PieceReport is_c_prime(const Presentation& p, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw input_error("lambda must lie in (0,1]");
  PieceReport report;
  report.lambda = lambda;
  report.relator_max_piece.assign(p.relators.size(), 0);
  report.relator_ratio.assign(p.relators.size(), 0.0);

  std::vector<Letters> buffers;  // doubled letters, two per relator
  buffers.reserve(2 * p.relators.size());  // views hold pointers into these
  std::vector<ShiftView> views;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const CyclicWord& r = p.relators[i];
    const int n = r.length();
    for (const Letters& base : {r.word.letters, r.word.inverse().letters}) {
      Letters doubled = base;
      doubled.insert(doubled.end(), base.begin(), base.end());
      buffers.push_back(std::move(doubled));
      const int* data = buffers.back().data();
      for (int offset = 0; offset < n; ++offset)
        views.push_back(ShiftView{data + offset, n, static_cast<int>(i)});
    }
  }
  std::sort(views.begin(), views.end(), view_less);

  // Group identical words (a shift can belong to several relators), then a
  // piece shared by any two distinct elements shows up as the common prefix
  // of neighbouring groups in sorted order.
  std::vector<std::size_t> group_start;
  for (std::size_t i = 0; i < views.size(); ++i)
    if (i == 0 || !view_equal(views[i], views[i - 1])) group_start.push_back(i);
  group_start.push_back(views.size());

  const std::size_t groups = group_start.size() - 1;
  for (std::size_t g = 0; g < groups; ++g) {
    int piece = 0;
    if (g > 0) piece = std::max(piece, view_lcp(views[group_start[g]], views[group_start[g] - 1]));
    if (g + 1 < groups)
      piece = std::max(piece, view_lcp(views[group_start[g]], views[group_start[g + 1]]));
    report.max_piece = std::max(report.max_piece, piece);
    for (std::size_t i = group_start[g]; i < group_start[g + 1]; ++i) {
      int& best = report.relator_max_piece[static_cast<std::size_t>(views[i].source)];
      best = std::max(best, piece);
    }
  }
  report.satisfied = true;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const int len = p.relators[i].length();
    report.relator_ratio[i] = static_cast<double>(report.relator_max_piece[i]) / len;
    if (!(report.relator_max_piece[i] < lambda * len)) report.satisfied = false;
  }
  return report;
}

bool is_proper_power(const CyclicWord& w) {
  const int n = w.length();
  if (n < 1) throw input_error("proper-power test needs a nonempty word");
  for (int period = 1; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool matches = true;
    for (int i = period; i < n && matches; ++i)
      matches = w.word.letters[i] == w.word.letters[i - period];
    if (matches) return true;
  }
  return false;
}

bool covers_all_generators(const CyclicWord& r, int k) {
  check_rank(k);
  const int n = r.length();
  if (n < 1) throw input_error("coverage test needs a nonempty word");
  const int window = std::max(1, (n + 5) / 6);  // ceil(n/6)
  for (int start = 0; start < n; ++start) {
    std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
    int found = 0;
    for (int j = 0; j < window; ++j) {
      int gen = std::abs(r.word.letters[(start + j) % n]);
      if (!seen[gen]) {
        seen[gen] = 1;
        ++found;
      }
    }
    if (found < k) return false;
  }
  return true;
}

namespace {

// Whitehead automorphism of the second kind, coded by the multiplier letter
// `a` and a per-generator membership state for the cut set A (a in A,
// a^-1 not in A). For a letter y with y, y^-1 both outside {a, a^-1}:
//   y in A, y^-1 not in A  ->  y a
//   y not in A, y^-1 in A  ->  a^-1 y
//   both in A              ->  a^-1 y a
//   neither                ->  y
struct Whitehead {
  int multiplier;                 // the letter a
  std::vector<unsigned> state;    // per generator 1..k: 0 none, 1 +g in A, 2 -g in A, 3 both

  void apply_letter(int y, Letters& out) const {
    const int a = multiplier;
    if (y == a || y == -a) {
      out.push_back(y);
      return;
    }
    const int gen = std::abs(y);
    const unsigned s = state[static_cast<std::size_t>(gen)];
    const bool y_in = (y > 0) ? (s & 1u) : (s & 2u);
    const bool yinv_in = (y > 0) ? (s & 2u) : (s & 1u);
    if (y_in && !yinv_in) {
      out.push_back(y);
      out.push_back(a);
    } else if (!y_in && yinv_in) {
      out.push_back(-a);
      out.push_back(y);
    } else if (y_in && yinv_in) {
      out.push_back(-a);
      out.push_back(y);
      out.push_back(a);
    } else {
      out.push_back(y);
    }
  }

  CyclicWord apply(const CyclicWord& w, int k) const {
    Letters image;
    image.reserve(w.word.letters.size() * 3);
    for (int y : w.word.letters) apply_letter(y, image);
    return cyclic_reduce(free_reduce(image, Alphabet{k}));
  }
};

std::vector<Whitehead> whitehead_automorphisms(int k) {
  std::vector<Whitehead> out;
  const unsigned combos = 1u << (2 * (k - 1));  // 4^{k-1}
  for (int idx = 0; idx < 2 * k; ++idx) {
    const int a = letter_at(idx);
    for (unsigned mask = 1; mask < combos; ++mask) {  // mask 0 is the identity
      Whitehead w;
      w.multiplier = a;
      w.state.assign(static_cast<std::size_t>(k) + 1, 0);
      unsigned rest = mask;
      for (int gen = 1; gen <= k; ++gen) {
        if (gen == std::abs(a)) continue;
        w.state[static_cast<std::size_t>(gen)] = rest & 3u;
        rest >>= 2;
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

bool is_primitive(const Word& w, int max_rank) {
  const int k = w.rank;
  check_rank(k);
  if (k > max_rank)
    throw capability_error("primitivity testing configured for rank <= " +
                           std::to_string(max_rank));
  // Necessary condition: the abelianization vector of a primitive element
  // extends to a unimodular matrix, so its entries have gcd 1.
  std::vector<long long> abelian(static_cast<std::size_t>(k) + 1, 0);
  for (int l : w.letters) abelian[static_cast<std::size_t>(std::abs(l))] += (l > 0) ? 1 : -1;
  long long gcd = 0;
  for (int gen = 1; gen <= k; ++gen) gcd = std::gcd(gcd, std::abs(abelian[gen]));
  if (gcd != 1) return false;

  const std::vector<Whitehead> autos = whitehead_automorphisms(k);
  CyclicWord current = cyclic_reduce(w);
  for (;;) {
    if (current.length() <= 1) return current.length() == 1;
    CyclicWord best = current;
    for (const Whitehead& phi : autos) {
      CyclicWord image = phi.apply(current, k);
      if (image.length() < best.length()) best = std::move(image);
    }
    if (best.length() >= current.length()) return false;  // Whitehead minimum > 1
    current = std::move(best);
  }
}

LambdaBound lambda_bound(double mu, int L) {
  if (!(mu > 0.0 && mu < 1.0)) throw input_error("mu must lie in (0,1)");
  if (L < 2) throw input_error("L must be at least 2");
  LambdaBound out;
  out.value = mu / (15.0 * L + 3.0 * mu);
  out.within_one_sixth = out.value <= 1.0 / 6.0 + 1e-12;
  return out;
}

}  // namespace ggl
