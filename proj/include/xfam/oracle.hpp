#pragma once
// Independent maximizers for the product |A||B| over cross-intersecting pairs:
// a subset DFS over one whole level (exhaustive, with an exact accounting
// witness) and a lex-segment scan (complete whenever nontriviality is not
// demanded, because lex compression preserves cross-intersection).
#include "xfam/bounds.hpp"
#include "xfam/json_io.hpp"
#include "xfam/setfamily.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace xfam {

// The DFS walks all subsets of one level, so the level size is the exponent.
constexpr int kDefaultLevelCap = 22;
constexpr std::size_t kMaxTieClasses = 1000;

struct SearchConstraints {
  bool nontrivial = false;  // reject pairs whose union has a common element
  // inclusive bounds on |A|, the level-k side
  std::optional<std::pair<BigInt, BigInt>> size_window;
  // close every candidate to its mutual-dual pair before scoring; turning
  // this off scores (A0, dual(A0)) for each subset A0 of the k-level instead
  bool require_maximal = true;
};

struct ExtremalPair {
  Family a;  // level k
  Family b;  // level ell
};

struct SearchResult {
  int n = 0;
  int k = 0;
  int ell = 0;
  SearchConstraints constraints;
  BigInt max_product;  // 0 when no admissible pair exists
  // optimal pairs, deduped up to relabeling of [n] when n <= 9 (exactly
  // otherwise); for k == ell the two orders count as one pair
  std::vector<ExtremalPair> classes;
  bool classes_truncated = false;
  // subsets of the enumeration level accounted for, by visit or by pruned /
  // merged block; equals 2^(level size) exactly when the search completed
  unsigned long long enumerated = 0;
  unsigned long long visited_leaves = 0;
  unsigned long long pruned_subtrees = 0;
  bool exhaustive = false;
  long long elapsed_ms = 0;
};

// Exact maximum over all cross-intersecting pairs meeting the constraints,
// by DFS over the subsets of one level (the smaller level when maximalizing,
// the k-level otherwise). Branches whose best possible product is already
// beaten are pruned; equal products are never pruned, so every optimal pair
// is retained. Throws domain_error when the enumeration level has more than
// level_cap sets.
SearchResult search_exhaustive(int n, int k, int ell,
                               const SearchConstraints& constraints = {},
                               int level_cap = kDefaultLevelCap,
                               int workers = 1);

struct LexSearchResult {
  int n = 0;
  int k = 0;
  int ell = 0;
  BigInt max_product;  // 0 when no feasible segment size exists
  BigInt best_a;       // smallest optimal segment size
  BigInt best_b;       // partner size: best_a * best_b == max_product
  std::optional<std::pair<BigInt, BigInt>> window;
  long long elapsed_ms = 0;
};

// max over a of a * |dual(L_a, ell)| where L_a is the first a k-sets in lex
// order, computed from per-set exclusion thresholds without forming any dual.
// The optional window restricts a (used for the size-windowed bounds).
// Throws domain_error unless 1 <= k <= n and 1 <= ell <= n.
LexSearchResult search_lex(int n, int k, int ell,
                           std::optional<std::pair<BigInt, BigInt>> window = {},
                           long long cap = kDefaultEnumCap);

struct VerifyPoint {
  Params params;
  BigInt predicted;
  BigInt observed;
};

struct VerifyReport {
  Theorem theorem{};
  long long max_n = 0;
  unsigned long long points = 0;
  std::vector<VerifyPoint> mismatches;
  long long elapsed_ms = 0;

  bool all_match() const { return mismatches.empty(); }
};

// Recomputes a product bound by the lex scan on every hypothesis point with
// n <= max_n. Supported: MT, PYBER1, PYBER2 (maxima over plain
// cross-intersecting pairs, where the lex scan is complete). Mismatches are
// collected in the report, not thrown.
VerifyReport verify_theorem(Theorem t, long long max_n);

// Joint lex-minimal relabeling: one permutation of [n] applied to both
// families; unordered additionally allows swapping the two (for k == ell).
// Requires n <= 9.
std::pair<Family, Family> canonical_pair(const Family& a, const Family& b,
                                         bool unordered = false);

Json search_result_to_json(const SearchResult& r);
Json lex_search_result_to_json(const LexSearchResult& r);
Json verify_report_to_json(const VerifyReport& r);

}  // namespace xfam
