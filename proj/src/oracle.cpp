#include "xfam/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace xfam {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

// ---- word masks over the partner level ------------------------------------

int words_for(std::size_t bits) { return int((bits + 63) / 64); }

bool words_equal(const uint64_t* a, const uint64_t* b, int w) {
  for (int i = 0; i < w; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool words_subset(const uint64_t* sub, const uint64_t* sup, int w) {
  for (int i = 0; i < w; ++i)
    if (sub[i] & ~sup[i]) return false;
  return true;
}

long long words_popcount(const uint64_t* a, int w) {
  long long c = 0;
  for (int i = 0; i < w; ++i) c += std::popcount(a[i]);
  return c;
}

bool word_bit(const uint64_t* a, std::size_t i) {
  return (a[i >> 6] >> (i & 63)) & 1;
}

// ---- shared search state ---------------------------------------------------

struct SearchCore {
  int n = 0, k = 0, ell = 0;
  SearchConstraints cons;
  bool enum_is_k = true;      // eside holds the k-level
  std::vector<Mask> eside;    // enumeration level, lex order
  std::vector<Mask> oside;    // partner level, lex order
  int N = 0, W = 0;           // level size, words per partner mask
  std::vector<uint64_t> adj;  // N x W: partner sets meeting eside[i]
  Mask full = 0;
  // size window on |A| translated into enumeration-scale integers
  bool windowed = false;
  long long wlo = 0, whi = 0;

  const uint64_t* adj_row(int i) const { return adj.data() + std::size_t(i) * W; }
};

// a leaf worth keeping: the partner mask plus, in subset mode, the subset
struct Candidate {
  uint32_t a0 = 0;
  std::vector<uint64_t> dual_mask;
};

struct Partial {
  long long best = 0;  // products fit long long: |A| <= 22, |B| <= enum cap
  std::vector<Candidate> ties;
  bool truncated = false;
  unsigned long long accounted = 0;  // subsets covered by visit/prune/merge
  unsigned long long visited = 0;
  unsigned long long pruned = 0;
};

void record_tie(Partial& pr, uint32_t a0, const uint64_t* cur, int w) {
  for (const Candidate& c : pr.ties)
    if (c.a0 == a0 && words_equal(c.dual_mask.data(), cur, w)) return;
  if (pr.ties.size() >= kMaxTieClasses) {
    pr.truncated = true;
    return;
  }
  pr.ties.push_back({a0, std::vector<uint64_t>(cur, cur + w)});
}

// closure of the pair determined by cur: enumeration-side sets meeting every
// partner set still alive
long long closure_size(const SearchCore& sc, const uint64_t* cur) {
  long long c = 0;
  for (int s = 0; s < sc.N; ++s)
    if (words_subset(cur, sc.adj_row(s), sc.W)) ++c;
  return c;
}

Mask closure_common(const SearchCore& sc, const uint64_t* cur) {
  Mask inter = sc.full;
  for (int s = 0; s < sc.N; ++s)
    if (words_subset(cur, sc.adj_row(s), sc.W)) inter &= sc.eside[s];
  return inter;
}

Mask partner_common(const SearchCore& sc, const uint64_t* cur) {
  Mask inter = sc.full;
  for (std::size_t t = 0; t < sc.oside.size(); ++t)
    if (word_bit(cur, t)) inter &= sc.oside[t];
  return inter;
}

void leaf_maximal(const SearchCore& sc, const uint64_t* cur, Partial& pr) {
  const long long bcnt = words_popcount(cur, sc.W);
  if (bcnt == 0) return;
  const long long acnt = closure_size(sc, cur);
  if (acnt == 0) return;
  const long long ka = sc.enum_is_k ? acnt : bcnt;  // |A|, the k-side
  const long long kb = sc.enum_is_k ? bcnt : acnt;
  const long long product = ka * kb;
  if (product < pr.best) return;
  if (sc.windowed && (ka < sc.wlo || ka > sc.whi)) return;
  if (sc.cons.nontrivial &&
      (closure_common(sc, cur) & partner_common(sc, cur)) != 0)
    return;
  if (product > pr.best) {
    pr.best = product;
    pr.ties.clear();
    pr.truncated = false;
  }
  record_tie(pr, 0, cur, sc.W);
}

void leaf_subset(const SearchCore& sc, uint32_t a0, const uint64_t* cur,
                 Partial& pr) {
  const long long a = std::popcount(a0);
  if (a == 0) return;
  const long long bcnt = words_popcount(cur, sc.W);
  if (bcnt == 0) return;
  const long long product = a * bcnt;
  if (product < pr.best) return;
  if (sc.windowed && (a < sc.wlo || a > sc.whi)) return;
  if (sc.cons.nontrivial) {
    Mask inter = sc.full;
    for (int s = 0; s < sc.N; ++s)
      if ((a0 >> s) & 1) inter &= sc.eside[s];
    if ((inter & partner_common(sc, cur)) != 0) return;
  }
  if (product > pr.best) {
    pr.best = product;
    pr.ties.clear();
    pr.truncated = false;
  }
  record_tie(pr, a0, cur, sc.W);
}

// DFS over the remaining decisions. Maximal mode: a leaf is scored by its
// closed pair, so when the next constraint is already implied both branches
// lead to the same subtree and one visit stands in for 2^merged subsets.
void dfs_maximal(const SearchCore& sc, int i, uint64_t* slots,
                 const uint64_t* cur, int merged, Partial& pr) {
  const long long pc = words_popcount(cur, sc.W);
  if (pc == 0 || (long long)sc.N * pc < pr.best) {
    pr.accounted += 1ull << (sc.N - i + merged);
    pr.pruned += 1;
    return;
  }
  if (i == sc.N) {
    pr.accounted += 1ull << merged;
    pr.visited += 1;
    leaf_maximal(sc, cur, pr);
    return;
  }
  uint64_t* next = slots + std::size_t(i + 1) * sc.W;
  const uint64_t* row = sc.adj_row(i);
  for (int w = 0; w < sc.W; ++w) next[w] = cur[w] & row[w];
  if (words_equal(next, cur, sc.W)) {
    dfs_maximal(sc, i + 1, slots, cur, merged + 1, pr);
  } else {
    dfs_maximal(sc, i + 1, slots, cur, merged, pr);
    dfs_maximal(sc, i + 1, slots, next, merged, pr);
  }
}

// Subset mode: every subset is its own candidate, so no branch merging.
void dfs_subset(const SearchCore& sc, int i, uint64_t* slots,
                const uint64_t* cur, uint32_t a0, Partial& pr) {
  const long long pc = words_popcount(cur, sc.W);
  long long amax = std::popcount(a0) + (sc.N - i);
  if (sc.windowed) {
    if (amax < sc.wlo) {
      pr.accounted += 1ull << (sc.N - i);
      pr.pruned += 1;
      return;
    }
    amax = std::min(amax, sc.whi);
  }
  if (pc == 0 || amax <= 0 || amax * pc < pr.best) {
    pr.accounted += 1ull << (sc.N - i);
    pr.pruned += 1;
    return;
  }
  if (i == sc.N) {
    pr.accounted += 1;
    pr.visited += 1;
    leaf_subset(sc, a0, cur, pr);
    return;
  }
  dfs_subset(sc, i + 1, slots, cur, a0, pr);
  uint64_t* next = slots + std::size_t(i + 1) * sc.W;
  const uint64_t* row = sc.adj_row(i);
  for (int w = 0; w < sc.W; ++w) next[w] = cur[w] & row[w];
  dfs_subset(sc, i + 1, slots, next, a0 | (1u << i), pr);
}

// one fixed prefix of decisions; tasks partition the subset space exactly
struct Task {
  uint32_t prefix = 0;
  int depth = 0;
};

Partial run_task(const SearchCore& sc, const Task& task, long long seed_best) {
  std::vector<uint64_t> slots(std::size_t(sc.N + 1) * sc.W, 0);
  // root mask: every partner set, narrowed by the prefix picks
  std::vector<uint64_t> root(sc.W, 0);
  for (std::size_t t = 0; t < sc.oside.size(); ++t)
    root[t >> 6] |= uint64_t(1) << (t & 63);
  uint32_t a0 = 0;
  for (int j = 0; j < task.depth; ++j)
    if ((task.prefix >> j) & 1) {
      const uint64_t* row = sc.adj_row(j);
      for (int w = 0; w < sc.W; ++w) root[w] &= row[w];
      a0 |= 1u << j;
    }
  Partial pr;
  pr.best = seed_best;
  std::copy(root.begin(), root.end(), slots.begin());
  if (sc.cons.require_maximal)
    dfs_maximal(sc, task.depth, slots.data(), slots.data(), 0, pr);
  else
    dfs_subset(sc, task.depth, slots.data(), slots.data(), a0, pr);
  return pr;
}

// ---- assembling families and classes --------------------------------------

Family family_from_words(int n, int k, const std::vector<Mask>& level,
                         const uint64_t* bits) {
  std::vector<Mask> mem;
  for (std::size_t t = 0; t < level.size(); ++t)
    if (word_bit(bits, t)) mem.push_back(level[t]);
  return make_family(n, k, std::move(mem));
}

bool family_seq_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      lex_less);
}

bool pair_less(const ExtremalPair& x, const ExtremalPair& y) {
  if (x.a.members != y.a.members) return family_seq_less(x.a.members, y.a.members);
  return family_seq_less(x.b.members, y.b.members);
}

bool pair_equal(const ExtremalPair& x, const ExtremalPair& y) {
  return x.a.members == y.a.members && x.b.members == y.b.members;
}

ExtremalPair candidate_pair(const SearchCore& sc, const Candidate& c) {
  Family fo = family_from_words(sc.n, sc.enum_is_k ? sc.ell : sc.k, sc.oside,
                                c.dual_mask.data());
  std::vector<Mask> emem;
  if (sc.cons.require_maximal) {
    for (int s = 0; s < sc.N; ++s)
      if (words_subset(c.dual_mask.data(), sc.adj_row(s), sc.W))
        emem.push_back(sc.eside[s]);
  } else {
    for (int s = 0; s < sc.N; ++s)
      if ((c.a0 >> s) & 1) emem.push_back(sc.eside[s]);
  }
  Family fe = make_family(sc.n, sc.enum_is_k ? sc.k : sc.ell, std::move(emem));
  if (sc.enum_is_k) return {std::move(fe), std::move(fo)};
  return {std::move(fo), std::move(fe)};
}

}  // namespace

std::pair<Family, Family> canonical_pair(const Family& a, const Family& b,
                                         bool unordered) {
  if (a.n != b.n)
    throw std::invalid_argument("canonical_pair: mismatched ground sets");
  if (unordered && a.k != b.k)
    throw std::invalid_argument("canonical_pair: unordered needs equal levels");
  if (a.n > 9) throw std::domain_error("canonical_pair: n > 9");
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  bool first = true;
  std::vector<Mask> besta, bestb;
  auto consider = [&](std::vector<Mask> ia, std::vector<Mask> ib) {
    if (!first && !(family_seq_less(ia, besta) ||
                    (ia == besta && family_seq_less(ib, bestb))))
      return;
    besta = std::move(ia);
    bestb = std::move(ib);
    first = false;
  };
  do {
    std::vector<Mask> ia, ib;
    ia.reserve(a.members.size());
    ib.reserve(b.members.size());
    for (Mask m : a.members) ia.push_back(apply_perm(m, perm));
    for (Mask m : b.members) ib.push_back(apply_perm(m, perm));
    std::sort(ia.begin(), ia.end(), lex_less);
    std::sort(ib.begin(), ib.end(), lex_less);
    if (unordered) consider(ib, ia);
    consider(std::move(ia), std::move(ib));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {Family{a.n, a.k, std::move(besta)}, Family{b.n, b.k, std::move(bestb)}};
}

SearchResult search_exhaustive(int n, int k, int ell,
                               const SearchConstraints& constraints,
                               int level_cap, int workers) {
  const auto t0 = Clock::now();
  if (n < 1 || n > kMaxGround)
    throw std::domain_error("search: n out of range");
  if (k < 1 || k > n || ell < 1 || ell > n)
    throw std::domain_error("search: levels must be within [1, n]");
  if (level_cap < 1 || level_cap > 30)
    throw std::domain_error("search: level cap must be in [1, 30]");
  if (workers < 1) workers = 1;

  SearchCore sc;
  sc.n = n;
  sc.k = k;
  sc.ell = ell;
  sc.cons = constraints;
  // the windowed side and plain subsets both live on the k-level; otherwise
  // enumerate whichever level is smaller
  sc.enum_is_k = !constraints.require_maximal || !(binom(n, ell) < binom(n, k));
  const int ke = sc.enum_is_k ? k : ell;
  const int ko = sc.enum_is_k ? ell : k;
  if (binom(n, ke) > level_cap)
    throw std::domain_error(
        "search: enumeration level has more than " + std::to_string(level_cap) +
        " sets; raise the level cap to proceed");
  sc.eside = lex_level(n, ke);
  sc.oside = lex_level(n, ko);
  sc.N = int(sc.eside.size());
  sc.W = words_for(sc.oside.size());
  sc.full = (Mask{1} << n) - 1;
  sc.adj.assign(std::size_t(sc.N) * sc.W, 0);
  for (int i = 0; i < sc.N; ++i) {
    uint64_t* row = sc.adj.data() + std::size_t(i) * sc.W;
    for (std::size_t t = 0; t < sc.oside.size(); ++t)
      if (sc.eside[i] & sc.oside[t]) row[t >> 6] |= uint64_t(1) << (t & 63);
  }
  if (constraints.size_window) {
    sc.windowed = true;
    const BigInt& lo = constraints.size_window->first;
    const BigInt& hi = constraints.size_window->second;
    // |A| never exceeds its level size, so clamping keeps the window exact
    const long long top = (long long)binom(n, k) + 1;
    sc.wlo = lo <= 0 ? 0 : (lo > top ? top : lo.convert_to<long long>());
    sc.whi = hi <= 0 ? 0 : (hi > top ? top : hi.convert_to<long long>());
  }

  int depth = 0;
  while ((1 << depth) < workers && depth < sc.N) ++depth;
  const int ntasks = 1 << depth;
  std::vector<Partial> parts(ntasks);
  auto run_range = [&](int offset) {
    long long chained = 0;
    for (int p = offset; p < ntasks; p += workers) {
      parts[p] = run_task(sc, Task{uint32_t(p), depth}, chained);
      chained = std::max(chained, parts[p].best);
    }
  };
  if (workers == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int wkr = 0; wkr < workers; ++wkr)
      pool.emplace_back(run_range, wkr);
    for (auto& th : pool) th.join();
  }

  SearchResult res;
  res.n = n;
  res.k = k;
  res.ell = ell;
  res.constraints = constraints;
  long long best = 0;
  for (const Partial& pr : parts) best = std::max(best, pr.best);
  std::vector<Candidate> cands;
  bool truncated = false;
  for (const Partial& pr : parts) {
    if (pr.best != best) continue;
    truncated = truncated || pr.truncated;
    for (const Candidate& c : pr.ties) {
      if (cands.size() >= kMaxTieClasses) {
        truncated = true;
        break;
      }
      bool dup = false;
      for (const Candidate& d : cands)
        if (c.a0 == d.a0 &&
            words_equal(c.dual_mask.data(), d.dual_mask.data(), sc.W)) {
          dup = true;
          break;
        }
      if (!dup) cands.push_back(c);
    }
  }
  for (const Partial& pr : parts) {
    res.enumerated += pr.accounted;
    res.visited_leaves += pr.visited;
    res.pruned_subtrees += pr.pruned;
  }
  res.max_product = BigInt(best);
  res.exhaustive = res.enumerated == (1ull << sc.N);
  res.classes_truncated = truncated;

  std::vector<ExtremalPair> pairs;
  pairs.reserve(cands.size());
  for (const Candidate& c : cands) pairs.push_back(candidate_pair(sc, c));
  // swapping sides is only sound when the two roles are interchangeable:
  // a size window binds |A| alone, and in subset mode B is determined by A
  const bool unordered =
      k == ell && constraints.require_maximal && !constraints.size_window;
  if (n <= 9) {
    for (ExtremalPair& p : pairs) {
      auto cp = canonical_pair(p.a, p.b, unordered);
      p.a = std::move(cp.first);
      p.b = std::move(cp.second);
    }
  } else if (unordered) {
    for (ExtremalPair& p : pairs)
      if (family_seq_less(p.b.members, p.a.members)) std::swap(p.a, p.b);
  }
  std::sort(pairs.begin(), pairs.end(), pair_less);
  pairs.erase(std::unique(pairs.begin(), pairs.end(), pair_equal), pairs.end());
  res.classes = std::move(pairs);
  res.elapsed_ms = ms_since(t0);
  return res;
}

LexSearchResult search_lex(int n, int k, int ell,
                           std::optional<std::pair<BigInt, BigInt>> window,
                           long long cap) {
  const auto t0 = Clock::now();
  if (n < 1 || n > kMaxGround)
    throw std::domain_error("search_lex: n out of range");
  if (k < 1 || k > n || ell < 1 || ell > n)
    throw std::domain_error("search_lex: levels must be within [1, n]");
  LexSearchResult res;
  res.n = n;
  res.k = k;
  res.ell = ell;
  res.window = window;

  const Mask full = (Mask{1} << n) - 1;
  const BigInt klevel = binom(n, k);
  // a segment excludes B once it reaches the lex-first k-set disjoint from B
  std::vector<BigInt> thr;
  for (Mask b : lex_level(n, ell, cap)) {
    Mask comp = full & ~b;
    if (std::popcount(comp) < k) {
      thr.push_back(klevel);  // nothing is disjoint from B
      continue;
    }
    Mask firstfree = 0;
    Mask rest = comp;
    for (int i = 0; i < k; ++i) {
      const Mask low = rest & (~rest + 1);
      firstfree |= low;
      rest ^= low;
    }
    thr.push_back(lex_rank(n, k, firstfree));
  }
  std::sort(thr.begin(), thr.end(), std::greater<BigInt>());

  BigInt lo = 1, hi = klevel;
  if (window) {
    lo = std::max(lo, window->first);
    hi = std::min(hi, window->second);
  }
  if (lo > hi) {
    res.elapsed_ms = ms_since(t0);
    return res;
  }
  const auto count_ge = [&](const BigInt& a) {
    const auto it =
        std::lower_bound(thr.begin(), thr.end(), a,
                         [](const BigInt& t, const BigInt& v) { return t >= v; });
    return BigInt(it - thr.begin());
  };
  // candidates: the right end of each constant-count step inside the window
  std::vector<BigInt> cands{hi};
  for (const BigInt& t : thr)
    if (t >= lo && t <= hi) cands.push_back(t);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const BigInt& a : cands) {
    const BigInt b = count_ge(a);
    const BigInt p = a * b;
    if (p > res.max_product) {
      res.max_product = p;
      res.best_a = a;
      res.best_b = b;
    }
  }
  res.elapsed_ms = ms_since(t0);
  return res;
}

VerifyReport verify_theorem(Theorem t, long long max_n) {
  const auto t0 = Clock::now();
  VerifyReport rep;
  rep.theorem = t;
  rep.max_n = max_n;
  const auto run_point = [&](Params p, int n, int k, int ell) {
    const BoundReport br = bound(t, p);
    if (!br.hypotheses_met) return;
    ++rep.points;
    const BigInt observed = search_lex(n, k, ell).max_product;
    if (observed != br.values.at(0))
      rep.mismatches.push_back({std::move(p), br.values[0], observed});
  };
  switch (t) {
    case Theorem::MT:
      for (long long n = 2; n <= max_n; ++n)
        for (long long ell = 1; 2 * ell <= n; ++ell)
          for (long long k = 1; k <= ell; ++k)
            run_point({{"n", n}, {"k", k}, {"ell", ell}}, int(n), int(k),
                      int(ell));
      break;
    case Theorem::PYBER1:
      for (long long n = 2; n <= max_n; ++n)
        for (long long k = 1; 2 * k <= n; ++k)
          run_point({{"n", n}, {"k", k}}, int(n), int(k), int(k));
      break;
    case Theorem::PYBER2:
      for (long long n = 2; n <= max_n; ++n)
        for (long long k = 2; k <= n; ++k)
          for (long long ell = 1; ell < k; ++ell) {
            if (n < 2 * k + ell - 2) continue;
            run_point({{"n", n}, {"k", k}, {"ell", ell}}, int(n), int(k),
                      int(ell));
          }
      break;
    default:
      throw std::invalid_argument("verify: no independent oracle for " +
                                  theorem_name(t));
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

Json search_result_to_json(const SearchResult& r) {
  Json j;
  j["max_product"] = bigint_to_json(r.max_product);
  j["exhaustive"] = r.exhaustive;
  Json cls = Json::array();
  for (const ExtremalPair& p : r.classes) {
    Json e;
    e["A"] = family_to_json(p.a);
    e["B"] = family_to_json(p.b);
    cls.push_back(std::move(e));
  }
  j["classes"] = std::move(cls);
  if (r.classes_truncated) j["classes_truncated"] = true;
  j["enumerated"] = r.enumerated;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json lex_search_result_to_json(const LexSearchResult& r) {
  Json j;
  j["max_product"] = bigint_to_json(r.max_product);
  j["best_a"] = bigint_to_json(r.best_a);
  j["best_b"] = bigint_to_json(r.best_b);
  if (r.window) {
    j["window"] = Json{{"lo", bigint_to_json(r.window->first)},
                       {"hi", bigint_to_json(r.window->second)}};
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  j["theorem"] = theorem_name(r.theorem);
  j["max_n"] = r.max_n;
  j["points"] = r.points;
  j["all_match"] = r.all_match();
  Json mism = Json::array();
  for (const VerifyPoint& p : r.mismatches) {
    Json e;
    Json pj;
    for (const auto& [key, val] : p.params) pj[key] = val;
    e["params"] = std::move(pj);
    e["predicted"] = bigint_to_json(p.predicted);
    e["observed"] = bigint_to_json(p.observed);
    mism.push_back(std::move(e));
  }
  j["mismatches"] = std::move(mism);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace xfam
