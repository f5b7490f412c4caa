#include "xfam/bounds.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "xfam/setfamily.hpp"

namespace xfam {

namespace {

// Combinatorial convention: a ground set of fewer than `under` elements
// (possibly negative after parameter subtraction) has no `under`-subsets.
BigInt bnm(long long top, long long under) {
  if (under < 0 || top < under) return 0;
  return binom(top, under);
}

long long get(const Params& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end())
    throw std::invalid_argument(std::string("missing parameter: ") + key);
  return it->second;
}

struct Hyp {
  std::vector<std::string> violations;
  void need(bool ok, const char* what) {
    if (!ok) violations.emplace_back(what);
  }
  bool ok() const { return violations.empty(); }
};

BigInt main1_value(long long n, long long k, long long ell) {
  return (bnm(n - 1, k - 1) + bnm(n - 2, k - 1)) * bnm(n - 2, ell - 2);
}

BigInt main2_value(long long n, long long k, long long ell) {
  return (bnm(n - 1, k - 1) + 1) *
         (bnm(n - 1, ell - 1) - bnm(n - k - 1, ell - 1));
}

// Region where the two-candidate maximum applies to nontrivial pairs.
void need_main_region(Hyp& h, long long n, long long k, long long ell) {
  h.need(k >= 1, "k >= 1");
  h.need(ell >= k, "ell >= k");
  h.need((ell > k && n >= 2 * ell) || (ell == k && n > 2 * ell),
         "n >= 2*ell > 2*k or n > 2*ell = 2*k");
}

BigInt prop_base(long long n, long long k) { return bnm(n - 1, k - 1); }

BigInt sum_tail(long long n, long long k, long long from, long long to) {
  BigInt s = 0;
  for (long long i = from; i <= to; ++i) s += bnm(n - i, k - 2);
  return s;
}

struct W2 {
  std::uint64_t a = 0, b = 0;
  bool operator==(const W2&) const = default;
};

struct W2Hash {
  std::size_t operator()(const W2& w) const {
    std::uint64_t h = w.a * 0x9e3779b97f4a7c15ULL;
    h ^= w.b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

W2 and2(const W2& x, const W2& y) { return {x.a & y.a, x.b & y.b}; }

bool implies(const W2& cur, const W2& constraint) {
  return (cur.a & constraint.a) == cur.a && (cur.b & constraint.b) == cur.b;
}

int count2(const W2& w) { return __builtin_popcountll(w.a) + __builtin_popcountll(w.b); }

// Enumerates, once each, every family of the form dual(S, ell) with S a
// subfamily of the k-level; these are exactly the right sides of the maximal
// cross-intersecting pairs. DFS over k-sets intersects survivor masks and
// skips constraints already implied by the current mask, so identical
// branches are merged instead of revisited.
void for_each_closed_right(long long n, long long k, long long ell,
                           const std::function<void(const W2&)>& visit) {
  const std::vector<Mask> kl = lex_level(n, k);
  const std::vector<Mask> ll = lex_level(n, ell);
  if (ll.size() > 128)
    throw std::domain_error("maximal-pair enumeration: level too large");
  std::vector<W2> adj(kl.size());
  for (std::size_t i = 0; i < kl.size(); ++i)
    for (std::size_t j = 0; j < ll.size(); ++j)
      if (kl[i] & ll[j]) {
        if (j < 64)
          adj[i].a |= std::uint64_t{1} << j;
        else
          adj[i].b |= std::uint64_t{1} << (j - 64);
      }
  W2 full;
  for (std::size_t j = 0; j < ll.size() && j < 64; ++j)
    full.a |= std::uint64_t{1} << j;
  for (std::size_t j = 64; j < ll.size(); ++j)
    full.b |= std::uint64_t{1} << (j - 64);
  std::unordered_set<W2, W2Hash> seen;
  std::function<void(std::size_t, W2)> rec = [&](std::size_t idx, W2 cur) {
    while (idx < adj.size() && implies(cur, adj[idx])) ++idx;
    if (idx == adj.size()) {
      if (seen.insert(cur).second) visit(cur);
      return;
    }
    rec(idx + 1, cur);
    rec(idx + 1, and2(cur, adj[idx]));
  };
  rec(0, full);
}

// Exhaustive check of the size dichotomy over every maximal nontrivial pair:
// writing Ta = binom(n-1,k-1)-binom(n-ell-1,k-1)+1 and Tb symmetrically, no
// pair may exceed both thresholds, and a pair reaching one threshold exactly
// while exceeding the other is equally forbidden.
bool mors2_dichotomy_exhaustive(long long n, long long k, long long ell) {
  if (binom(n, std::min(k, ell)) > 21)
    throw std::domain_error("dichotomy check: enumeration cap exceeded");
  if (binom(n, k) > binom(n, ell)) std::swap(k, ell);  // statement is symmetric
  const long long ta =
      (bnm(n - 1, k - 1) - bnm(n - ell - 1, k - 1) + 1).convert_to<long long>();
  const long long tb =
      (bnm(n - 1, ell - 1) - bnm(n - k - 1, ell - 1) + 1).convert_to<long long>();
  const std::vector<Mask> kl = lex_level(n, k);
  const std::vector<Mask> ll = lex_level(n, ell);
  std::vector<W2> adj(kl.size());
  for (std::size_t i = 0; i < kl.size(); ++i)
    for (std::size_t j = 0; j < ll.size(); ++j)
      if (kl[i] & ll[j]) {
        if (j < 64)
          adj[i].a |= std::uint64_t{1} << j;
        else
          adj[i].b |= std::uint64_t{1} << (j - 64);
      }
  const Mask ground = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  bool holds = true;
  for_each_closed_right(n, k, ell, [&](const W2& bhat) {
    if (!holds) return;
    long long asz = 0;
    Mask common = ground;
    for (std::size_t i = 0; i < kl.size(); ++i)
      if (implies(bhat, adj[i])) {
        ++asz;
        common &= kl[i];
      }
    const long long bsz = count2(bhat);
    for (std::size_t j = 0; j < ll.size(); ++j) {
      const bool in = j < 64 ? (bhat.a >> j) & 1 : (bhat.b >> (j - 64)) & 1;
      if (in) common &= ll[j];
    }
    if (common != 0) return;  // trivially intersecting pair: out of scope
    if (asz >= ta && bsz >= tb && !(asz == ta && bsz == tb)) holds = false;
  });
  return holds;
}

BigInt factorial(long long r) {
  BigInt f = 1;
  for (long long i = 2; i <= r; ++i) f *= i;
  return f;
}

// sum_{j=0}^{r-2} binom(x,r) / ((x-j)(x-j-1)), each term evaluated in
// cancelled polynomial form so no denominator can vanish at integer x.
Rational pair_harmonic_times_binom(long long x, long long r) {
  if (r < 2) return Rational(0);
  const BigInt rfact = factorial(r);
  Rational s(0);
  for (long long j = 0; j <= r - 2; ++j) {
    BigInt prod = 1;
    for (long long i = 0; i < r; ++i)
      if (i != j && i != j + 1) prod *= BigInt(x - i);
    s += Rational(prod, rfact);
  }
  return s;
}

}  // namespace

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::EKR: return "EKR";
    case Theorem::PYBER1: return "PYBER1";
    case Theorem::PYBER2: return "PYBER2";
    case Theorem::MT: return "MT";
    case Theorem::FKWX: return "FKWX";
    case Theorem::MAIN1: return "MAIN1";
    case Theorem::MAIN2: return "MAIN2";
    case Theorem::GAMMA: return "GAMMA";
    case Theorem::MORS2: return "MORS2";
    case Theorem::THEO3: return "THEO3";
    case Theorem::CTHEO3: return "CTHEO3";
    case Theorem::FK: return "FK";
    case Theorem::PROP1: return "PROP1";
    case Theorem::PROP2: return "PROP2";
    case Theorem::PROP3: return "PROP3";
    case Theorem::PROP4: return "PROP4";
    case Theorem::PROP5: return "PROP5";
  }
  throw std::logic_error("theorem_name: bad enum");
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = {
      Theorem::EKR,    Theorem::PYBER1, Theorem::PYBER2, Theorem::MT,
      Theorem::FKWX,   Theorem::MAIN1,  Theorem::MAIN2,  Theorem::GAMMA,
      Theorem::MORS2,  Theorem::THEO3,  Theorem::CTHEO3, Theorem::FK,
      Theorem::PROP1,  Theorem::PROP2,  Theorem::PROP3,  Theorem::PROP4,
      Theorem::PROP5};
  return all;
}

Theorem theorem_from_name(const std::string& name) {
  for (Theorem t : all_theorems())
    if (theorem_name(t) == name) return t;
  throw std::invalid_argument("unknown theorem: " + name);
}

const std::vector<std::string>& theorem_param_names(Theorem t) {
  static const std::vector<std::string> nk = {"n", "k"};
  static const std::vector<std::string> nkl = {"n", "k", "ell"};
  static const std::vector<std::string> nkls = {"n", "k", "ell", "s"};
  static const std::vector<std::string> nklrs = {"n", "k", "ell", "r", "s"};
  static const std::vector<std::string> nki = {"n", "k", "i"};
  switch (t) {
    case Theorem::EKR:
    case Theorem::PYBER1:
    case Theorem::FKWX: return nk;
    case Theorem::FK: return nki;
    case Theorem::THEO3: return nklrs;
    case Theorem::PROP1:
    case Theorem::PROP5: return nkls;
    default: return nkl;
  }
}

BoundReport bound(Theorem t, const Params& params) {
  BoundReport r;
  r.theorem = t;
  for (const auto& name : theorem_param_names(t)) get(params, name.c_str());
  r.params = params;
  Hyp h;
  const long long n = get(params, "n");
  const long long k = get(params, "k");
  switch (t) {
    case Theorem::EKR: {
      h.need(k >= 1, "k >= 1");
      h.need(n >= 2 * k, "n >= 2*k");
      if (h.ok()) r.values.push_back(bnm(n - 1, k - 1));
      break;
    }
    case Theorem::PYBER1: {
      h.need(k >= 1, "k >= 1");
      h.need(n >= 2 * k, "n >= 2*k");
      if (h.ok()) {
        const BigInt star = bnm(n - 1, k - 1);
        r.values.push_back(star * star);
      }
      break;
    }
    case Theorem::PYBER2: {
      const long long ell = get(params, "ell");
      h.need(ell >= 1, "ell >= 1");
      h.need(k > ell, "k > ell");
      h.need(n >= 2 * k + ell - 2, "n >= 2*k + ell - 2");
      if (h.ok()) r.values.push_back(bnm(n - 1, k - 1) * bnm(n - 1, ell - 1));
      break;
    }
    case Theorem::MT: {
      const long long ell = get(params, "ell");
      h.need(k >= 1, "k >= 1");
      h.need(ell >= k, "ell >= k");
      h.need(n >= 2 * ell, "n >= 2*ell");
      if (h.ok()) r.values.push_back(bnm(n - 1, k - 1) * bnm(n - 1, ell - 1));
      break;
    }
    case Theorem::FKWX: {
      h.need(k >= 1, "k >= 1");
      h.need(n >= 2 * k + 1, "n >= 2*k + 1");
      if (h.ok())
        r.values.push_back((bnm(n - 1, k - 1) - bnm(n - k - 1, k - 1)) *
                           (bnm(n - 1, k - 1) + 1));
      break;
    }
    case Theorem::MAIN1: {
      const long long ell = get(params, "ell");
      need_main_region(h, n, k, ell);
      if (h.ok()) r.values.push_back(main1_value(n, k, ell));
      break;
    }
    case Theorem::MAIN2: {
      const long long ell = get(params, "ell");
      need_main_region(h, n, k, ell);
      if (h.ok()) r.values.push_back(main2_value(n, k, ell));
      break;
    }
    case Theorem::GAMMA: {
      const long long ell = get(params, "ell");
      need_main_region(h, n, k, ell);
      if (h.ok()) r.values.push_back(gamma(n, k, ell));
      break;
    }
    case Theorem::MORS2: {
      const long long ell = get(params, "ell");
      h.need(k >= 1, "k >= 1");
      h.need(ell >= 1, "ell >= 1");
      h.need(n >= k + ell, "n >= k + ell");
      if (h.ok()) {
        r.values.push_back(bnm(n - 1, k - 1) - bnm(n - ell - 1, k - 1) + 1);
        r.values.push_back(bnm(n - 1, ell - 1) - bnm(n - k - 1, ell - 1) + 1);
      }
      break;
    }
    case Theorem::THEO3: {
      const long long ell = get(params, "ell");
      const long long rr = get(params, "r");
      const long long s = get(params, "s");
      h.need(k >= 1, "k >= 1");
      h.need(ell >= k, "ell >= k");
      h.need(n >= k + ell, "n >= k + ell");
      h.need(rr >= 1, "r >= 1");
      h.need(s >= 2 && s <= ell, "2 <= s <= ell");
      h.need(rr + s <= n, "r + s <= n");
      if (h.ok()) {
        BigInt right = bnm(n - rr - s, ell - s);
        for (long long i = 1; i <= rr; ++i) right += bnm(n - i, ell - 1);
        r.values.push_back(
            (bnm(n - rr, k - rr) - bnm(n - rr - s, k - rr)) * right);
      }
      break;
    }
    case Theorem::CTHEO3: {
      const long long ell = get(params, "ell");
      h.need(k >= 1, "k >= 1");
      h.need(ell >= k, "ell >= k");
      h.need(n >= k + ell, "n >= k + ell");
      if (h.ok())
        r.values.push_back((bnm(n - 1, k - 1) - bnm(n - ell - 1, k - 1)) *
                           (bnm(n - 1, ell - 1) + 1));
      break;
    }
    case Theorem::FK: {
      const long long i = get(params, "i");
      h.need(k >= 1, "k >= 1");
      h.need(n > 2 * k, "n > 2*k");
      h.need(i >= 3 && i <= k + 1, "3 <= i <= k + 1");
      if (h.ok())
        r.values.push_back((bnm(n - 1, k - 1) + bnm(n - i, k - i + 1)) *
                           (bnm(n - 1, k - 1) - bnm(n - i, k - 1)));
      break;
    }
    case Theorem::PROP1: {
      const long long ell = get(params, "ell");
      const long long s = get(params, "s");
      h.need(k >= 1, "k >= 1");
      h.need(ell >= k, "ell >= k");
      h.need(n >= 2 * ell, "n >= 2*ell");
      h.need(s >= 3 && s <= k, "3 <= s <= k");
      if (h.ok()) {
        const BigInt lo = prop_base(n, k) + bnm(n - s - 1, k - s);
        r.values.push_back(lo * (bnm(n - 1, ell - 1) - bnm(n - s - 1, ell - 1)));
        r.window_lo = lo;
        r.window_hi = prop_base(n, k) + bnm(n - 3, k - 2);
      }
      break;
    }
    case Theorem::PROP2: {
      const long long ell = get(params, "ell");
      // k = 1 collapses the window floor to a bare star, where the claimed
      // partner loss vanishes; the bound is false there
      h.need(k >= 2, "k >= 2");
      h.need(ell > k, "ell > k");
      h.need(n >= 2 * ell, "n >= 2*ell");
      if (h.ok()) {
        const BigInt lo = prop_base(n, k) + bnm(n - 3, k - 2);
        r.values.push_back(lo * (bnm(n - 1, ell - 1) - bnm(n - 3, ell - 1)));
        r.window_lo = lo;
        r.window_hi = prop_base(n, k) + sum_tail(n, k, 3, 4);
      }
      break;
    }
    case Theorem::PROP3: {
      const long long ell = get(params, "ell");
      // same k = 1 window collapse as PROP2; and below 2*ell the partner
      // level is too rich for the stated product ceiling
      h.need(k >= 2, "k >= 2");
      h.need(ell >= k, "ell >= k");
      h.need(n >= 2 * ell, "n >= 2*ell");
      h.need(n < ell * ell, "n < ell^2");
      if (h.ok()) {
        const BigInt lo = prop_base(n, k) + sum_tail(n, k, 3, 4);
        r.values.push_back(lo * (bnm(n - 2, ell - 2) + bnm(n - 4, ell - 3)));
        r.window_lo = lo;
        r.window_hi = prop_base(n, k) + sum_tail(n, k, 3, 5);
      }
      break;
    }
    case Theorem::PROP4: {
      const long long ell = get(params, "ell");
      // k = 1 fails exactly as in PROP2: the window floor admits a star
      h.need(k >= 2, "k >= 2");
      h.need(ell > k, "ell > k");
      h.need(n >= 2 * ell, "n >= 2*ell");
      if (h.ok()) {
        r.values.push_back(main1_value(n, k, ell));
        r.window_lo = prop_base(n, k) + sum_tail(n, k, 3, ell + 1);
        r.window_hi = prop_base(n, k) + bnm(n - 2, k - 1);
      }
      break;
    }
    case Theorem::PROP5: {
      const long long ell = get(params, "ell");
      const long long s = get(params, "s");
      h.need(k >= 1, "k >= 1");
      h.need(ell > k, "ell > k");
      h.need(n >= 2 * ell, "n >= 2*ell");
      h.need(s >= 2, "s >= 2");
      h.need(s <= n, "s <= n");
      if (h.ok()) {
        BigInt lo = 0;
        for (long long i = 1; i <= s; ++i) lo += bnm(n - i, k - 1);
        r.values.push_back(lo * bnm(n - s, ell - s));
        r.window_lo = lo;
      }
      break;
    }
  }
  r.violations = std::move(h.violations);
  r.hypotheses_met = r.violations.empty();
  return r;
}

Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["theorem"] = theorem_name(r.theorem);
  Json p = Json::object();
  for (const auto& name : theorem_param_names(r.theorem))
    if (auto it = r.params.find(name); it != r.params.end()) p[name] = it->second;
  for (const auto& [key, val] : r.params)
    if (!p.contains(key)) p[key] = val;
  j["params"] = p;
  j["hypotheses_met"] = r.hypotheses_met;
  if (r.hypotheses_met) {
    if (r.values.size() == 1) {
      j["value"] = bigint_to_json(r.values[0]);
    } else {
      Json arr = Json::array();
      for (const auto& v : r.values) arr.push_back(bigint_to_json(v));
      j["value"] = arr;
    }
    if (r.window_lo) {
      Json w;
      w["lo"] = bigint_to_json(*r.window_lo);
      if (r.window_hi) w["hi"] = bigint_to_json(*r.window_hi);
      j["window"] = w;
    }
  } else {
    j["violations"] = r.violations;
  }
  return j;
}

BigInt gamma(long long n, long long k, long long ell) {
  if (k < 1 || ell < 1) throw std::domain_error("gamma: k, ell must be >= 1");
  if (n < k + ell) throw std::domain_error("gamma: need n >= k + ell");
  const BigInt a = main1_value(n, k, ell);
  const BigInt b = main2_value(n, k, ell);
  return a >= b ? a : b;
}

PhiEval phi(long long n, long long k, long long ell, long long x) {
  if (n < 2) throw std::domain_error("phi: need n >= 2");
  if (k < 1 || ell < 1) throw std::domain_error("phi: k, ell must be >= 1");
  if (x < 0) throw std::domain_error("phi: need x >= 0");
  PhiEval e;
  e.n = n;
  e.k = k;
  e.ell = ell;
  e.x = x;
  const BigInt lead = bnm(n - 1, k - 1) + bnm(n - 2, k - 1);
  const BigInt mid = bnm(n - 2, ell - 2);
  e.value = Rational(lead * (mid + bnm(x, n - ell - 1)) - mid * bnm(x, k - 1));
  return e;
}

Rational phi_second(long long n, long long k, long long ell, long long x) {
  if (n < 2) throw std::domain_error("phi_second: need n >= 2");
  if (k < 1 || ell < 1)
    throw std::domain_error("phi_second: k, ell must be >= 1");
  if (x < 0) throw std::domain_error("phi_second: need x >= 0");
  const Rational lead(bnm(n - 1, k - 1) + bnm(n - 2, k - 1));
  const Rational mid(bnm(n - 2, ell - 2));
  return lead * pair_harmonic_times_binom(x, n - ell - 1) -
         mid * pair_harmonic_times_binom(x, k - 1);
}

std::string lemma_name(Lemma id) {
  switch (id) {
    case Lemma::N5: return "N5";
    case Lemma::N4: return "N4";
    case Lemma::NL1: return "NL1";
    case Lemma::INEQ21: return "INEQ21";
    case Lemma::CLAIM525: return "CLAIM525";
    case Lemma::CLAIM526: return "CLAIM526";
    case Lemma::MORS2_DICHOTOMY: return "MORS2_DICHOTOMY";
  }
  throw std::logic_error("lemma_name: bad enum");
}

const std::vector<Lemma>& all_lemmas() {
  static const std::vector<Lemma> all = {
      Lemma::N5,       Lemma::N4,       Lemma::NL1,           Lemma::INEQ21,
      Lemma::CLAIM525, Lemma::CLAIM526, Lemma::MORS2_DICHOTOMY};
  return all;
}

Lemma lemma_from_name(const std::string& name) {
  for (Lemma id : all_lemmas())
    if (lemma_name(id) == name) return id;
  throw std::invalid_argument("unknown lemma: " + name);
}

bool check_lemma(Lemma id, const Params& p) {
  const auto need = [](bool ok, const char* what) {
    if (!ok) throw std::domain_error(std::string("hypothesis violated: ") + what);
  };
  const long long n = get(p, "n");
  const long long k = get(p, "k");
  switch (id) {
    case Lemma::N5: {
      const long long ell = get(p, "ell");
      need(k >= 1, "k >= 1");
      need(ell >= 2, "ell >= 2");
      need(ell >= k, "ell >= k");
      need(n >= 2 * ell, "n >= 2*ell");
      need(n >= 5, "n >= 5");
      return phi(n, k, ell, n - 5).value < Rational(gamma(n, k, ell));
    }
    case Lemma::N4: {
      const long long ell = get(p, "ell");
      need(k >= 1, "k >= 1");
      need(ell > k, "ell > k");
      need(ell * ell <= n, "ell^2 <= n");
      return phi(n, k, ell, n - 4).value < Rational(gamma(n, k, ell));
    }
    case Lemma::NL1: {
      const long long ell = get(p, "ell");
      need(k >= 2, "k >= 2");
      need(ell > k, "ell > k");
      need(n >= 2 * ell, "n >= 2*ell");
      return phi(n, k, ell, n - ell - 1).value < Rational(gamma(n, k, ell));
    }
    case Lemma::INEQ21: {
      const long long ell = get(p, "ell");
      const long long r = get(p, "r");
      const long long s = get(p, "s");
      const long long t = get(p, "t");
      need(k >= 1, "k >= 1");
      need(ell >= k, "ell >= k");
      need(n >= k + ell, "n >= k + ell");
      need(r >= 1 && r <= k - 1, "1 <= r <= k - 1");
      need(t >= 0 && t <= k - r - 1, "0 <= t <= k - r - 1");
      need(s >= 2 && s <= ell, "2 <= s <= ell");
      const BigInt lhs_num = bnm(n - r, k - r) - bnm(n - r - s, k - r);
      BigInt lhs_den = 0;
      for (long long i = 1; i <= r; ++i) lhs_den += bnm(n - i, ell - 1);
      for (long long j = 0; j <= t; ++j) lhs_den += bnm(n - r - s - j, ell - s);
      BigInt rhs_num = 0, rhs_den = 0;
      for (long long j = 1; j <= t + 1; ++j) {
        rhs_num += bnm(n - r - s - j, k - r - j);
        rhs_den += bnm(n - r - s - j, ell - s);
      }
      return lhs_num * rhs_den < rhs_num * lhs_den;
    }
    case Lemma::CLAIM525: {
      const long long ell = get(p, "ell");
      need(ell >= 5, "ell >= 5");
      need(5 * k > 3 * ell, "5*k > 3*ell");
      need(ell >= k, "ell >= k");
      need(n >= 2 * ell, "n >= 2*ell");
      const BigInt lhs = (bnm(n - 1, k - 1) + bnm(n - 2, k - 1)) *
                         (bnm(n - 2, ell - 2) + bnm(n - 5, ell - 4));
      const BigInt rhs = bnm(n - 1, k - 1) *
                         (bnm(n - 1, ell - 1) - bnm(n - k - 1, ell - 1));
      return lhs < rhs;
    }
    case Lemma::CLAIM526: {
      const long long ell = get(p, "ell");
      need(k >= 1, "k >= 1");
      need(ell >= k, "ell >= k");
      need(n >= 2 * ell, "n >= 2*ell");
      need(n >= 5, "n >= 5");
      need(ell == 4 || 5 * k <= 3 * ell, "ell = 4 or 5*k <= 3*ell");
      const BigInt lhs =
          (bnm(n - 1, k - 1) + bnm(n - 2, k - 1)) * bnm(n - 5, ell - 4);
      const BigInt rhs = bnm(n - 5, k - 1) * bnm(n - 2, ell - 2);
      return lhs < rhs;
    }
    case Lemma::MORS2_DICHOTOMY: {
      const long long ell = get(p, "ell");
      need(k >= 1, "k >= 1");
      need(ell >= 1, "ell >= 1");
      need(n >= k + ell, "n >= k + ell");
      need(n <= kMaxGround, "n within ground cap");
      return mors2_dichotomy_exhaustive(n, k, ell);
    }
  }
  throw std::logic_error("check_lemma: bad enum");
}

}  // namespace xfam
