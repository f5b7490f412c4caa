#include "xfam/setfamily.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace xfam {

namespace {

void check_ground(int n) {
  if (n < 1 || n > kMaxGround)
    throw std::domain_error("ground set size out of range");
}

void check_cap(int n, int k, long long cap) {
  if (binom(n, k) > cap) throw std::runtime_error("enumeration cap exceeded");
}

}  // namespace

bool lex_less(Mask a, Mask b) {
  Mask d = a ^ b;
  if (d == 0) return false;
  return (a & (d & -d)) != 0;
}

Family make_family(int n, int k, std::vector<Mask> members) {
  check_ground(n);
  if (k < 0 || k > n) throw std::domain_error("family: k out of range");
  const Mask full = (1u << n) - 1;
  for (Mask m : members) {
    if ((m & ~full) != 0) throw std::domain_error("family: member outside [n]");
    if (std::popcount(m) != k)
      throw std::domain_error("family: member has wrong size");
  }
  std::sort(members.begin(), members.end(), lex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Family{n, k, std::move(members)};
}

namespace {

// first `take` subsets in lex order (take < 0 means the whole level)
std::vector<Mask> lex_prefix(int n, int k, long long take) {
  std::vector<Mask> out;
  if (take == 0) return out;
  if (k == 0) return {0u};
  // increasing index tuples c[0] < ... < c[k-1] over 0..n-1, advanced in
  // lexicographic order of the tuple = lex order of the sets
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    Mask m = 0;
    for (int i : c) m |= 1u << i;
    out.push_back(m);
    if (take > 0 && static_cast<long long>(out.size()) == take) break;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<Mask> colex_prefix(int n, int k, long long take) {
  std::vector<Mask> out;
  if (take == 0) return out;
  if (k == 0) return {0u};
  const Mask limit = (1u << n) - 1;
  Mask v = (1u << k) - 1;
  while (true) {
    out.push_back(v);
    if (take > 0 && static_cast<long long>(out.size()) == take) break;
    Mask t = v | (v - 1);  // Gosper's hack
    Mask next = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    if (next > limit) break;
    v = next;
  }
  return out;
}

}  // namespace

std::vector<Mask> lex_level(int n, int k, long long cap) {
  check_ground(n);
  if (k < 0 || k > n) throw std::domain_error("lex_level: k out of range");
  check_cap(n, k, cap);
  return lex_prefix(n, k, -1);
}

std::vector<Mask> colex_level(int n, int k, long long cap) {
  check_ground(n);
  if (k < 0 || k > n) throw std::domain_error("colex_level: k out of range");
  check_cap(n, k, cap);
  return colex_prefix(n, k, -1);
}

Family lex_segment(int n, int k, const BigInt& m) {
  check_ground(n);
  if (m < 0 || m > binom(n, k))
    throw std::domain_error("lex_segment: m out of range");
  return make_family(n, k, lex_prefix(n, k, m.convert_to<long long>()));
}

Family colex_segment(int n, int k, const BigInt& m) {
  check_ground(n);
  if (m < 0 || m > binom(n, k))
    throw std::domain_error("colex_segment: m out of range");
  return make_family(n, k, colex_prefix(n, k, m.convert_to<long long>()));
}

BigInt lex_rank(int n, int k, Mask f) {
  check_ground(n);
  if (std::popcount(f) != k) throw std::domain_error("lex_rank: wrong size");
  BigInt r = 0;
  int pos = 0;  // how many elements of f already placed
  for (int v = 1; v <= n && pos < k; ++v) {
    if (f >> (v - 1) & 1) {
      ++pos;
    } else {
      // sets agreeing on the first pos elements and taking v next come earlier
      r += binom(n - v, k - pos - 1);
    }
  }
  return r;
}

Family shadow(const Family& f, int ell) {
  if (ell < 1 || ell >= f.k) throw std::domain_error("shadow: need 1 <= l < k");
  std::vector<Mask> out;
  for (Mask m : f.members) {
    // all ell-subsets of m: walk Gosper over the packed k bits
    std::vector<int> bits;
    for (int i = 0; i < f.n; ++i)
      if (m >> i & 1) bits.push_back(i);
    Mask pick = (1u << ell) - 1;
    while (true) {
      Mask s = 0;
      for (int i = 0; i < f.k; ++i)
        if (pick >> i & 1) s |= 1u << bits[i];
      out.push_back(s);
      Mask t = pick | (pick - 1);
      pick = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(pick) + 1));
      if (pick >= (1u << f.k)) break;
    }
  }
  return make_family(f.n, ell, std::move(out));
}

Family complement_family(const Family& f) {
  const Mask full = (1u << f.n) - 1;
  std::vector<Mask> out;
  out.reserve(f.members.size());
  for (Mask m : f.members) out.push_back(full ^ m);
  return make_family(f.n, f.n - f.k, std::move(out));
}

bool is_cross_intersecting(const Family& a, const Family& b) {
  if (a.n != b.n)
    throw std::invalid_argument("cross-intersection: mismatched ground sets");
  for (Mask x : a.members)
    for (Mask y : b.members)
      if ((x & y) == 0) return false;
  return true;
}

Mask common_intersection(const std::vector<Family>& families) {
  bool any = false;
  Mask acc = ~0u;
  for (const auto& f : families)
    for (Mask m : f.members) {
      any = true;
      acc &= m;
    }
  if (!any)
    throw std::invalid_argument("common_intersection: all families empty");
  return acc;
}

Family dual(const Family& a, int ell, long long cap) {
  check_ground(a.n);
  if (ell < 0 || ell > a.n) throw std::domain_error("dual: l out of range");
  check_cap(a.n, ell, cap);
  std::vector<Mask> out;
  for (Mask b : lex_level(a.n, ell, cap)) {
    bool meets_all = true;
    for (Mask x : a.members)
      if ((x & b) == 0) {
        meets_all = false;
        break;
      }
    if (meets_all) out.push_back(b);
  }
  return make_family(a.n, ell, std::move(out));
}

bool is_maximal_pair(const Family& a, const Family& b, long long cap) {
  if (a.n != b.n)
    throw std::invalid_argument("is_maximal_pair: mismatched ground sets");
  return b == dual(a, b.k, cap) && a == dual(b, a.k, cap);
}

std::pair<Family, Family> lex_compress_pair(const Family& a, const Family& b) {
  if (!is_cross_intersecting(a, b))
    throw std::invalid_argument("lex_compress_pair: input not cross-intersecting");
  return {lex_segment(a.n, a.k, BigInt(a.members.size())),
          lex_segment(b.n, b.k, BigInt(b.members.size()))};
}

Mask apply_perm(Mask f, const std::vector<int>& perm) {
  Mask out = 0;
  Mask rest = f;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    out |= 1u << perm[i];
  }
  return out;
}

namespace {

// sequence comparison in lex order of members; families assumed lex-sorted
bool family_seq_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      lex_less);
}

}  // namespace

Family canonical_form(const Family& f) {
  if (f.n > 9) throw std::domain_error("canonical_form: n > 9");
  std::vector<int> perm(f.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best = f.members;
  bool first = true;
  do {
    std::vector<Mask> img;
    img.reserve(f.members.size());
    for (Mask m : f.members) img.push_back(apply_perm(m, perm));
    std::sort(img.begin(), img.end(), lex_less);
    if (first || family_seq_less(img, best)) {
      best = std::move(img);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Family{f.n, f.k, std::move(best)};
}

bool isomorphic(const Family& f, const Family& g) {
  if (f.n != g.n || f.k != g.k || f.members.size() != g.members.size())
    return false;
  return canonical_form(f).members == canonical_form(g).members;
}

}  // namespace xfam
