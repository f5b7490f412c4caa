#include "xfam/constructions.hpp"

#include <bit>
#include <stdexcept>

namespace xfam {

namespace {

// elements a..b as a mask; empty when b < a (callers keep b <= n <= 30)
Mask range_mask(int a, int b) {
  if (b < a) return 0;
  return ((1u << b) - 1) & ~((1u << (a - 1)) - 1);
}

template <typename Pred>
Family filter_level(int n, int u, long long cap, Pred pred) {
  std::vector<Mask> members;
  for (Mask m : lex_level(n, u, cap))
    if (pred(m)) members.push_back(m);
  return make_family(n, u, std::move(members));
}

void check_window_params(int n, int u, int r, int s) {
  if (n < 1 || n > kMaxGround) throw std::domain_error("ground set out of range");
  if (r < 0 || s < 0 || r > u || s > u || u >= n || r + s > n)
    throw std::domain_error("window family: need r,s <= u < n and r+s <= n");
}

void verify_pair(const std::pair<Family, Family>& p, bool want_nontrivial,
                 const char* who) {
  if (!is_cross_intersecting(p.first, p.second))
    throw std::logic_error(std::string(who) + ": pair not cross-intersecting");
  if (want_nontrivial &&
      common_intersection({p.first, p.second}) != 0)
    throw std::domain_error(std::string(who) + ": pair is trivially intersecting");
}

}  // namespace

Family family_upper(int n, int u, int r, int s, long long cap) {
  check_window_params(n, u, r, s);
  const Mask head = range_mask(1, r);
  const Mask window = range_mask(r + 1, r + s);
  return filter_level(n, u, cap, [&](Mask f) {
    return (f & head) != 0 || (f & window) == window;
  });
}

Family family_lower(int n, int u, int r, int s, long long cap) {
  check_window_params(n, u, r, s);
  const Mask head = range_mask(1, r);
  const Mask window = range_mask(r + 1, r + s);
  return filter_level(n, u, cap, [&](Mask f) {
    return (f & head) == head && (f & window) != 0;
  });
}

BigInt size_upper(int n, int u, int r, int s) {
  check_window_params(n, u, r, s);
  BigInt v = binom(n - r - s, u - s);
  for (int i = 1; i <= r; ++i) v += binom(n - i, u - 1);
  return v;
}

BigInt size_lower(int n, int u, int r, int s) {
  check_window_params(n, u, r, s);
  return binom(n - r, u - r) - binom(n - r - s, u - r);
}

Family slice_lower(int n, int k, int r, int s, int i, long long cap) {
  if (n < 1 || n > kMaxGround) throw std::domain_error("ground set out of range");
  if (r < 0 || s < 1 || i < 1 || k > n)
    throw std::domain_error("slice_lower: need r >= 0, s >= 1, i >= 1");
  if (r + s + i - 1 > n) return make_family(n, k, {});  // window off the end
  const Mask head = range_mask(1, r);
  const Mask window = range_mask(r + 1, r + s + i);
  const Mask run = range_mask(r + s, r + s + i - 1);
  return filter_level(n, k, cap, [&](Mask f) {
    return (f & head) == head && (f & window) == run;
  });
}

Family slice_upper(int n, int ell, int r, int s, int j, long long cap) {
  if (n < 1 || n > kMaxGround) throw std::domain_error("ground set out of range");
  if (r < 0 || s < 1 || j < 1 || ell > n)
    throw std::domain_error("slice_upper: need r >= 0, s >= 1, j >= 1");
  if (r + s + j > n) return make_family(n, ell, {});  // forced element off the end
  const Mask head = range_mask(1, r);
  const Mask window = range_mask(r + 1, r + s + j);
  const Mask forced = range_mask(r + 1, r + s - 1) | (1u << (r + s + j - 1));
  return filter_level(n, ell, cap, [&](Mask f) {
    return (f & head) == 0 && (f & window) == forced;
  });
}

std::pair<Family, Family> extremal_MT(int n, int k, int ell, int x) {
  if (x < 1 || x > n) throw std::domain_error("extremal_MT: x outside [n]");
  const Mask at = 1u << (x - 1);
  auto p = std::make_pair(
      filter_level(n, k, kDefaultEnumCap, [&](Mask f) { return (f & at) != 0; }),
      filter_level(n, ell, kDefaultEnumCap, [&](Mask f) { return (f & at) != 0; }));
  verify_pair(p, false, "extremal_MT");
  return p;
}

std::pair<Family, Family> extremal_main_1(int n, int k, int ell) {
  if (n < k + ell) throw std::domain_error("extremal_main_1: need n >= k+l");
  const Mask head = range_mask(1, 2);
  auto p = std::make_pair(
      filter_level(n, k, kDefaultEnumCap,
                   [&](Mask f) { return (f & head) != 0; }),
      filter_level(n, ell, kDefaultEnumCap,
                   [&](Mask f) { return (f & head) == head; }));
  verify_pair(p, true, "extremal_main_1");
  return p;
}

std::pair<Family, Family> extremal_main_2(int n, int k, int ell) {
  if (n < k + ell) throw std::domain_error("extremal_main_2: need n >= k+l");
  const Mask one = 1u;
  const Mask window = range_mask(2, k + 1);
  Family a = filter_level(n, k, kDefaultEnumCap, [&](Mask f) {
    return (f & one) != 0 || f == window;
  });
  Family b = filter_level(n, ell, kDefaultEnumCap, [&](Mask f) {
    return (f & one) != 0 && (f & window) != 0;
  });
  auto p = std::make_pair(std::move(a), std::move(b));
  verify_pair(p, true, "extremal_main_2");
  return p;
}

std::pair<Family, Family> extremal_FKWX(int n, int k, int x, Mask d) {
  if (n < 2 * k + 1) throw std::domain_error("extremal_FKWX: need n >= 2k+1");
  if (x < 1 || x > n) throw std::domain_error("extremal_FKWX: x outside [n]");
  const Mask at = 1u << (x - 1);
  if (std::popcount(d) != k || (d & at) != 0 || (d >> n) != 0)
    throw std::domain_error("extremal_FKWX: D must be a k-set avoiding x");
  Family a = filter_level(n, k, kDefaultEnumCap, [&](Mask f) {
    return (f & at) != 0 && (f & d) != 0;
  });
  Family b = filter_level(n, k, kDefaultEnumCap, [&](Mask f) {
    return (f & at) != 0 || f == d;
  });
  auto p = std::make_pair(std::move(a), std::move(b));
  verify_pair(p, true, "extremal_FKWX");
  return p;
}

std::pair<Family, Family> sharpness_case1(int ell) {
  if (ell < 2) throw std::domain_error("sharpness_case1: need l >= 2");
  const int n = 2 * ell - 1, k = ell - 1;
  const BigInt half = binom(n, k) / 2;
  Family a = lex_segment(n, k, half);
  const Mask full = (1u << n) - 1;
  // membership of A by lex rank: complements outside A
  Family b = filter_level(n, ell, kDefaultEnumCap, [&](Mask f) {
    return lex_rank(n, k, full ^ f) >= half;
  });
  auto p = std::make_pair(std::move(a), std::move(b));
  verify_pair(p, true, "sharpness_case1");
  return p;
}

std::pair<Family, Family> sharpness_case2(int k) {
  if (k < 2) throw std::domain_error("sharpness_case2: need k >= 2");
  const int n = 2 * k;
  const Mask one = 1u;
  const Mask window = range_mask(2, k + 1);
  const Mask removed = one | range_mask(k + 2, 2 * k);
  Family a = filter_level(n, k, kDefaultEnumCap, [&](Mask f) {
    return ((f & one) != 0 || f == window) && f != removed;
  });
  auto p = std::make_pair(a, a);
  verify_pair(p, true, "sharpness_case2");
  return p;
}

}  // namespace xfam
