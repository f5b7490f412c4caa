#include "xfam/exactmath.hpp"

#include <cmath>
#include <stdexcept>

namespace xfam {

BigInt binom(long long m, long long j) {
  if (m < 0) throw std::domain_error("binom: negative m");
  if (j < 0 || j > m) return 0;
  if (j > m - j) j = m - j;
  BigInt r = 1;
  for (long long i = 1; i <= j; ++i) {
    r *= m - j + i;
    r /= i;  // exact: prefix products are binomials
  }
  return r;
}

BigInt CascadeRep::value() const {
  BigInt m = 0;
  for (const auto& t : terms) m += binom(t.top, t.under);
  return m;
}

CascadeRep cascade(const BigInt& m, long long k) {
  if (m <= 0) throw std::domain_error("cascade: m must be >= 1");
  if (k < 1) throw std::domain_error("cascade: k must be >= 1");
  CascadeRep rep;
  rep.k = k;
  BigInt rem = m;
  long long under = k;
  while (rem > 0) {
    // largest a with binom(a, under) <= rem; exists since binom(under,under)=1
    long long a = under;
    while (binom(a + 1, under) <= rem) ++a;
    rep.terms.push_back({a, under});
    rem -= binom(a, under);
    --under;
  }
  return rep;
}

BigInt cascade_shadow_bound(const BigInt& m, long long k, long long ell) {
  if (k < 2) throw std::domain_error("cascade_shadow_bound: k must be >= 2");
  if (ell < 1 || ell >= k)
    throw std::domain_error("cascade_shadow_bound: need 1 <= l < k");
  CascadeRep rep = cascade(m, k);
  BigInt s = 0;
  for (const auto& t : rep.terms) {
    long long drop = k - ell;  // level shift: under k-i+1 -> l-i+1
    s += binom(t.top, t.under - drop);
  }
  return s;
}

double real_binom(double x, long long k) {
  if (k < 1) throw std::domain_error("real_binom: k must be >= 1");
  if (x < static_cast<double>(k - 1))
    throw std::domain_error("real_binom: need x >= k-1");
  double r = 1.0;
  for (long long i = 0; i < k; ++i) r *= (x - i) / static_cast<double>(i + 1);
  return r;
}

double inv_real_binom(double m, long long k) {
  if (m < 1) throw std::domain_error("inv_real_binom: m must be >= 1");
  if (k < 1) throw std::domain_error("inv_real_binom: k must be >= 1");
  double lo = static_cast<double>(k);
  double hi = static_cast<double>(k) + m;  // binom(k+m, k) >= 1+m > m
  for (;;) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;  // double resolution exhausted
    if (real_binom(mid, k) < m)
      lo = mid;
    else
      hi = mid;
  }
  return lo + (hi - lo) / 2;
}

double inv_real_binom(const BigInt& m, long long k) {
  if (m < 1) throw std::domain_error("inv_real_binom: m must be >= 1");
  return inv_real_binom(m.convert_to<double>(), k);
}

bool ratio_equiv_check(const BigInt& a, const BigInt& b, const BigInt& c,
                       const BigInt& d) {
  if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
    throw std::domain_error("ratio_equiv_check: inputs must be positive");
  const bool lhs = (c - a) * (d + b) <= c * d;
  const bool rhs = Rational(c, d + b) <= Rational(a, b);
  return lhs == rhs;
}

}  // namespace xfam
