#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace xfam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient.  Out-of-range j (j < 0 or j > m) yields 0 so that
// expressions like binom(n-k-1, l-1) stay valid when the top drops below the
// bottom.  Negative m is a domain error, not a 0.
BigInt binom(long long m, long long j);

struct CascadeTerm {
  long long top;    // a_i
  long long under;  // k - i + 1
};

// k-cascade of m: m = binom(a_1, k) + binom(a_2, k-1) + ...,
// a_1 > a_2 > ... > a_t > k - t.  Unique for every m >= 1.
struct CascadeRep {
  long long k = 0;
  std::vector<CascadeTerm> terms;

  BigInt value() const;
};

CascadeRep cascade(const BigInt& m, long long k);

// Minimum possible l-shadow size over families of m k-sets: evaluate the
// cascade of m at level l, i.e. sum binom(a_i, l-i+1).  Requires 1 <= l < k.
BigInt cascade_shadow_bound(const BigInt& m, long long k, long long ell);

// x(x-1)...(x-k+1)/k! for real x >= k-1; strictly increasing there.
double real_binom(double x, long long k);

// The unique real x >= k with real_binom(x, k) = m, by bisection on [k, k+m]
// run to double resolution (error well below 1e-12 relative).  Callers
// needing an integer must ceil.
double inv_real_binom(const BigInt& m, long long k);
double inv_real_binom(double m, long long k);

// Self-test of exact rational comparison: whether
//   (c-a)(d+b) <= cd   <=>   c/(d+b) <= a/b
// holds for the given positive inputs.  Expected to be true always.
bool ratio_equiv_check(const BigInt& a, const BigInt& b, const BigInt& c,
                       const BigInt& d);

}  // namespace xfam
