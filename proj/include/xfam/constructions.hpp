#pragma once

#include "xfam/setfamily.hpp"

#include <utility>

namespace xfam {

// Window families on [n] at level u with head [r] and window [r+1, r+s]:
//   upper: F meets [r], or contains the whole window
//   lower: F contains [r] and meets the window
// The lower/upper pair at levels (k, l) is maximal cross-intersecting.
Family family_upper(int n, int u, int r, int s, long long cap = kDefaultEnumCap);
Family family_lower(int n, int u, int r, int s, long long cap = kDefaultEnumCap);

// Closed-form sizes of the two families above.
BigInt size_upper(int n, int u, int r, int s);
BigInt size_lower(int n, int u, int r, int s);

// Slices partitioning lower(s) \ lower(s-1) by the run i after the window:
//   A contains [r] and A cap [r+1, r+s+i] = [r+s, r+s+i-1].
// Infeasible windows give the empty family.
Family slice_lower(int n, int k, int r, int s, int i,
                   long long cap = kDefaultEnumCap);

// Slices partitioning upper(s-1) \ upper(s) by the first element j past the
// window: B avoids [r] and B cap [r+1, r+s+j] = [r+1, r+s-1] + {r+s+j}.
Family slice_upper(int n, int ell, int r, int s, int j,
                   long long cap = kDefaultEnumCap);

// Extremal pairs of the product theorems.  Constructors verify the
// cross-intersection (and, where claimed, nontriviality) and throw on
// violation instead of assuming it.

// Two stars at x; the trivially-intersecting optimum.
std::pair<Family, Family> extremal_MT(int n, int k, int ell, int x);

// A = {A : A meets [2]}, B = {B : [2] in B}.
std::pair<Family, Family> extremal_main_1(int n, int k, int ell);

// A = {A : 1 in A} + {[2,k+1]}, B = {B : 1 in B, B meets [2,k+1]}.
std::pair<Family, Family> extremal_main_2(int n, int k, int ell);

// A = {A : x in A, A meets D}, B = {B : x in B} + {D}; |D| = k, x not in D.
std::pair<Family, Family> extremal_FKWX(int n, int k, int x, Mask d);

// n = 2l-1, k = l-1: A = lex-first half of the k-level, B = everything whose
// complement is outside A.  Cross-intersecting for any A; the half split makes
// the product beat the n > k+l bound.
std::pair<Family, Family> sharpness_case1(int ell);

// n = 2k: A = B = {A : 1 in A} + {[2,k+1]} - {{1} + [k+2,2k]}.
std::pair<Family, Family> sharpness_case2(int k);

}  // namespace xfam
