#pragma once

#include "xfam/exactmath.hpp"

#include <cstdint>
#include <vector>

namespace xfam {

// Ground set [n] = {1..n}, n <= 30; element i lives at bit i-1.
using Mask = uint32_t;

constexpr int kMaxGround = 30;
constexpr long long kDefaultEnumCap = 500000;

// Lex order on equal-size sets: F < G iff min(F\G) < min(G\F), i.e. the set
// owning the lowest differing bit comes first.  Colex is plain numeric order.
bool lex_less(Mask a, Mask b);

struct Family {
  int n = 0;
  int k = 0;
  std::vector<Mask> members;  // ascending lex, duplicate-free

  bool operator==(const Family&) const = default;
};

// Validates sizes/range, sorts by lex, drops duplicates.
Family make_family(int n, int k, std::vector<Mask> members);

// All binom(n,k) subsets in the requested order; guarded by the cap.
std::vector<Mask> lex_level(int n, int k, long long cap = kDefaultEnumCap);
std::vector<Mask> colex_level(int n, int k, long long cap = kDefaultEnumCap);

// First m subsets in the respective order (members stored lex-sorted).
Family lex_segment(int n, int k, const BigInt& m);
Family colex_segment(int n, int k, const BigInt& m);

// 0-based position of f in the lex order of binom([n],k).
BigInt lex_rank(int n, int k, Mask f);

Family shadow(const Family& f, int ell);

Family complement_family(const Family& f);

bool is_cross_intersecting(const Family& a, const Family& b);

Mask common_intersection(const std::vector<Family>& families);

// Maximal partner of a at level ell: every ell-set meeting all of a.
Family dual(const Family& a, int ell, long long cap = kDefaultEnumCap);

bool is_maximal_pair(const Family& a, const Family& b,
                     long long cap = kDefaultEnumCap);

// Hilton: replacing a cross-intersecting pair by lex segments of the same
// sizes keeps it cross-intersecting.
std::pair<Family, Family> lex_compress_pair(const Family& a, const Family& b);

// Lex-minimal relabeling over all n! permutations; n <= 9.
Family canonical_form(const Family& f);
bool isomorphic(const Family& f, const Family& g);

Mask apply_perm(Mask f, const std::vector<int>& perm);

}  // namespace xfam
