#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xfam/json_io.hpp"
#include "xfam/setfamily.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

using namespace xfam;

namespace {

Mask mk(std::initializer_list<int> elems) {
  Mask m = 0;
  for (int e : elems) m |= 1u << (e - 1);
  return m;
}

Family fam(int n, int k, std::initializer_list<std::initializer_list<int>> ss) {
  std::vector<Mask> members;
  for (auto s : ss) members.push_back(mk(s));
  return make_family(n, k, std::move(members));
}

Family star(int n, int k, int elem) {
  std::vector<Mask> members;
  for (Mask m : lex_level(n, k))
    if (m >> (elem - 1) & 1) members.push_back(m);
  return make_family(n, k, std::move(members));
}

}  // namespace

TEST_CASE("orders and levels") {
  auto lx = lex_level(4, 2);
  std::vector<Mask> want = {mk({1, 2}), mk({1, 3}), mk({1, 4}),
                            mk({2, 3}), mk({2, 4}), mk({3, 4})};
  CHECK(lx == want);
  for (size_t i = 0; i + 1 < lx.size(); ++i) CHECK(lex_less(lx[i], lx[i + 1]));

  auto cx = colex_level(5, 3);
  REQUIRE(cx.size() == 10);
  std::vector<Mask> first5 = {mk({1, 2, 3}), mk({1, 2, 4}), mk({1, 3, 4}),
                              mk({2, 3, 4}), mk({1, 2, 5})};
  CHECK(std::equal(first5.begin(), first5.end(), cx.begin()));
  CHECK(std::is_sorted(cx.begin(), cx.end()));  // colex = numeric order

  CHECK(lex_level(6, 0) == std::vector<Mask>{0u});
  CHECK(colex_level(6, 0) == std::vector<Mask>{0u});
  CHECK_THROWS_AS(lex_level(12, 6, 100), std::runtime_error);  // cap
  CHECK_THROWS_AS(lex_level(0, 0), std::domain_error);
  CHECK_THROWS_AS(lex_level(31, 2), std::domain_error);
}

TEST_CASE("segments") {
  auto seg = lex_segment(10, 3, binom(9, 2));
  CHECK(seg == star(10, 3, 1));

  for (int n : {5, 7}) {
    auto cs = colex_segment(n, 3, 5);
    CHECK(cs == fam(n, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}}));
  }

  CHECK(lex_segment(6, 2, 0).members.empty());
  CHECK_THROWS_AS(lex_segment(5, 2, 11), std::domain_error);
  CHECK_THROWS_AS(colex_segment(5, 2, -1), std::domain_error);
}

TEST_CASE("lex rank inverts enumeration") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      auto lx = lex_level(n, k);
      for (size_t i = 0; i < lx.size(); ++i)
        CHECK(lex_rank(n, k, lx[i]) == static_cast<long long>(i));
    }
}

TEST_CASE("shadow") {
  auto c5 = colex_segment(6, 3, 5);
  CHECK(shadow(c5, 2).members.size() == 8);
  CHECK(shadow(make_family(6, 3, {}), 2).members.empty());

  Family full3 = make_family(5, 3, lex_level(5, 3));
  CHECK(shadow(full3, 2) == make_family(5, 2, lex_level(5, 2)));

  CHECK_THROWS_AS(shadow(full3, 3), std::domain_error);
  CHECK_THROWS_AS(shadow(full3, 0), std::domain_error);
}

TEST_CASE("shadow sizes meet the cascade bound exhaustively at n=5 k=3") {
  auto level = lex_level(5, 3);
  for (uint32_t pick = 1; pick < (1u << 10); ++pick) {
    std::vector<Mask> members;
    for (int i = 0; i < 10; ++i)
      if (pick >> i & 1) members.push_back(level[i]);
    Family f = make_family(5, 3, std::move(members));
    long long m = f.members.size();
    for (int ell = 1; ell <= 2; ++ell)
      CHECK(BigInt(shadow(f, ell).members.size()) >=
            cascade_shadow_bound(m, 3, ell));
  }
}

TEST_CASE("complement") {
  auto s = star(6, 2, 1);
  auto c = complement_family(s);
  CHECK(c.k == 4);
  for (Mask m : c.members) CHECK((m & 1u) == 0);
  CHECK(complement_family(c) == s);
  CHECK(complement_family(make_family(5, 2, {})).members.empty());
}

TEST_CASE("cross-intersection and common intersection") {
  CHECK(is_cross_intersecting(star(6, 2, 1), star(6, 3, 1)));
  CHECK_FALSE(is_cross_intersecting(fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}})));
  CHECK(is_cross_intersecting(make_family(5, 2, {}), star(5, 2, 1)));
  CHECK_THROWS_AS(is_cross_intersecting(star(5, 2, 1), star(6, 2, 1)),
                  std::invalid_argument);

  CHECK(common_intersection({star(6, 3, 2)}) == mk({2}));
  CHECK(common_intersection({fam(6, 1, {{5}})}) == mk({5}));
  CHECK(common_intersection({star(5, 2, 1), star(5, 3, 1)}) == mk({1}));
  CHECK(common_intersection({star(5, 2, 1), star(5, 3, 2)}) == 0u);
  CHECK_THROWS_AS(common_intersection({make_family(5, 2, {})}),
                  std::invalid_argument);
}

TEST_CASE("dual") {
  Family empty = make_family(6, 2, {});
  CHECK(dual(empty, 3) == make_family(6, 3, lex_level(6, 3)));

  Family full = make_family(6, 2, lex_level(6, 2));
  CHECK(dual(full, 3).members.empty());  // n >= k + l

  CHECK(dual(star(6, 2, 1), 3) == star(6, 3, 1));

  CHECK_THROWS_AS(dual(star(12, 2, 1), 6, 100), std::runtime_error);
}

TEST_CASE("maximal pairs") {
  CHECK(is_maximal_pair(star(6, 2, 1), star(6, 3, 1)));
  CHECK(is_maximal_pair(star(5, 2, 4), star(5, 3, 4)));
  CHECK_FALSE(is_maximal_pair(make_family(6, 2, {}), star(6, 3, 1)));
  // n < k + l: every two sets meet, so the only maximal pair is (full, full)
  CHECK_FALSE(is_maximal_pair(star(4, 2, 1), star(4, 3, 1)));
  CHECK(is_maximal_pair(make_family(4, 2, lex_level(4, 2)),
                        make_family(4, 3, lex_level(4, 3))));
}

TEST_CASE("closure and triple-dual collapse (exhaustive small grids)") {
  struct G {
    int n, k, ell;
  };
  for (G g : {G{4, 2, 2}, G{5, 2, 3}, G{5, 3, 2}}) {
    auto level = lex_level(g.n, g.k);
    int cnt = level.size();
    for (uint32_t pick = 0; pick < (1u << cnt); ++pick) {
      std::vector<Mask> members;
      for (int i = 0; i < cnt; ++i)
        if (pick >> i & 1) members.push_back(level[i]);
      Family a = make_family(g.n, g.k, std::move(members));
      Family d1 = dual(a, g.ell);
      Family d2 = dual(d1, g.k);
      // closure grows and is maximal-stable
      for (Mask m : a.members)
        CHECK(std::find(d2.members.begin(), d2.members.end(), m) !=
              d2.members.end());
      CHECK(dual(d2, g.ell) == d1);
    }
  }
}

TEST_CASE("lex compression keeps sizes and rejects bad input") {
  auto a = star(6, 2, 1);
  auto b = star(6, 3, 1);
  auto [la, lb] = lex_compress_pair(a, b);
  CHECK(la == a);  // a star at 1 is already the lex segment of its size
  CHECK(lb == b);
  CHECK(is_cross_intersecting(la, lb));

  auto a2 = fam(6, 2, {{2, 3}, {2, 4}, {3, 4}});
  auto b2 = fam(6, 3, {{2, 3, 4}, {2, 3, 5}, {3, 4, 6}, {2, 4, 6}});
  REQUIRE(is_cross_intersecting(a2, b2));
  auto [ca, cb] = lex_compress_pair(a2, b2);
  CHECK(ca.members.size() == a2.members.size());
  CHECK(cb.members.size() == b2.members.size());
  CHECK(is_cross_intersecting(ca, cb));
  CHECK(ca == lex_segment(6, 2, 3));

  CHECK_THROWS_AS(lex_compress_pair(fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}})),
                  std::invalid_argument);
}

TEST_CASE("canonical form and isomorphism") {
  CHECK(isomorphic(star(6, 2, 1), star(6, 2, 3)));
  CHECK_FALSE(isomorphic(fam(4, 2, {{1, 2}, {1, 3}, {1, 4}}),
                         fam(4, 2, {{1, 2}, {1, 3}, {2, 3}})));
  auto f = fam(7, 3, {{2, 4, 6}, {1, 4, 7}, {3, 5, 6}});
  CHECK(isomorphic(f, canonical_form(f)));
  CHECK(canonical_form(canonical_form(f)) == canonical_form(f));
  CHECK_THROWS_AS(canonical_form(star(10, 2, 1)), std::domain_error);

  // relabeling invariance: same canonical form from any starting labels
  std::vector<int> perm = {3, 0, 5, 1, 6, 2, 4};
  std::vector<Mask> relabeled;
  for (Mask m : f.members) relabeled.push_back(apply_perm(m, perm));
  CHECK(canonical_form(make_family(7, 3, relabeled)) == canonical_form(f));
}

namespace {

// Exhaustive shadow minimizers at level k=3 over [n], checked against the
// uniqueness criterion: minimizer unique up to isomorphism iff l >= t, or
// binom(a_1+1,k)-1 = m, or m <= k+1 (cascade a_1 > ... > a_t of m).
void check_minimizer_uniqueness(int n) {
  const int k = 3, ell = 2;
  auto level = lex_level(n, k);
  auto lower = lex_level(n, ell);
  const int cnt = level.size();
  std::vector<uint32_t> shadow_of(cnt, 0);
  for (int i = 0; i < cnt; ++i)
    for (size_t j = 0; j < lower.size(); ++j)
      if ((lower[j] & level[i]) == lower[j]) shadow_of[i] |= 1u << j;

  std::vector<int> best(cnt + 1, 1 << 30);
  for (uint32_t pick = 1; pick < (1u << cnt); ++pick) {
    uint32_t sh = 0;
    for (uint32_t rest = pick; rest;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      sh |= shadow_of[i];
    }
    int m = std::popcount(pick);
    best[m] = std::min(best[m], std::popcount(sh));
  }

  for (int m = 1; m <= cnt; ++m) {
    CHECK(best[m] == cascade_shadow_bound(m, k, ell).convert_to<int>());

    std::set<std::vector<Mask>> classes;
    for (uint32_t pick = 1; pick < (1u << cnt); ++pick) {
      if (std::popcount(pick) != m) continue;
      uint32_t sh = 0;
      std::vector<Mask> members;
      for (uint32_t rest = pick; rest;) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        sh |= shadow_of[i];
        members.push_back(level[i]);
      }
      if (std::popcount(sh) != best[m]) continue;
      classes.insert(canonical_form(make_family(n, k, members)).members);
    }

    auto rep = cascade(m, k);
    long long t = rep.terms.size();
    bool unique_predicted = ell >= t ||
                            binom(rep.terms[0].top + 1, k) - 1 == m ||
                            m <= k + 1;
    CHECK((classes.size() == 1) == unique_predicted);
  }
}

}  // namespace

TEST_CASE("shadow minimizers are unique exactly when the criterion says so") {
  check_minimizer_uniqueness(5);
  check_minimizer_uniqueness(6);
}

TEST_CASE("family JSON round-trip") {
  auto f = fam(7, 3, {{1, 2, 5}, {2, 4, 7}, {3, 4, 5}});
  Json j = family_to_json(f);
  CHECK(j["n"] == 7);
  CHECK(j["k"] == 3);
  CHECK(j["sets"].size() == 3);
  for (const auto& s : j["sets"]) {
    auto v = s.get<std::vector<int>>();
    CHECK(std::is_sorted(v.begin(), v.end()));
  }
  CHECK(family_from_json(j) == f);

  Json bad = {{"n", 5}, {"k", 2}, {"sets", {{2, 1}}}};
  CHECK_THROWS_AS(family_from_json(bad), std::invalid_argument);
  Json outside = {{"n", 5}, {"k", 2}, {"sets", {{4, 6}}}};
  CHECK_THROWS_AS(family_from_json(outside), std::invalid_argument);

  CHECK(bigint_from_json(bigint_to_json(BigInt("123456789012345678901234567890"))) ==
        BigInt("123456789012345678901234567890"));
  CHECK(bigint_from_json(Json(42)) == 42);
}
