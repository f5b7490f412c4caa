#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xfam/bounds.hpp"
#include "xfam/sweeps.hpp"

#include <algorithm>
#include <random>
#include <sstream>

using namespace xfam;

namespace {

BoundReport eval(Theorem t, Params p) { return bound(t, std::move(p)); }

BigInt one_value(Theorem t, Params p) {
  BoundReport r = bound(t, std::move(p));
  REQUIRE(r.hypotheses_met);
  REQUIRE(r.values.size() == 1);
  return r.values[0];
}

}  // namespace

TEST_CASE("single-family and product bounds at sample points") {
  CHECK(one_value(Theorem::EKR, {{"n", 5}, {"k", 2}}) == 4);
  CHECK(one_value(Theorem::EKR, {{"n", 8}, {"k", 3}}) == 21);
  CHECK(one_value(Theorem::PYBER1, {{"n", 6}, {"k", 3}}) == 100);
  // larger side first, smaller side second
  CHECK(one_value(Theorem::PYBER2, {{"n", 8}, {"k", 3}, {"ell", 2}}) ==
        binom(7, 2) * binom(7, 1));
  CHECK(one_value(Theorem::MT, {{"n", 7}, {"k", 2}, {"ell", 3}}) == 90);
  CHECK(one_value(Theorem::MT, {{"n", 10}, {"k", 3}, {"ell", 5}}) ==
        binom(9, 2) * binom(9, 4));
  CHECK(one_value(Theorem::FKWX, {{"n", 5}, {"k", 2}}) == 10);
  CHECK(one_value(Theorem::MAIN1, {{"n", 7}, {"k", 2}, {"ell", 3}}) == 55);
  CHECK(one_value(Theorem::MAIN2, {{"n", 7}, {"k", 2}, {"ell", 3}}) == 63);
  CHECK(one_value(Theorem::GAMMA, {{"n", 7}, {"k", 2}, {"ell", 3}}) == 63);
  CHECK(one_value(Theorem::CTHEO3, {{"n", 8}, {"k", 3}, {"ell", 3}}) == 330);
  CHECK(one_value(Theorem::THEO3,
                  {{"n", 8}, {"k", 3}, {"ell", 3}, {"r", 1}, {"s", 3}}) == 330);
  CHECK(one_value(Theorem::FKWX, {{"n", 8}, {"k", 3}}) == 330);
}

TEST_CASE("two-threshold bound reports both values") {
  BoundReport r = eval(Theorem::MORS2, {{"n", 7}, {"k", 2}, {"ell", 3}});
  REQUIRE(r.hypotheses_met);
  REQUIRE(r.values.size() == 2);
  CHECK(r.values[0] == 4);   // binom(6,1) - binom(3,1) + 1
  CHECK(r.values[1] == 10);  // binom(6,2) - binom(4,2) + 1
}

TEST_CASE("hypothesis violations are flagged and values omitted") {
  BoundReport r = eval(Theorem::MT, {{"n", 5}, {"k", 2}, {"ell", 3}});
  CHECK_FALSE(r.hypotheses_met);
  CHECK(r.values.empty());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0] == "n >= 2*ell");

  r = eval(Theorem::PYBER2, {{"n", 8}, {"k", 2}, {"ell", 3}});
  CHECK_FALSE(r.hypotheses_met);
  CHECK(r.values.empty());

  r = eval(Theorem::GAMMA, {{"n", 4}, {"k", 2}, {"ell", 2}});
  CHECK_FALSE(r.hypotheses_met);  // needs n > 2*ell when levels are equal
  CHECK(r.values.empty());

  r = eval(Theorem::FK, {{"n", 9}, {"k", 4}, {"i", 2}});
  CHECK_FALSE(r.hypotheses_met);

  CHECK_THROWS_AS(bound(Theorem::MT, {{"n", 7}, {"k", 2}}),
                  std::invalid_argument);  // ell missing
}

TEST_CASE("bound reports serialize with value as decimal string") {
  Json j = bound_report_to_json(eval(Theorem::MT, {{"n", 7}, {"k", 2}, {"ell", 3}}));
  CHECK(j["theorem"] == "MT");
  CHECK(j["params"]["n"] == 7);
  CHECK(j["hypotheses_met"] == true);
  CHECK(j["value"] == "90");
  CHECK_FALSE(j.contains("violations"));
  // parameters appear in declaration order, not alphabetical
  std::string dumped = j.dump();
  CHECK(dumped.find("\"n\":7,\"k\":2,\"ell\":3") != std::string::npos);

  j = bound_report_to_json(eval(Theorem::MORS2, {{"n", 7}, {"k", 2}, {"ell", 3}}));
  CHECK(j["value"] == Json::array({"4", "10"}));

  j = bound_report_to_json(eval(Theorem::MT, {{"n", 5}, {"k", 2}, {"ell", 3}}));
  CHECK_FALSE(j.contains("value"));
  CHECK(j["violations"] == Json::array({"n >= 2*ell"}));

  j = bound_report_to_json(eval(Theorem::PROP2, {{"n", 8}, {"k", 2}, {"ell", 3}}));
  CHECK(j["value"] == "88");  // (7+1) * (binom(7,2) - binom(5,2))
}

TEST_CASE("windowed bounds report their size windows") {
  // lower end binom(n-1,k-1)+binom(n-3,k-2), upper end adds binom(n-4,k-2)
  BoundReport r = eval(Theorem::PROP2, {{"n", 8}, {"k", 2}, {"ell", 3}});
  REQUIRE(r.hypotheses_met);
  CHECK(r.values[0] == (binom(7, 1) + binom(5, 0)) * (binom(7, 2) - binom(5, 2)));
  REQUIRE(r.window_lo);
  REQUIRE(r.window_hi);
  CHECK(*r.window_lo == binom(7, 1) + binom(5, 0));
  CHECK(*r.window_hi == binom(7, 1) + binom(5, 0) + binom(4, 0));

  r = eval(Theorem::PROP1, {{"n", 10}, {"k", 4}, {"ell", 5}, {"s", 3}});
  REQUIRE(r.hypotheses_met);
  CHECK(r.values[0] == (binom(9, 3) + binom(6, 1)) * (binom(9, 4) - binom(6, 4)));
  CHECK(*r.window_lo == binom(9, 3) + binom(6, 1));
  CHECK(*r.window_hi == binom(9, 3) + binom(7, 2));

  r = eval(Theorem::PROP3, {{"n", 8}, {"k", 3}, {"ell", 3}});
  REQUIRE(r.hypotheses_met);  // 8 < 9 = ell^2
  CHECK(r.values[0] ==
        (binom(7, 2) + binom(5, 1) + binom(4, 1)) * (binom(6, 1) + binom(4, 0)));

  r = eval(Theorem::PROP3, {{"n", 9}, {"k", 3}, {"ell", 3}});
  CHECK_FALSE(r.hypotheses_met);  // boundary n = ell^2 is outside

  r = eval(Theorem::PROP4, {{"n", 10}, {"k", 2}, {"ell", 4}});
  REQUIRE(r.hypotheses_met);
  CHECK(r.values[0] == one_value(Theorem::MAIN1, {{"n", 10}, {"k", 2}, {"ell", 4}}));
  CHECK(*r.window_lo == binom(9, 1) + binom(7, 0) + binom(6, 0) + binom(5, 0));
  CHECK(*r.window_hi == binom(9, 1) + binom(8, 1));

  r = eval(Theorem::PROP5, {{"n", 10}, {"k", 2}, {"ell", 4}, {"s", 3}});
  REQUIRE(r.hypotheses_met);
  CHECK(r.values[0] ==
        (binom(9, 1) + binom(8, 1) + binom(7, 1)) * binom(7, 1));
  CHECK(*r.window_lo == binom(9, 1) + binom(8, 1) + binom(7, 1));
  CHECK_FALSE(r.window_hi);  // no upper limit on |A|

  Json j = bound_report_to_json(r);
  CHECK(j["window"]["lo"] == "24");
  CHECK_FALSE(j["window"].contains("hi"));
}

TEST_CASE("threshold-conditioned bounds agree where they specialize") {
  // r = 1, s = ell makes the general bound collapse to the corollary form
  for (long long n = 4; n <= 24; ++n)
    for (long long k = 1; k <= 6; ++k)
      for (long long ell = std::max(k, 2LL); n >= k + ell && ell <= 8; ++ell) {
        BigInt general = one_value(
            Theorem::THEO3,
            {{"n", n}, {"k", k}, {"ell", ell}, {"r", 1}, {"s", ell}});
        CHECK(general == one_value(Theorem::CTHEO3,
                                   {{"n", n}, {"k", k}, {"ell", ell}}));
      }
  // equal levels with r = 1, s = i-1 give the equal-level threshold bound
  for (long long n = 5; n <= 20; ++n)
    for (long long k = 2; 2 * k < n && k <= 7; ++k)
      for (long long i = 3; i <= k + 1; ++i) {
        BigInt fk = one_value(Theorem::FK, {{"n", n}, {"k", k}, {"i", i}});
        BigInt t3 = one_value(
            Theorem::THEO3,
            {{"n", n}, {"k", k}, {"ell", k}, {"r", 1}, {"s", i - 1}});
        CHECK(fk == t3);
      }
  // equal levels: the corollary form equals the nontrivial-pair bound
  for (long long n = 5; n <= 20; ++n)
    for (long long k = 1; 2 * k + 1 <= n; ++k)
      CHECK(one_value(Theorem::CTHEO3, {{"n", n}, {"k", k}, {"ell", k}}) ==
            one_value(Theorem::FKWX, {{"n", n}, {"k", k}}));
}

TEST_CASE("two-candidate maximum: examples, closed form, and consistency") {
  CHECK(gamma(7, 2, 3) == 63);
  CHECK(gamma(6, 2, 2) == 12);
  CHECK(gamma(4, 2, 2) == 8);
  CHECK(gamma(5, 2, 3) == 25);
  CHECK(gamma(7, 3, 4) == 304);
  // at (k,ell) = (2,3) the two candidates are (2n-3)(n-2) and n(2n-5)
  for (long long n = 5; n <= 60; ++n) {
    const BigInt a = BigInt(2 * n - 3) * (n - 2);
    const BigInt b = BigInt(n) * (2 * n - 5);
    CHECK(gamma(n, 2, 3) == (a >= b ? a : b));
  }
  CHECK(gamma(10, 2, 3) == 150);
  // agrees with the max of the two named bounds wherever those apply
  for (long long n = 4; n <= 30; ++n)
    for (long long ell = 1; 2 * ell <= n; ++ell)
      for (long long k = 1; k <= ell; ++k) {
        if (k == ell && n == 2 * ell) continue;
        const BigInt m1 =
            one_value(Theorem::MAIN1, {{"n", n}, {"k", k}, {"ell", ell}});
        const BigInt m2 =
            one_value(Theorem::MAIN2, {{"n", n}, {"k", k}, {"ell", ell}});
        CHECK(gamma(n, k, ell) == (m1 >= m2 ? m1 : m2));
      }
  CHECK_THROWS_AS(gamma(4, 2, 3), std::domain_error);
  CHECK_THROWS_AS(gamma(5, 0, 3), std::domain_error);
}

TEST_CASE("comparison polynomial at sample points") {
  PhiEval e = phi(10, 2, 3, 6);
  CHECK(e.n == 10);
  CHECK(e.x == 6);
  CHECK(e.value == Rational(105));
  // at (k,ell) = (2,3) the polynomial at x = n-4 is n^2 + n - 5
  for (long long n = 5; n <= 40; ++n)
    CHECK(phi(n, 2, 3, n - 4).value == Rational(n * n + n - 5));
  // the x = n-5 evaluation in expanded form, with the symmetric binomial
  const BigInt lead = binom(19, 3) + binom(18, 3);
  const BigInt mid = binom(18, 4);
  CHECK(phi(20, 4, 6, 15).value ==
        Rational(lead * (mid + binom(15, 2)) - binom(15, 3) * mid));
  // both trailing binomials vanish for small x: only the leading product stays
  CHECK(phi(10, 3, 4, 1).value ==
        Rational((binom(9, 2) + binom(8, 2)) * binom(8, 2)));
  CHECK_THROWS_AS(phi(10, 2, 3, -1), std::domain_error);
  CHECK_THROWS_AS(phi(1, 1, 1, 0), std::domain_error);
}

TEST_CASE("adjacent-pair harmonic expression telescopes for large x") {
  CHECK(phi_second(20, 4, 6, 14) == Rational(-2550));
  // sum_{j} 1/((x-j)(x-j-1)) over j = 0..r-2 telescopes to 1/(x-r+1) - 1/x
  const auto telescoped = [](long long n, long long k, long long ell,
                             long long x) {
    const auto block = [&](long long r) {
      if (r < 2) return Rational(0);
      return Rational(binom(x, r)) *
             (Rational(1, x - r + 1) - Rational(1, x));
    };
    return Rational(binom(n - 1, k - 1) + binom(n - 2, k - 1)) *
               block(n - ell - 1) -
           Rational(binom(n - 2, ell - 2)) * block(k - 1);
  };
  for (long long n = 8; n <= 16; ++n)
    for (long long ell = 2; 2 * ell <= n; ++ell)
      for (long long k = 2; k <= ell; ++k)
        for (long long x = n - ell; x <= n - 4; ++x) {
          if (x < 1) continue;
          CHECK(phi_second(n, k, ell, x) == telescoped(n, k, ell, x));
        }
  // integer points below the top index are finite (cancelled evaluation)
  for (long long x = 0; x <= 6; ++x) CHECK_NOTHROW(phi_second(10, 2, 3, x));
  // at x = 0 only the j = 0 product survives: 17 * (2*3*4*5)/6! = 17/6
  CHECK(phi_second(10, 2, 3, 0) == Rational(17, 6));
}

TEST_CASE("named inequalities at pinned points") {
  CHECK(check_lemma(Lemma::INEQ21,
                    {{"n", 9}, {"k", 3}, {"ell", 4}, {"r", 1}, {"s", 2}, {"t", 1}}));
  // the two sides at that point are 13/81 and 6/16
  CHECK(binom(8, 2) - binom(6, 2) == 13);
  CHECK(binom(8, 3) + binom(6, 2) + binom(5, 2) == 81);
  CHECK(binom(5, 1) + binom(4, 0) == 6);
  CHECK(binom(5, 2) + binom(4, 2) == 16);

  CHECK(check_lemma(Lemma::NL1, {{"n", 10}, {"k", 2}, {"ell", 3}}));
  CHECK(check_lemma(Lemma::N5, {{"n", 20}, {"k", 4}, {"ell", 6}}));
  CHECK(check_lemma(Lemma::N4, {{"n", 9}, {"k", 2}, {"ell", 3}}));
  CHECK(check_lemma(Lemma::CLAIM525, {{"n", 10}, {"k", 4}, {"ell", 5}}));
  CHECK(check_lemma(Lemma::CLAIM526, {{"n", 10}, {"k", 4}, {"ell", 4}}));
  CHECK(check_lemma(Lemma::CLAIM526, {{"n", 10}, {"k", 3}, {"ell", 5}}));

  // the equal-level corner at small n is a genuine counterexample
  CHECK_FALSE(check_lemma(Lemma::CLAIM526, {{"n", 8}, {"k", 4}, {"ell", 4}}));
  CHECK_FALSE(check_lemma(Lemma::CLAIM526, {{"n", 9}, {"k", 4}, {"ell", 4}}));

  CHECK_THROWS_AS(check_lemma(Lemma::NL1, {{"n", 5}, {"k", 2}, {"ell", 3}}),
                  std::domain_error);
  CHECK_THROWS_AS(check_lemma(Lemma::N5, {{"n", 10}, {"k", 1}, {"ell", 1}}),
                  std::domain_error);
  CHECK_THROWS_AS(
      check_lemma(Lemma::INEQ21,
                  {{"n", 9}, {"k", 3}, {"ell", 4}, {"r", 3}, {"s", 2}, {"t", 0}}),
      std::domain_error);
}

TEST_CASE("size dichotomy holds on enumerable grounds") {
  CHECK(check_lemma(Lemma::MORS2_DICHOTOMY, {{"n", 5}, {"k", 2}, {"ell", 2}}));
  CHECK(check_lemma(Lemma::MORS2_DICHOTOMY, {{"n", 6}, {"k", 2}, {"ell", 3}}));
  CHECK(check_lemma(Lemma::MORS2_DICHOTOMY, {{"n", 6}, {"k", 3}, {"ell", 3}}));
  CHECK_THROWS_AS(check_lemma(Lemma::MORS2_DICHOTOMY,
                              {{"n", 9}, {"k", 3}, {"ell", 3}}),
                  std::domain_error);  // level too large to enumerate
  CHECK_THROWS_AS(check_lemma(Lemma::MORS2_DICHOTOMY,
                              {{"n", 4}, {"k", 2}, {"ell", 3}}),
                  std::domain_error);  // n < k + ell
}

TEST_CASE("sweeps cover hypothesis regions and report counterexamples") {
  std::ostringstream progress;
  auto all = run_lemma_sweeps(12, &progress);
  REQUIRE(all.size() == all_lemmas().size());
  for (const auto& s : all) {
    CHECK(s.points > 0);
    if (s.id == Lemma::CLAIM526) {
      REQUIRE(s.counterexamples.size() == 2);
      CHECK(s.counterexamples[0] ==
            Params{{"ell", 4}, {"k", 4}, {"n", 8}});
      CHECK(s.counterexamples[1] ==
            Params{{"ell", 4}, {"k", 4}, {"n", 9}});
      Json j = lemma_sweep_to_json(s);
      CHECK(j["holds"] == false);
      CHECK(j["counterexamples"].size() == 2);
    } else {
      CHECK(s.holds());
    }
  }
  CHECK(progress.str().find("INEQ21") != std::string::npos);

  // sweep verdicts match pointwise checks on a sample of the region
  auto ineq = sweep_lemma(Lemma::INEQ21, 10);
  CHECK(ineq.holds());
  for (long long n = 5; n <= 10; ++n)
    for (long long k = 2; 2 * k <= n; ++k)
      for (long long ell = k; ell <= n - k; ++ell)
        for (long long s = 2; s <= ell; ++s)
          CHECK(check_lemma(Lemma::INEQ21, {{"n", n},
                                            {"k", k},
                                            {"ell", ell},
                                            {"r", 1},
                                            {"s", s},
                                            {"t", 0}}));
}

TEST_CASE("fraction facts behind the scaling steps") {
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<long long> dist(1, 1'000'000'000);
  for (int trial = 0; trial < 1000; ++trial) {
    BigInt b = dist(rng);
    BigInt a = b + dist(rng);  // a > b > 0
    CHECK(Rational(b, a) < Rational(b + 1, a + 1));
    CHECK(b * (a + 1) < (b + 1) * a);

    // a mediant never exceeds the larger of its two fractions
    BigInt c = dist(rng), d = dist(rng);
    Rational left(b, a), right(d, c);
    Rational mediant(b + d, a + c);
    Rational hi = left < right ? right : left;
    Rational lo = left < right ? left : right;
    CHECK(mediant <= hi);
    CHECK(lo <= mediant);
    // hence any common strict upper bound also bounds the mediant
    Rational x = hi + Rational(1, dist(rng));
    CHECK(mediant < x);
  }
}
