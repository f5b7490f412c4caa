#include "xfam/sweeps.hpp"

#include <chrono>
#include <ostream>

namespace xfam {

namespace {

constexpr std::size_t kMaxCounterexamples = 1000;

// Dense binomial table; zero outside the triangle, so formula code can index
// shifted parameters directly.
struct Pascal {
  std::vector<std::vector<BigInt>> c;
  explicit Pascal(long long max_n) {
    c.assign(max_n + 1, {});
    for (long long m = 0; m <= max_n; ++m) {
      c[m].assign(max_n + 1, 0);
      c[m][0] = 1;
      for (long long j = 1; j <= m; ++j)
        c[m][j] = c[m - 1][j - 1] + (j <= m - 1 ? c[m - 1][j] : 0);
    }
  }
  const BigInt& operator()(long long top, long long under) const {
    static const BigInt zero = 0;
    if (under < 0 || top < under || top < 0) return zero;
    return c[top][under];
  }
};

struct Recorder {
  LemmaSweep& out;
  void point(bool holds, Params p) {
    ++out.points;
    if (!holds && out.counterexamples.size() < kMaxCounterexamples)
      out.counterexamples.push_back(std::move(p));
  }
};

void sweep_phi_lemma(Lemma id, const Pascal& C, long long max_n, Recorder& rec) {
  for (long long n = 2; n <= max_n; ++n) {
    for (long long ell = 1; 2 * ell <= n; ++ell) {
      for (long long k = 1; k <= ell; ++k) {
        long long x;
        switch (id) {
          case Lemma::N5:
            if (n < 5 || ell < 2) continue;
            x = n - 5;
            break;
          case Lemma::N4:
            if (k == ell || ell * ell > n) continue;
            x = n - 4;
            break;
          default:  // NL1
            if (k < 2 || k == ell) continue;
            x = n - ell - 1;
            break;
        }
        const BigInt lead = C(n - 1, k - 1) + C(n - 2, k - 1);
        const BigInt mid = C(n - 2, ell - 2);
        const BigInt phix =
            lead * (mid + C(x, n - ell - 1)) - mid * C(x, k - 1);
        const BigInt g1 = lead * mid;
        const BigInt g2 =
            (C(n - 1, k - 1) + 1) * (C(n - 1, ell - 1) - C(n - k - 1, ell - 1));
        const BigInt& gam = g1 >= g2 ? g1 : g2;
        rec.point(phix < gam, {{"n", n}, {"k", k}, {"ell", ell}});
      }
    }
  }
  // The loop bound 2*ell <= n also covers the ell^2 <= n region used by N4:
  // k < ell forces ell >= 2, and then ell^2 <= n implies 2*ell <= n.
}

void sweep_ineq21(const Pascal& C, long long max_n, Recorder& rec,
                  std::ostream* progress) {
  for (long long n = 3; n <= max_n; ++n) {
    if (progress && n % 20 == 0)
      *progress << "[check-lemmas] INEQ21: n = " << n << "/" << max_n << "\n";
    for (long long k = 2; 2 * k <= n; ++k) {
      for (long long ell = k; ell <= n - k; ++ell) {
        BigInt base = 0;  // sum_{i<=r} C(n-i, ell-1), grown with r
        for (long long r = 1; r <= k - 1; ++r) {
          base += C(n - r, ell - 1);
          for (long long s = 2; s <= ell; ++s) {
            const BigInt lhs_num = C(n - r, k - r) - C(n - r - s, k - r);
            BigInt lhs_den = base + C(n - r - s, ell - s);
            BigInt rhs_num = 0, rhs_den = 0;
            for (long long t = 0; t <= k - r - 1; ++t) {
              const BigInt& a = C(n - r - s - t - 1, k - r - t - 1);
              const BigInt& b = C(n - r - s - t - 1, ell - s);
              rhs_num += a;
              rhs_den += b;
              rec.point(lhs_num * rhs_den < rhs_num * lhs_den,
                        {{"n", n},
                         {"k", k},
                         {"ell", ell},
                         {"r", r},
                         {"s", s},
                         {"t", t}});
              lhs_den += b;
            }
          }
        }
      }
    }
  }
}

void sweep_claim525(const Pascal& C, long long max_n, Recorder& rec) {
  for (long long n = 10; n <= max_n; ++n)
    for (long long ell = 5; 2 * ell <= n; ++ell)
      for (long long k = 1; k <= ell; ++k) {
        if (5 * k <= 3 * ell) continue;
        const BigInt lhs = (C(n - 1, k - 1) + C(n - 2, k - 1)) *
                           (C(n - 2, ell - 2) + C(n - 5, ell - 4));
        const BigInt rhs =
            C(n - 1, k - 1) * (C(n - 1, ell - 1) - C(n - k - 1, ell - 1));
        rec.point(lhs < rhs, {{"n", n}, {"k", k}, {"ell", ell}});
      }
}

void sweep_claim526(const Pascal& C, long long max_n, Recorder& rec) {
  for (long long n = 5; n <= max_n; ++n)
    for (long long ell = 1; 2 * ell <= n; ++ell)
      for (long long k = 1; k <= ell; ++k) {
        if (!(ell == 4 || 5 * k <= 3 * ell)) continue;
        const BigInt lhs =
            (C(n - 1, k - 1) + C(n - 2, k - 1)) * C(n - 5, ell - 4);
        const BigInt rhs = C(n - 5, k - 1) * C(n - 2, ell - 2);
        rec.point(lhs < rhs, {{"n", n}, {"k", k}, {"ell", ell}});
      }
}

void sweep_dichotomy(long long max_n, Recorder& rec, std::ostream* progress) {
  // Feasible desk-scale grid: enumeration on the smaller level must stay
  // within the cap enforced by check_lemma.
  const long long top = std::min<long long>(max_n, 8);
  for (long long n = 2; n <= top; ++n)
    for (long long k = 1; 2 * k <= n; ++k) {
      if (binom(n, k) > 21) break;
      for (long long ell = k; ell <= n - k; ++ell) {
        if (binom(n, ell) > 128) continue;
        if (progress)
          *progress << "[check-lemmas] MORS2_DICHOTOMY: (" << n << "," << k
                    << "," << ell << ")\n";
        const bool ok = check_lemma(Lemma::MORS2_DICHOTOMY,
                                    {{"n", n}, {"k", k}, {"ell", ell}});
        rec.point(ok, {{"n", n}, {"k", k}, {"ell", ell}});
      }
    }
}

}  // namespace

LemmaSweep sweep_lemma(Lemma id, long long max_n, std::ostream* progress) {
  LemmaSweep out;
  out.id = id;
  out.max_n = max_n;
  Recorder rec{out};
  const auto start = std::chrono::steady_clock::now();
  if (progress)
    *progress << "[check-lemmas] " << lemma_name(id) << ": sweeping n <= "
              << max_n << "\n";
  if (id == Lemma::MORS2_DICHOTOMY) {
    sweep_dichotomy(max_n, rec, progress);
  } else {
    const Pascal C(std::max<long long>(max_n, 1));
    switch (id) {
      case Lemma::N5:
      case Lemma::N4:
      case Lemma::NL1: sweep_phi_lemma(id, C, max_n, rec); break;
      case Lemma::INEQ21: sweep_ineq21(C, max_n, rec, progress); break;
      case Lemma::CLAIM525: sweep_claim525(C, max_n, rec); break;
      case Lemma::CLAIM526: sweep_claim526(C, max_n, rec); break;
      default: break;
    }
  }
  if (progress) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    *progress << "[check-lemmas] " << lemma_name(id) << ": " << out.points
              << " points, " << out.counterexamples.size()
              << " counterexamples, " << ms << " ms\n";
  }
  return out;
}

std::vector<LemmaSweep> run_lemma_sweeps(long long max_n,
                                         std::ostream* progress) {
  std::vector<LemmaSweep> all;
  for (Lemma id : all_lemmas()) all.push_back(sweep_lemma(id, max_n, progress));
  return all;
}

Json lemma_sweep_to_json(const LemmaSweep& s) {
  Json j;
  j["lemma"] = lemma_name(s.id);
  j["max_n"] = s.max_n;
  j["points"] = s.points;
  j["holds"] = s.holds();
  Json arr = Json::array();
  for (const auto& p : s.counterexamples) {
    Json q = Json::object();
    for (const auto& [key, val] : p) q[key] = val;
    arr.push_back(q);
  }
  j["counterexamples"] = arr;
  return j;
}

}  // namespace xfam
