#pragma once
// Exact product bounds for cross-intersecting pairs (A, B) with A at level k
// and B at level ell, plus the comparison polynomial phi and the named
// inequality checks used by the threshold analysis. All values are exact.
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xfam/exactmath.hpp"
#include "xfam/json_io.hpp"

namespace xfam {

// Named upper bounds. MORS2 is the two-threshold dichotomy and reports a pair
// of values; every other id reports a single product bound. PROP1..PROP5 are
// windowed bounds: they additionally carry the |A|-range they apply to.
enum class Theorem {
  EKR,
  PYBER1,
  PYBER2,
  MT,
  FKWX,
  MAIN1,
  MAIN2,
  GAMMA,
  MORS2,
  THEO3,
  CTHEO3,
  FK,
  PROP1,
  PROP2,
  PROP3,
  PROP4,
  PROP5,
};

using Params = std::map<std::string, long long>;

struct BoundReport {
  Theorem theorem;
  Params params;
  bool hypotheses_met = false;
  std::vector<std::string> violations;  // unmet hypotheses, human readable
  std::vector<BigInt> values;           // empty unless hypotheses_met
  // |A|-window for the windowed bounds; hi absent means unbounded above.
  std::optional<BigInt> window_lo, window_hi;
};

std::string theorem_name(Theorem t);
Theorem theorem_from_name(const std::string& name);
const std::vector<Theorem>& all_theorems();
// Positional parameter names bound() expects for each theorem, in CLI order.
const std::vector<std::string>& theorem_param_names(Theorem t);

// Validates the theorem's hypotheses and evaluates its bound. Hypothesis
// violations are reported in the result, not thrown; a missing parameter key
// throws std::invalid_argument.
BoundReport bound(Theorem t, const Params& params);
Json bound_report_to_json(const BoundReport& r);

// Larger of the two candidate products for nontrivial pairs:
//   (binom(n-1,k-1)+binom(n-2,k-1)) * binom(n-2,ell-2)   and
//   (binom(n-1,k-1)+1) * (binom(n-1,ell-1)-binom(n-k-1,ell-1)).
// Requires k, ell >= 1 and n >= k+ell; throws std::domain_error otherwise.
BigInt gamma(long long n, long long k, long long ell);

struct PhiEval {
  long long n = 0, k = 0, ell = 0;
  long long x = 0;
  Rational value;
};

// phi(x) = (binom(n-1,k-1)+binom(n-2,k-1)) * (binom(n-2,ell-2)+binom(x,n-ell-1))
//          - binom(n-2,ell-2) * binom(x,k-1), evaluated exactly at integer x.
// Requires n >= 2, k >= 1, ell >= 1, x >= 0.
PhiEval phi(long long n, long long k, long long ell, long long x);

// The adjacent-pair harmonic-sum expression attached to phi:
//   (binom(n-1,k-1)+binom(n-2,k-1)) * binom(x,n-ell-1) * S(x, n-ell-1)
//   - binom(n-2,ell-2) * binom(x,k-1) * S(x, k-1),
// where S(x,r) = sum_{j=0}^{r-2} 1/((x-j)(x-j-1)). Each product
// binom(x,r)/((x-j)(x-j-1)) is evaluated in cancelled polynomial form, so
// integer points where a lone denominator would vanish are well defined.
Rational phi_second(long long n, long long k, long long ell, long long x);

enum class Lemma { N5, N4, NL1, INEQ21, CLAIM525, CLAIM526, MORS2_DICHOTOMY };

std::string lemma_name(Lemma id);
Lemma lemma_from_name(const std::string& name);
const std::vector<Lemma>& all_lemmas();

// True iff the inequality named by `id` holds at these concrete parameters.
// Throws std::domain_error when the parameters fall outside the inequality's
// hypothesis region (callers sweep the region, they do not probe outside it).
// MORS2_DICHOTOMY is decided by exhaustive enumeration of maximal pairs and
// is limited to grounds with binom(n, min(k,ell)) <= 21.
bool check_lemma(Lemma id, const Params& params);

}  // namespace xfam
