#pragma once
// Full-region verification sweeps for the named inequalities: every
// hypothesis-satisfying parameter point with n <= max_n is checked with exact
// arithmetic and counterexamples are collected rather than asserted away.
#include <iosfwd>
#include <vector>

#include "xfam/bounds.hpp"

namespace xfam {

struct LemmaSweep {
  Lemma id;
  long long max_n = 0;
  unsigned long long points = 0;  // hypothesis-satisfying points checked
  std::vector<Params> counterexamples;
  bool holds() const { return counterexamples.empty(); }
};

// Sweeps one inequality over its whole hypothesis region with n <= max_n.
// The dichotomy check enumerates families, so its grid is additionally
// clipped to grounds within the enumeration caps. Progress notes are written
// to *progress when non-null.
LemmaSweep sweep_lemma(Lemma id, long long max_n,
                       std::ostream* progress = nullptr);

// All sweeps, in declaration order of the Lemma enum.
std::vector<LemmaSweep> run_lemma_sweeps(long long max_n,
                                         std::ostream* progress = nullptr);

Json lemma_sweep_to_json(const LemmaSweep& s);

}  // namespace xfam
