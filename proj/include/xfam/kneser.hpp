#pragma once

#include "xfam/setfamily.hpp"

namespace xfam {

// Disjointness bipartite graph: edge (i,j) iff left member i and right
// member j are disjoint.
struct BipartiteDisjointness {
  Family left;
  Family right;
  std::vector<std::vector<int>> adj;  // left index -> sorted right indices
};

BipartiteDisjointness build_disjointness(const Family& f, const Family& g);

std::vector<long long> left_degrees(const BipartiteDisjointness& g);
std::vector<long long> right_degrees(const BipartiteDisjointness& g);

// Each side has constant degree; a degree-0 side counts as regular.
bool is_regular(const BipartiteDisjointness& g);

// N(S) for S a set of left indices.
std::vector<int> neighborhood(const BipartiteDisjointness& g,
                              const std::vector<int>& s);

// |N(S)|/|S|; S must be nonempty.
Rational neighborhood_ratio(const BipartiteDisjointness& g,
                            const std::vector<int>& s);

}  // namespace xfam
