#include "xfam/kneser.hpp"

#include <algorithm>
#include <stdexcept>

namespace xfam {

BipartiteDisjointness build_disjointness(const Family& f, const Family& g) {
  if (f.n != g.n)
    throw std::invalid_argument("disjointness graph: mismatched ground sets");
  BipartiteDisjointness out{f, g, {}};
  out.adj.resize(f.members.size());
  for (size_t i = 0; i < f.members.size(); ++i)
    for (size_t j = 0; j < g.members.size(); ++j)
      if ((f.members[i] & g.members[j]) == 0)
        out.adj[i].push_back(static_cast<int>(j));
  return out;
}

std::vector<long long> left_degrees(const BipartiteDisjointness& g) {
  std::vector<long long> d;
  d.reserve(g.adj.size());
  for (const auto& row : g.adj) d.push_back(row.size());
  return d;
}

std::vector<long long> right_degrees(const BipartiteDisjointness& g) {
  std::vector<long long> d(g.right.members.size(), 0);
  for (const auto& row : g.adj)
    for (int j : row) ++d[j];
  return d;
}

namespace {

bool constant(const std::vector<long long>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) ==
         v.end();
}

}  // namespace

bool is_regular(const BipartiteDisjointness& g) {
  return constant(left_degrees(g)) && constant(right_degrees(g));
}

std::vector<int> neighborhood(const BipartiteDisjointness& g,
                              const std::vector<int>& s) {
  std::vector<char> seen(g.right.members.size(), 0);
  for (int i : s) {
    if (i < 0 || i >= static_cast<int>(g.adj.size()))
      throw std::out_of_range("neighborhood: left index out of range");
    for (int j : g.adj[i]) seen[j] = 1;
  }
  std::vector<int> out;
  for (size_t j = 0; j < seen.size(); ++j)
    if (seen[j]) out.push_back(static_cast<int>(j));
  return out;
}

Rational neighborhood_ratio(const BipartiteDisjointness& g,
                            const std::vector<int>& s) {
  if (s.empty())
    throw std::invalid_argument("neighborhood_ratio: empty vertex set");
  return Rational(static_cast<long long>(neighborhood(g, s).size()),
                  static_cast<long long>(s.size()));
}

}  // namespace xfam
