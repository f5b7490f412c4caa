#include "xfam/json_io.hpp"

#include <stdexcept>

namespace xfam {

Json bigint_to_json(const BigInt& v) { return v.str(); }

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

std::vector<int> mask_to_list(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < kMaxGround; ++i)
    if (m >> i & 1) out.push_back(i + 1);
  return out;
}

Mask list_to_mask(const std::vector<int>& elems, int n) {
  Mask m = 0;
  int prev = 0;
  for (int e : elems) {
    if (e <= prev) throw std::invalid_argument("set must be strictly increasing");
    if (e < 1 || e > n) throw std::invalid_argument("element outside [n]");
    m |= 1u << (e - 1);
    prev = e;
  }
  return m;
}

Json family_to_json(const Family& f) {
  Json j;
  j["n"] = f.n;
  j["k"] = f.k;
  Json sets = Json::array();
  for (Mask m : f.members) sets.push_back(mask_to_list(m));
  j["sets"] = std::move(sets);
  return j;
}

Family family_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  int k = j.at("k").get<int>();
  std::vector<Mask> members;
  for (const auto& s : j.at("sets"))
    members.push_back(list_to_mask(s.get<std::vector<int>>(), n));
  return make_family(n, k, std::move(members));
}

}  // namespace xfam
