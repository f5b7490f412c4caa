#pragma once

#include "xfam/setfamily.hpp"

#include "json.hpp"

namespace xfam {

// ordered_json keeps insertion order so envelopes serialize byte-identically
using Json = nlohmann::ordered_json;

// BigInt values cross the JSON boundary as decimal strings; they routinely
// exceed 2^53.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

std::vector<int> mask_to_list(Mask m);
Mask list_to_mask(const std::vector<int>& elems, int n);

// {"n": int, "k": int, "sets": [[int,...],...]}, inner lists strictly
// increasing, 1-based.
Json family_to_json(const Family& f);
Family family_from_json(const Json& j);

}  // namespace xfam
