#pragma once

#include <json.hpp>

#include "xorcount/synth.hpp"
#include "xorcount/xorform.hpp"

namespace xorcount {

using Json = nlohmann::ordered_json;

/// {"cycle_type": [...], "factors": [[i, j], ...]}
Json to_json(const XorProduct& x);
XorProduct xor_product_from_json(const Json& j);

/// {"permutation": [...], "factors": [[i, j], ...]}
Json to_json(const PermutedProduct& x);

/// {"poly", "n", "t", "t_max", "witness", "elapsed_ms"}; with
/// include_timing = false, elapsed_ms is written as 0 so output is
/// byte-reproducible.
Json to_json(const SearchReport& r, bool include_timing = true);

/// {"n", "steps": [[target, source], ...], "output": [...]}
Json to_json(const XorProgram& p);
XorProgram xor_program_from_json(const Json& j);

Json to_json(const ElementClass& c);

}  // namespace xorcount
