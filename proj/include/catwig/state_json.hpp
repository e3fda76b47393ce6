// State JSON schema:
//   {"terms":[{"coeff":{"re":r,"im":i},"amp":{"re":r,"im":i}}, ...]}
//   {"cat":{"aL":C,"da":C}}
//   {"cat_diff":{"a0":C,"a00":C,"da0":C,"da00":C}}
//   {"cat_sum":{"a0":C,"a00":C,"da0":C,"da00":C}}
// where C is either {"re":r,"im":i} or a bare number (purely real).

#pragma once

#include <string>

#include "catwig/types.hpp"

namespace catwig {

// Both throw std::invalid_argument on malformed input.
SuperpositionState state_from_json_text(const std::string& text);
SuperpositionState state_from_json_file(const std::string& path);

}  // namespace catwig
