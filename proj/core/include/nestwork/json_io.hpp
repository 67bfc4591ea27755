#pragma once

#include <string>
#include <string_view>

#include "nestwork/bijections.hpp"
#include "nestwork/diagram.hpp"

namespace nestwork {

// Canonical JSON forms. Identical values serialize byte-identically.
//
//   Diagram          {"n":8,"arcs":[[1,5],[2,3],[3,4],[4,7],[6,8]]}
//   Blocks           [[1,5],[2,3,4,7],[6,8]]
//   IntervalProfile  {"blocks":[[0,2,0,0],[1,0,1],[1,0],[1]],
//                     "flat":[0,2,0,0,1,0,1,1,0,1],"total":6}

std::string to_json_string(const Diagram& d);
Diagram diagram_from_json(std::string_view text);

std::string to_json_string(const Blocks& b);
Blocks blocks_from_json(std::string_view text);

std::string to_json_string(const IntervalProfile& p);
// Accepts either the full object or just {"blocks": [...]}.
IntervalProfile profile_from_json(std::string_view text);

}  // namespace nestwork
