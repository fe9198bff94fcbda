#ifndef DERANGE_JSON_IO_HPP
#define DERANGE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "derange/existence.hpp"
#include "derange/permutation.hpp"
#include "derange/realize.hpp"

namespace derange {

// A permutation serializes as the bare succ array.
nlohmann::json perm_to_json(const GraphPermutation& p);
// Accepts either the bare array or an object carrying a "succ" array.
GraphPermutation perm_from_json(const nlohmann::json& j);

nlohmann::json hall_report_to_json(const HallReport& r);

// One result line of the persisted classification format:
//   {"graph":"rect:4x6","partition":"6+6+4+4+2+2","status":"realized","succ":[...]}
// with "nodes" instead of "succ" for unrealizable/cap rows.
nlohmann::json realization_record(const std::string& graph_label, const CycleType& partition,
                                  const RealizationResult& r);

}  // namespace derange

#endif
