#include "derange/json_io.hpp"

namespace derange {

nlohmann::json perm_to_json(const GraphPermutation& p) { return nlohmann::json(p.succ); }

GraphPermutation perm_from_json(const nlohmann::json& j) {
    const nlohmann::json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("succ")) throw std::invalid_argument("witness object lacks 'succ'");
        arr = &j.at("succ");
    }
    if (!arr->is_array()) throw std::invalid_argument("witness must be an array of successors");
    GraphPermutation p;
    p.succ = arr->get<std::vector<VertexId>>();
    return p;
}

nlohmann::json hall_report_to_json(const HallReport& r) {
    nlohmann::json j;
    j["holds"] = r.holds;
    j["method"] = hall_method_name(r.method);
    if (!r.holds) j["witness"] = r.witness;
    return j;
}

nlohmann::json realization_record(const std::string& graph_label, const CycleType& partition,
                                  const RealizationResult& r) {
    nlohmann::json j;
    j["graph"] = graph_label;
    j["partition"] = cycle_type_string(partition);
    j["status"] = status_name(r.status);
    if (r.status == RealizationResult::Status::Realized)
        j["succ"] = r.witness.succ;
    else
        j["nodes"] = r.nodes;
    return j;
}

}  // namespace derange
