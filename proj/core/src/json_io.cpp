#include "nestwork/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace nestwork {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse(std::string_view text, const char* what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument(std::string(what) + ": malformed JSON");
    return j;
}

}  // namespace

std::string to_json_string(const Diagram& d) {
    ordered_json j;
    j["n"] = d.vertex_count();
    auto arcs = ordered_json::array();
    for (const Arc& a : d.arcs()) arcs.push_back({a.left, a.right});
    j["arcs"] = std::move(arcs);
    return j.dump();
}

Diagram diagram_from_json(std::string_view text) {
    const ordered_json j = parse(text, "diagram_from_json");
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs") ||
        !j["n"].is_number_integer() || !j["arcs"].is_array())
        throw std::invalid_argument(
            "diagram_from_json: expected {\"n\": <int>, \"arcs\": [[i,j],...]}");
    std::vector<Arc> arcs;
    for (const auto& pair : j["arcs"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw std::invalid_argument("diagram_from_json: each arc must be a pair [i,j]");
        arcs.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return Diagram(j["n"].get<int>(), std::move(arcs));
}

std::string to_json_string(const Blocks& b) {
    ordered_json j = ordered_json::array();
    for (const auto& block : b.blocks()) j.push_back(block);
    return j.dump();
}

Blocks blocks_from_json(std::string_view text) {
    const ordered_json j = parse(text, "blocks_from_json");
    if (!j.is_array())
        throw std::invalid_argument("blocks_from_json: expected a list of blocks");
    std::vector<std::vector<int>> blocks;
    for (const auto& block : j) {
        if (!block.is_array())
            throw std::invalid_argument("blocks_from_json: each block must be a list");
        blocks.push_back(block.get<std::vector<int>>());
    }
    return Blocks(std::move(blocks));
}

std::string to_json_string(const IntervalProfile& p) {
    ordered_json j;
    j["blocks"] = p.blocks();
    j["flat"] = p.flatten().parts();
    j["total"] = p.total();
    return j.dump();
}

IntervalProfile profile_from_json(std::string_view text) {
    const ordered_json j = parse(text, "profile_from_json");
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
        throw std::invalid_argument("profile_from_json: expected {\"blocks\": [[...],...]}");
    std::vector<std::vector<int>> blocks;
    for (const auto& block : j["blocks"]) {
        if (!block.is_array())
            throw std::invalid_argument("profile_from_json: each block must be a list");
        blocks.push_back(block.get<std::vector<int>>());
    }
    return IntervalProfile(std::move(blocks));
}

}  // namespace nestwork
