#include "nsg/json_io.hpp"

#include <stdexcept>

namespace nsg {
namespace {

std::vector<int> int_list(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key \"") + key + "\"");
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array");
    std::vector<int> out;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw std::invalid_argument(std::string("\"") + key + "\" must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const NumericalSet& t) { return {{"gaps", t.gaps()}}; }

nlohmann::json to_json(const Partition& p) { return {{"parts", p.parts()}}; }

nlohmann::json to_json(const VoidPoset& poset) {
    auto pairs = [](const std::vector<std::pair<int, int>>& edges) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto [x, y] : edges) arr.push_back({x, y});
        return arr;
    };
    return {{"void", poset.elements()}, {"relations", pairs(poset.relations())}, {"hasse", pairs(poset.hasse_edges())}};
}

nlohmann::json to_json(const AntiAtomSolution& sol) {
    return {{"semigroup", to_json(static_cast<const NumericalSet&>(sol.semigroup))},
            {"pa", sol.pa},
            {"sizes", sol.sizes()},
            {"lambda_minimal", sol.lambda_minimal},
            {"witness_ideal", sol.witness().ideal.members}};
}

NumericalSet numerical_set_from_json(const nlohmann::json& j) {
    if (j.is_object() && j.contains("generators")) return semigroup_from_json(j);
    return NumericalSet::from_gaps(int_list(j, "gaps"));
}

NumericalSemigroup semigroup_from_json(const nlohmann::json& j) {
    if (j.is_object() && j.contains("generators")) return NumericalSemigroup::from_generators(int_list(j, "generators"));
    return NumericalSemigroup::from_gaps(int_list(j, "gaps"));
}

Partition partition_from_json(const nlohmann::json& j) { return Partition(int_list(j, "parts")); }

}  // namespace nsg
