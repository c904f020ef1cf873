#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "hypspec/finite_model.hpp"

namespace hypspec {

// Model spec JSON schema:
// {
//   "name": "...", "degree": 6,
//   "generators": {"r": [1,2,3,4,5,0], "s": [0,5,4,3,2,1]},
//   "subgroups": {"K": [["r","s"]], "H": [["s"],["r","r","r"]],
//                 "P": [["r","r"],["s"]]},            // P, Theta optional
//   "operator": [{"word": ["r"], "weight": 1}],
//   "h_operator": [{"word": ["s"], "weight": 1}],     // optional
//   "characters": {"triv": {}, "chi_b": {"b": -1}}    // optional, values on
//                                                     //  generator words
// }
inline ModelSpec model_spec_from_json(const nlohmann::json& j) {
    ModelSpec ms;
    ms.name = j.value("name", "model");
    ms.degree = j.at("degree").get<int>();
    for (const auto& [name, arr] : j.at("generators").items()) {
        Perm p = arr.get<std::vector<int>>();
        ms.generators.emplace_back(name, std::move(p));
    }
    auto words = [](const nlohmann::json& arr) {
        std::vector<std::vector<std::string>> out;
        for (const auto& w : arr) out.push_back(w.get<std::vector<std::string>>());
        return out;
    };
    const auto& sub = j.at("subgroups");
    ms.K_words = words(sub.at("K"));
    ms.H_words = words(sub.at("H"));
    if (sub.contains("Theta")) ms.Theta_words = words(sub.at("Theta"));
    if (sub.contains("P")) ms.P_words = words(sub.at("P"));
    for (const auto& t : j.at("operator")) {
        WeightedWord ww;
        ww.word = t.at("word").get<std::vector<std::string>>();
        ww.weight = t.value("weight", 1);
        ms.omega_words.push_back(std::move(ww));
    }
    if (j.contains("h_operator"))
        for (const auto& t : j.at("h_operator")) {
            WeightedWord ww;
            ww.word = t.at("word").get<std::vector<std::string>>();
            ww.weight = t.value("weight", 1);
            ms.h_omega_words.push_back(std::move(ww));
        }
    if (j.contains("characters"))
        for (const auto& [cname, cmap] : j.at("characters").items()) {
            std::map<std::string, rational> vals;
            for (const auto& [gw, v] : cmap.items())
                vals[gw] = rational(v.get<long long>());
            ms.characters[cname] = std::move(vals);
        }
    if (j.contains("max_order")) ms.max_order = j.at("max_order").get<size_t>();
    return ms;
}

inline ModelSpec load_model_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw precondition_error("model file readable", "'" + path + "'");
    nlohmann::json j;
    in >> j;
    return model_spec_from_json(j);
}

} // namespace hypspec
