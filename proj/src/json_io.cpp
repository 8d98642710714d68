// json_io.cpp

#include "hhci/json_io.hpp"

#include <fstream>

namespace hhci {

Presentation presentation_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("presentation file must hold a JSON object", 0);
    if (!j.contains("ring") || !j["ring"].is_string())
        throw ParseError("missing string field 'ring'", 0);
    if (!j.contains("vars") || !j["vars"].is_array())
        throw ParseError("missing array field 'vars'", 0);
    if (!j.contains("relations") || !j["relations"].is_array())
        throw ParseError("missing array field 'relations'", 0);
    CoeffRing ring = CoeffRing::from_text(j["ring"].get<std::string>());
    std::vector<std::string> vars;
    for (const auto& v : j["vars"]) {
        if (!v.is_string()) throw ParseError("'vars' must contain strings", 0);
        vars.push_back(v.get<std::string>());
    }
    std::vector<Poly> rels;
    for (const auto& r : j["relations"]) {
        if (!r.is_string()) throw ParseError("'relations' must contain strings", 0);
        rels.push_back(parse_poly(r.get<std::string>(), vars, ring));
    }
    bool assume = j.value("assume_regular", false);
    return Presentation(ring, std::move(vars), std::move(rels), assume);
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'", 0);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    return presentation_from_json(j);
}

Json to_json(const ModuleInvariants& inv) {
    Json j;
    j["free_rank"] = inv.free_rank;
    Json tor = Json::array();
    for (const Int& t : inv.torsion) tor.push_back(t.str());
    j["torsion"] = tor;
    return j;
}

Json graded_to_json(const GradedModule& gm, int max_degree) {
    Json arr = Json::array();
    for (int p = 0; p <= max_degree; ++p) {
        Json row = to_json(gm.at(p));
        Json entry;
        entry["degree"] = p;
        entry["free_rank"] = row["free_rank"];
        entry["torsion"] = row["torsion"];
        arr.push_back(entry);
    }
    return arr;
}

Json hodge_to_json(const HodgeTable& table) {
    Json arr = Json::array();
    for (const auto& [ij, inv] : table.entries) {
        Json entry;
        entry["t_weight"] = ij.first;
        entry["s_weight"] = ij.second;
        entry["degree"] = ij.first + 2 * ij.second;
        Json row = to_json(inv);
        entry["free_rank"] = row["free_rank"];
        entry["torsion"] = row["torsion"];
        arr.push_back(entry);
    }
    return arr;
}

}  // namespace hhci
