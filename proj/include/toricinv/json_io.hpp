#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "toricinv/cone.hpp"

namespace toricinv {

using json = nlohmann::json;

struct NamedCone {
    std::string name;
    IntMatrix generators;
};

// Cone input format shared with the CLI:
//   {"name": string, "dim": int, "generators": [[int,...],...]}
inline NamedCone cone_from_json(const json& j) {
    NamedCone nc;
    nc.name = j.value("name", "cone");
    if (!j.contains("dim") || !j.contains("generators"))
        throw Error("cone JSON needs 'dim' and 'generators'");
    std::size_t d = j.at("dim").get<std::size_t>();
    const auto& rows = j.at("generators");
    if (!rows.is_array() || rows.empty()) throw Error("cone JSON generators must be a nonempty array");
    IntMatrix m(rows.size(), d);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != d) throw Error("generator row length does not match dim");
        for (std::size_t j2 = 0; j2 < d; ++j2) m(i, j2) = Int(rows[i][j2].get<long long>());
    }
    nc.generators = m;
    return nc;
}

inline NamedCone load_cone_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open cone file: " + path);
    json j;
    in >> j;
    return cone_from_json(j);
}

inline json cone_to_json(const std::string& name, const IntMatrix& gens) {
    json j;
    j["name"] = name;
    j["dim"] = gens.cols();
    json rows = json::array();
    for (std::size_t i = 0; i < gens.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < gens.cols(); ++c)
            row.push_back(gens(i, c).convert_to<long long>());
        rows.push_back(row);
    }
    j["generators"] = rows;
    return j;
}

}  // namespace toricinv
