#include "invjac/repspec_json.hpp"

#include <fstream>

#include "invjac/errors.hpp"
#include "invjac/rational.hpp"

namespace invjac {

RepSpec repspec_from_json(const nlohmann::json& j) {
    RepSpec rep;
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw Error("rep spec: expected object with 'n' and 'generators'");
    rep.n = j.at("n").get<int>();
    if (rep.n < 1) throw Error("rep spec: n must be >= 1");
    for (const auto& gj : j.at("generators")) {
        Generator g;
        g.name = gj.at("name").get<std::string>();
        g.role = role_from_string(gj.at("role").get<std::string>());
        const auto& rows = gj.at("matrix");
        if (static_cast<int>(rows.size()) != rep.n)
            throw Error("rep spec: generator " + g.name + ": matrix row count != n");
        g.matrix = QMatrix(rep.n, rep.n);
        for (int r = 0; r < rep.n; ++r) {
            const auto& row = rows.at(r);
            if (static_cast<int>(row.size()) != rep.n)
                throw Error("rep spec: generator " + g.name + ": matrix column count != n");
            for (int c = 0; c < rep.n; ++c) {
                try {
                    g.matrix.at(r, c) = parse_rational(row.at(c).get<std::string>());
                } catch (const std::invalid_argument& e) {
                    throw Error("rep spec: generator " + g.name + ": " + e.what());
                }
            }
        }
        rep.generators.push_back(std::move(g));
    }
    if (j.contains("sl2_triples")) {
        for (const auto& tj : j.at("sl2_triples")) {
            if (tj.size() != 3)
                throw Error("rep spec: sl2 triple must have three names");
            rep.sl2_triples.push_back({tj.at(0).get<std::string>(),
                                       tj.at(1).get<std::string>(),
                                       tj.at(2).get<std::string>()});
        }
    }
    return rep;
}

nlohmann::json repspec_to_json(const RepSpec& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : rep.generators) {
        nlohmann::json gj;
        gj["name"] = g.name;
        gj["role"] = role_to_string(g.role);
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < rep.n; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < rep.n; ++c)
                row.push_back(rational_to_string(g.matrix.at(r, c)));
            rows.push_back(std::move(row));
        }
        gj["matrix"] = std::move(rows);
        j["generators"].push_back(std::move(gj));
    }
    if (!rep.sl2_triples.empty()) {
        j["sl2_triples"] = nlohmann::json::array();
        for (const auto& t : rep.sl2_triples)
            j["sl2_triples"].push_back({t.raising, t.lowering, t.cartan});
    }
    return j;
}

RepSpec load_repspec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open rep spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("rep spec: invalid JSON in " + path + ": " + e.what());
    }
    return repspec_from_json(j);
}

} // namespace invjac
