#include "nfb/monoid_io.hpp"

#include <fstream>
#include <sstream>

namespace nfb {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const FiniteMonoid& M) {
    ordered_json j;
    j["name"] = M.name;
    j["order"] = M.order;
    j["identity"] = M.identity ? json(*M.identity) : json(nullptr);
    j["zero"] = M.zero ? json(*M.zero) : json(nullptr);
    j["names"] = M.names;
    ordered_json rows = ordered_json::array();
    for (std::size_t a = 0; a < M.order; ++a) {
        ordered_json row = ordered_json::array();
        for (std::size_t b = 0; b < M.order; ++b) row.push_back(M.table[a * M.order + b]);
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    if (!M.generators.empty()) j["generators"] = M.generators;
    if (!M.grades.empty()) {
        ordered_json gs = ordered_json::array();
        for (auto g : M.grades)
            gs.push_back(g == kGradeZero ? ordered_json(nullptr) : ordered_json(g));
        j["grades"] = std::move(gs);
    }
    if (M.jm_theory_level) j["jm_theory_level"] = *M.jm_theory_level;
    if (!M.factors.empty()) {
        ordered_json fs = ordered_json::array();
        for (const auto& f : M.factors) fs.push_back(to_json(*f));
        j["factors"] = std::move(fs);
    }
    return j;
}

FiniteMonoid monoid_from_json(const json& j) {
    auto need = [&](const char* key) -> const json& {
        auto it = j.find(key);
        if (it == j.end()) throw ParseError(std::string("monoid json: missing key '") + key + "'");
        return *it;
    };
    FiniteMonoid M;
    try {
        M.name = need("name").get<std::string>();
        M.order = need("order").get<std::size_t>();
        const json& id = need("identity");
        if (!id.is_null()) M.identity = id.get<Elem>();
        const json& z = need("zero");
        if (!z.is_null()) M.zero = z.get<Elem>();
        M.names = need("names").get<std::vector<std::string>>();
        const json& rows = need("table");
        if (!rows.is_array() || rows.size() != M.order)
            throw ParseError("monoid json: table must have one row per element");
        M.table.reserve(M.order * M.order);
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != M.order)
                throw ParseError("monoid json: table rows must have order entries");
            for (const auto& v : row) M.table.push_back(v.get<Elem>());
        }
        if (j.contains("generators"))
            M.generators = j["generators"].get<std::map<std::string, Elem>>();
        if (j.contains("grades")) {
            for (const auto& g : j["grades"])
                M.grades.push_back(g.is_null() ? kGradeZero : g.get<std::uint32_t>());
        }
        if (j.contains("jm_theory_level"))
            M.jm_theory_level = j["jm_theory_level"].get<std::size_t>();
        if (j.contains("factors")) {
            const json& fs = j["factors"];
            if (!fs.is_array() || fs.empty())
                throw ParseError("monoid json: factors must be a non-empty array");
            for (const auto& fj : fs)
                M.factors.push_back(std::make_shared<FiniteMonoid>(monoid_from_json(fj)));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("monoid json: ") + e.what());
    }
    validate(M); // includes the factor/table consistency cross-check
    return M;
}

void save_monoid(const FiniteMonoid& M, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << to_json(M).dump(2) << '\n';
    if (!out) throw IoError("write to '" + path + "' failed");
}

FiniteMonoid load_monoid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("'") + path + "': " + e.what());
    }
    return monoid_from_json(j);
}

} // namespace nfb
