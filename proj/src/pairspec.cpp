#include "symcoh/pairspec.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace symcoh {

using nlohmann::json;

SatakeSpec parse_pair_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("pair spec: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("pair spec: not a JSON object");

    SatakeSpec spec;
    spec.name = doc.value("name", std::string("unnamed"));
    const std::string family = doc.at("family").get<std::string>();
    const int rank = doc.at("rank").get<int>();
    if (family == "A1xA1") {
        if (rank != 2) throw std::invalid_argument("pair spec: A1xA1 has rank 2");
        spec.rs = RootSystem::build_from_cartan("A1xA1", {{2, 0}, {0, 2}});
    } else if (family.size() == 1) {
        spec.rs = RootSystem::build(family[0], rank);
    } else {
        throw std::invalid_argument("pair spec: unknown family '" + family + "'");
    }

    spec.thetabar.resize(rank);
    for (int i = 0; i < rank; ++i) spec.thetabar[i] = i;
    if (doc.contains("delta0"))
        for (const auto& d : doc.at("delta0")) {
            int idx = d.get<int>();
            if (idx < 1 || idx > rank) throw std::invalid_argument("pair spec: delta0 out of range");
            spec.delta0.push_back(idx - 1);
        }
    if (doc.contains("thetabar"))
        for (const auto& p : doc.at("thetabar")) {
            if (!p.is_array() || p.size() != 2)
                throw std::invalid_argument("pair spec: thetabar entries are pairs");
            int a = p[0].get<int>(), b = p[1].get<int>();
            if (a < 1 || a > rank || b < 1 || b > rank)
                throw std::invalid_argument("pair spec: thetabar index out of range");
            spec.thetabar[a - 1] = b - 1;
            spec.thetabar[b - 1] = a - 1;
        }
    return spec;
}

std::string pair_spec_to_json(const SatakeSpec& spec) {
    nlohmann::ordered_json doc;
    doc["name"] = spec.name;
    doc["family"] = spec.rs.family() == 'X' ? spec.rs.label() : std::string(1, spec.rs.family());
    doc["rank"] = spec.rs.rank();
    auto d0 = nlohmann::ordered_json::array();
    for (int d : spec.delta0) d0.push_back(d + 1);
    doc["delta0"] = d0;
    auto tb = nlohmann::ordered_json::array();
    for (int i = 0; i < spec.rs.rank(); ++i)
        if (spec.thetabar[i] > i) tb.push_back({i + 1, spec.thetabar[i] + 1});
    doc["thetabar"] = tb;
    return doc.dump(2) + "\n";
}

SymmetricPair load_pair_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open pair file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return build_pair(parse_pair_spec(buf.str()));
}

SymmetricPair resolve_pair(const std::string& name, int n) {
    for (const auto& entry : catalog_entries()) {
        if (entry.name != name) continue;
        if (entry.parameterized && n == 0)
            throw std::invalid_argument("pair '" + name + "' needs a parameter n");
        return catalog(name, n);
    }
    namespace fs = std::filesystem;
    if (fs::exists(name)) return load_pair_file(name);
    if (const char* env = std::getenv("SYMCOH_PAIR_PATH")) {
        std::string dirs(env);
        size_t start = 0;
        while (start <= dirs.size()) {
            size_t end = dirs.find(':', start);
            std::string dir = dirs.substr(start, end == std::string::npos ? end : end - start);
            if (!dir.empty()) {
                fs::path candidate = fs::path(dir) / (name + ".pair");
                if (fs::exists(candidate)) return load_pair_file(candidate.string());
            }
            if (end == std::string::npos) break;
            start = end + 1;
        }
    }
    throw std::invalid_argument("unknown pair '" + name + "'");
}

}  // namespace symcoh
