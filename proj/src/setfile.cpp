#include "bkg/setfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bkg/errors.hpp"

namespace bkg {

namespace {

using nlohmann::json;

GroupSpec group_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "integers") {
        return GroupSpec::integers();
    }
    if (j.is_object() && j.contains("cyclic")) {
        return GroupSpec::cyclic(j.at("cyclic").get<u64>());
    }
    throw InvalidInputError(R"(group must be "integers" or {"cyclic": m})");
}

}  // namespace

CandidateSet read_set_json(std::istream& in, const SetFileOverrides& o) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("set file is not valid JSON: ") +
                                e.what());
    }
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("g") ||
        !doc.contains("group") || !doc.contains("elements")) {
        throw InvalidInputError("set file needs k, g, group and elements");
    }
    unsigned k = o.k.value_or(doc.at("k").get<unsigned>());
    u64 g = o.g.value_or(doc.at("g").get<u64>());
    GroupSpec group = o.cyclic_modulus ? GroupSpec::cyclic(*o.cyclic_modulus)
                                       : group_from_json(doc.at("group"));
    std::vector<i64> elements = doc.at("elements").get<std::vector<i64>>();
    return CandidateSet(std::move(elements), k, g, group);
}

CandidateSet read_set_text(std::istream& in, const SetFileOverrides& o) {
    if (!o.k || !o.g) {
        throw InvalidInputError("plain-text sets need explicit --k and --g");
    }
    std::vector<i64> elements;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        elements.push_back(std::stoll(line));
    }
    GroupSpec group = o.cyclic_modulus ? GroupSpec::cyclic(*o.cyclic_modulus)
                                       : GroupSpec::integers();
    return CandidateSet(std::move(elements), *o.k, *o.g, group);
}

CandidateSet read_set_file(const std::string& path, const SetFileOverrides& o) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open set file: " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        return read_set_json(in, o);
    }
    return read_set_text(in, o);
}

std::string set_to_json(const CandidateSet& set) {
    json doc;
    doc["k"] = set.k;
    doc["g"] = set.g;
    if (set.group.is_cyclic()) {
        doc["group"] = json{{"cyclic", set.group.modulus}};
    } else {
        doc["group"] = "integers";
    }
    doc["elements"] = set.elements;
    return doc.dump(2);
}

void write_set_file(const std::string& path, const CandidateSet& set) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write set file: " + path);
    out << set_to_json(set) << '\n';
}

}  // namespace bkg
