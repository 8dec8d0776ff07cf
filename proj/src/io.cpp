#include "posat/io.hpp"

#include <stdexcept>

namespace posat {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        throw std::invalid_argument(std::string("document missing field \"") + key + "\"");
    return doc.at(key);
}

int require_int(const json& doc, const char* key) {
    const json& v = require(doc, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

json set_to_list(Mask m) { return json(mask_elements(m)); }

Mask set_from_list(const json& v) {
    if (!v.is_array()) throw std::invalid_argument("a set must be a list of elements");
    std::vector<int> elems;
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw std::invalid_argument("set elements must be integers");
        elems.push_back(e.get<int>());
    }
    return mask_from_elements(elems);
}

}  // namespace

json poset_to_json(const Poset& p, const std::string& name) {
    json doc;
    doc["elements"] = p.size();
    json lt = json::array();
    for (auto [i, j] : p.cover_pairs()) lt.push_back(json::array({i, j}));
    doc["lt"] = lt;
    if (!name.empty()) doc["name"] = name;
    return doc;
}

Poset poset_from_json(const json& doc) {
    int elements = require_int(doc, "elements");
    const json& lt = require(doc, "lt");
    if (!lt.is_array()) throw std::invalid_argument("\"lt\" must be a list of pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : lt) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("\"lt\" entries must be [i, j] pairs");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
        if (pairs.back().first < 0 || pairs.back().first >= elements ||
            pairs.back().second < 0 || pairs.back().second >= elements)
            throw std::invalid_argument("\"lt\" pair out of range");
    }
    return make_poset(elements, pairs);
}

json family_to_json(const SetFamily& f) {
    json doc;
    doc["n"] = f.ground();
    json sets = json::array();
    for (Mask m : f.members()) sets.push_back(set_to_list(m));
    doc["sets"] = sets;
    return doc;
}

SetFamily family_from_json(const json& doc) {
    int n = require_int(doc, "n");
    const json& sets = require(doc, "sets");
    if (!sets.is_array()) throw std::invalid_argument("\"sets\" must be a list of sets");
    std::vector<Mask> members;
    for (const auto& s : sets) members.push_back(set_from_list(s));
    if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground size out of range");
    return SetFamily(n, std::move(members));
}

json embedding_to_json(const Embedding& e) {
    json img = json::array();
    for (Mask m : e.image) img.push_back(set_to_list(m));
    return img;
}

Embedding embedding_from_json(const json& doc) {
    if (!doc.is_array()) throw std::invalid_argument("an embedding must be a list of sets");
    Embedding e;
    for (const auto& s : doc) e.image.push_back(set_from_list(s));
    return e;
}

json report_to_json(const ConstructionReport& r) {
    json doc;
    doc["kind"] = r.kind;
    if (r.k) doc["k"] = *r.k;
    if (r.h) doc["h"] = *r.h;
    if (r.h1) doc["h1"] = *r.h1;
    if (r.h2) doc["h2"] = *r.h2;
    if (!r.layer_params.empty()) {
        json lp = json::array();
        for (const auto& ap : r.layer_params)
            lp.push_back(json{{"h", ap.h}, {"patched", ap.patched}, {"w", ap.w}, {"x", ap.x}});
        doc["layer_params"] = lp;
    }
    if (r.d) doc["d"] = *r.d;
    if (r.lambda) doc["lambda"] = *r.lambda;
    doc["patched"] = r.patched;
    if (r.size_bound) doc["size_bound"] = *r.size_bound;
    doc["verification"] = r.verification;
    return doc;
}

json schedule_to_json(const PercolationSchedule& s) {
    json doc;
    doc["n"] = s.n;
    doc["poset"] = poset_to_json(s.poset);
    doc["initial"] = family_to_json(s.initial);
    json steps = json::array();
    for (const auto& st : s.steps)
        steps.push_back(json{{"add", set_to_list(st.added)},
                             {"witness", embedding_to_json(st.witness)}});
    doc["steps"] = steps;
    return doc;
}

PercolationSchedule schedule_from_json(const json& doc) {
    PercolationSchedule s;
    s.n = require_int(doc, "n");
    s.poset = poset_from_json(require(doc, "poset"));
    s.initial = family_from_json(require(doc, "initial"));
    if (s.initial.ground() != s.n)
        throw std::invalid_argument("schedule initial family ground mismatch");
    const json& steps = require(doc, "steps");
    if (!steps.is_array()) throw std::invalid_argument("\"steps\" must be a list");
    for (const auto& st : steps) {
        PercStep step;
        step.added = set_from_list(require(st, "add"));
        step.witness = embedding_from_json(require(st, "witness"));
        s.steps.push_back(std::move(step));
    }
    return s;
}

}  // namespace posat
