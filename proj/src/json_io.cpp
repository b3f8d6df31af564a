#include "biclab/json_io.hpp"

#include "biclab/graph6.hpp"

namespace biclab {

using nlohmann::json;

namespace {

json check_to_json(const CheckResult& r) {
    json j{{"verdict", verdict_name(r.verdict)}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

}  // namespace

json to_json(const Graph& g, const ObstructionReport& report) {
    json checks = json::object();
    for (const auto& r : report.checks) checks[std::string(check_name(r.check))] = check_to_json(r);
    return json{
        {"schema", kCheckSchema},
        {"graph", write_graph6(g)},
        {"order", g.order()},
        {"checks", checks},
        {"cannot_be_biclique_graph", report.cannot_be_biclique_graph()},
        {"conventions", "K1 and K2 count as 2-connected"},
    };
}

json to_json(const CatalogueEntry& e) {
    json j{
        {"schema", kCatalogueSchema},
        {"graph", write_graph6(e.graph)},
        {"order", e.graph.order()},
        {"classification", classification_name(e.classification)},
        {"max_h_order", e.max_h_order},
    };
    if (e.preimage) j["preimage"] = write_graph6(*e.preimage);
    if (e.obstruction) {
        j["obstruction"] = check_name(e.obstruction->check);
        j["witness"] = e.obstruction->witness;
        if (!e.obstruction->detail.empty()) j["detail"] = e.obstruction->detail;
    }
    json firing = json::array();
    for (Check c : e.firing) firing.push_back(check_name(c));
    j["firing"] = firing;
    return j;
}

CatalogueEntry catalogue_entry_from_json(const json& j) {
    if (j.value("schema", "") != kCatalogueSchema) throw std::invalid_argument("not a catalogue record");
    CatalogueEntry e;
    e.graph = parse_graph6(j.at("graph").get<std::string>());
    const auto cls = classification_from_name(j.at("classification").get<std::string>());
    if (!cls) throw std::invalid_argument("unknown classification");
    e.classification = *cls;
    e.max_h_order = j.at("max_h_order").get<int>();
    if (j.contains("preimage")) e.preimage = parse_graph6(j.at("preimage").get<std::string>());
    if (j.contains("obstruction")) {
        const auto check = check_from_name(j.at("obstruction").get<std::string>());
        if (!check) throw std::invalid_argument("unknown obstruction");
        CheckResult r{*check, Verdict::kFail, j.value("witness", std::vector<Vertex>{}), j.value("detail", "")};
        e.obstruction = r;
    }
    for (const auto& name : j.value("firing", std::vector<std::string>{})) {
        if (auto c = check_from_name(name)) e.firing.push_back(*c);
    }
    return e;
}

json to_json(const ConjectureFinding& f) {
    json j{
        {"schema", kFindingSchema},
        {"conjecture", conjecture_name(f.conjecture)},
        {"graph", f.graph6},
        {"verdict", finding_verdict_name(f.verdict)},
    };
    if (!f.witness.empty()) j["witness"] = f.witness;
    if (!f.note.empty()) j["note"] = f.note;
    return j;
}

json to_json(const BicliqueFamily& family, const Graph& kb) {
    json list = json::array();
    for (const auto& b : family.bicliques()) {
        list.push_back({{"vertices", b.vertices.to_vector()},
                        {"side_a", b.side_a.to_vector()},
                        {"side_b", b.side_b.to_vector()}});
    }
    return json{
        {"schema", kBicliqueSchema},
        {"graph", write_graph6(family.host())},
        {"bicliques", list},
        {"kb", write_graph6(kb)},
    };
}

json to_json(const BicliqueDistanceReport& r, int witness_count) {
    return json{
        {"schema", kDistanceSchema},
        {"i", r.b_index},
        {"j", r.b_prime_index},
        {"d_g", r.d_g},
        {"d_kb", r.d_kb},
        {"formula_value", r.formula_value},
        {"closest_pair", {r.closest_pair.first, r.closest_pair.second}},
        {"witness_count", witness_count},
    };
}

}  // namespace biclab
