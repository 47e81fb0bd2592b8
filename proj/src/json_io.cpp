#include "flatreg/json_io.hpp"

namespace flatreg {

using nlohmann::json;

json to_json(const partition& p) { return json(p.parts()); }

partition partition_from_json(const json& j) {
    return partition::from_sorted(j.get<std::vector<int>>());
}

json to_json(const type_vector& t) {
    return json{{"m", t.modulus}, {"entries", t.entries}};
}

type_vector type_vector_from_json(const json& j) {
    type_vector t{j.at("m").get<int>(), j.at("entries").get<std::vector<int>>()};
    require_modulus(t.modulus);
    if (static_cast<int>(t.entries.size()) != t.modulus - 1)
        throw argument_error("type vector must have m-1 entries");
    return t;
}

json to_json(const sigma_record& s) {
    return json{{"m", s.modulus}, {"reduced", s.reduced.parts()}};
}

sigma_record sigma_record_from_json(const json& j) {
    sigma_record s{partition::from_sorted(j.at("reduced").get<std::vector<int>>()),
                   j.at("m").get<int>()};
    require_modulus(s.modulus);
    return s;
}

json to_json(const bijection_trace& t) {
    json step1 = json::array();
    for (const auto& r : t.step1) step1.push_back({{"value", r.value}, {"position", r.position}});
    json step2 = json::array();
    for (const auto& r : t.step2)
        step2.push_back({{"value", r.value}, {"position", r.position}, {"sigma_part", r.sigma_part}});
    return json{{"step1", step1},
                {"step2", step2},
                {"core", t.core.parts()},
                {"sigma", to_json(t.sigma)}};
}

bijection_trace trace_from_json(const json& j) {
    bijection_trace t;
    for (const auto& r : j.at("step1"))
        t.step1.push_back({r.at("value").get<int>(), r.at("position").get<int>()});
    for (const auto& r : j.at("step2"))
        t.step2.push_back({r.at("value").get<int>(), r.at("position").get<int>(),
                           r.at("sigma_part").get<int>()});
    t.core = partition_from_json(j.at("core"));
    t.sigma = sigma_record_from_json(j.at("sigma"));
    return t;
}

json to_json(const verification_report& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json out{{"claim", r.claim},
             {"params", params},
             {"status", r.pass ? "pass" : "fail"},
             {"counts", {{"lhs", r.lhs}, {"rhs", r.rhs}}},
             {"counterexample", r.counterexample}};
    if (r.conjectural) out["conjectural"] = true;
    return out;
}

verification_report report_from_json(const json& j) {
    verification_report r;
    r.claim = j.at("claim").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        r.params.emplace_back(k, v.get<std::string>());
    r.pass = j.at("status").get<std::string>() == "pass";
    r.conjectural = j.value("conjectural", false);
    r.lhs = j.at("counts").at("lhs").get<long long>();
    r.rhs = j.at("counts").at("rhs").get<long long>();
    r.counterexample = j.at("counterexample").get<std::string>();
    return r;
}

json to_json(const count_table& t) {
    json rows = json::array();
    for (const auto& [type, c] : t.counts)
        rows.push_back({{"type", type.entries}, {"count", c}});
    return json{{"n", t.n}, {"m", t.modulus}, {"counts", rows}};
}

json to_json(const rendered_diagram& d) {
    json rows = json::array();
    for (const auto& r : d.rows) rows.push_back({{"residue", r.residue}, {"m_cells", r.m_cells}});
    return json{{"m", d.modulus}, {"rows", rows}};
}

}  // namespace flatreg
