#include "atrans/report_json.hpp"

#include "atrans/io.hpp"

namespace atrans {

nlohmann::json to_json(const CheckResult& c) {
    return {{"name", c.name},
            {"expected", c.expected},
            {"observed", c.observed},
            {"pass", c.pass}};
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks) checks.push_back(to_json(c));
    return {{"checks", checks},
            {"summary", {{"passed", r.passed()}, {"failed", r.failed()}}}};
}

CheckResult check_from_json(const nlohmann::json& j) {
    CheckResult c;
    c.name = j.at("name").get<std::string>();
    c.expected = j.at("expected").get<std::string>();
    c.observed = j.at("observed").get<std::string>();
    c.pass = j.at("pass").get<bool>();
    return c;
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
    return r;
}

nlohmann::json to_json(const SearchReport& r) {
    return {{"n", r.space.n},
            {"r", r.space.r},
            {"no_isolated", r.space.no_isolated},
            {"iso", r.space.iso_reduce},
            {"profile", r.profile},
            {"mode", r.mode == Mode::all ? "all" : "maximal"},
            {"maximum", r.maximum},
            {"explored", r.explored},
            {"witness", serialize_hypergraph(r.witness)}};
}

} // namespace atrans
