#include "dhz/json_io.hpp"
#include <cmath>

#include <cstdio>

namespace dhz {

namespace {
std::string decimal17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
}  // namespace

nlohmann::json to_json(const Sequence& b) {
    return {{"offset", b.is_zero() ? 0 : b.offset()}, {"values", b.values()}};
}

Sequence sequence_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("offset") || !j.contains("values"))
        throw UsageError("sequence literal must be {\"offset\": int, \"values\": [...]}");
    const long long offset = j.at("offset").get<long long>();
    const auto values = j.at("values").get<std::vector<double>>();
    return Sequence(offset, values);
}

nlohmann::json to_json(const Enclosure& e) { return {{"lo", e.lo}, {"hi", e.hi}}; }

nlohmann::json to_json(const AtomReport& r) {
    return {{"support_ok", r.support_ok},
            {"size_ok", r.size_ok},
            {"moments_ok", r.moments_ok},
            {"max_moment_residual", r.max_moment_residual},
            {"verdict", r.verdict()}};
}

namespace {
// integral values (sizes, counts, nanoseconds) serialize as JSON integers
nlohmann::json tight_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 9.0e15) return static_cast<long long>(v);
    return v;
}
}  // namespace

nlohmann::json to_json(const ExperimentReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& kv : r.parameters) params[kv.first] = tight_number(kv.second);
    nlohmann::json out = {{"name", r.name},         {"parameters", params},
                          {"samples", r.samples},   {"worst_ratio", r.worst_ratio},
                          {"tolerance", r.tolerance}, {"verdict", r.verdict}};
    if (!r.columns.empty()) {
        out["columns"] = r.columns;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : r.rows) {
            nlohmann::json obj = nlohmann::json::object();
            for (std::size_t c = 0; c < row.size() && c < r.columns.size(); ++c)
                obj[r.columns[c]] = tight_number(row[c]);
            rows.push_back(obj);
        }
        out["rows"] = rows;
    }
    return out;
}

nlohmann::json to_json(const CounterexampleCertificate& c) {
    return {{"gamma", c.gamma},
            {"p", c.p},
            {"q", c.q},
            {"sum_lo", decimal17(c.total_sum.lo)},
            {"sum_hi", decimal17(c.total_sum.hi)},
            {"precision", 17},
            {"b_in_hp", c.b_in_hp},
            {"witness_first_nonzero_moment", c.first_nonzero_moment},
            {"sequence", to_json(counterexample_sequence())},
            {"conclusion", c.conclusion}};
}

}  // namespace dhz
