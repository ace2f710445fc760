#include "dhz/report.hpp"

#include <cstdio>
#include <sstream>

#include "dhz/enclosure.hpp"

namespace dhz {

namespace {
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
}  // namespace

void ExperimentReport::set_param(const std::string& key, double value) {
    for (auto& kv : parameters) {
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    }
    parameters.emplace_back(key, value);
}

double ExperimentReport::param(const std::string& key) const {
    for (const auto& kv : parameters)
        if (kv.first == key) return kv.second;
    throw UsageError("report parameter not found: " + key);
}

bool ExperimentReport::has_param(const std::string& key) const {
    for (const auto& kv : parameters)
        if (kv.first == key) return true;
    return false;
}

std::string to_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "# name," << report.name << "\n";
    for (const auto& kv : report.parameters) out << "# " << kv.first << "," << num(kv.second) << "\n";
    out << "# samples," << report.samples << "\n";
    out << "# worst_ratio," << num(report.worst_ratio) << "\n";
    out << "# verdict," << (report.verdict ? "true" : "false") << "\n";
    if (!report.columns.empty()) {
        for (std::size_t c = 0; c < report.columns.size(); ++c)
            out << report.columns[c] << (c + 1 < report.columns.size() ? "," : "\n");
        for (const auto& row : report.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << num(row[c]) << (c + 1 < row.size() ? "," : "\n");
        }
    }
    return out.str();
}

}  // namespace dhz
