#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dhz {

// Structured experiment record.  `verdict` is tied to `worst_ratio` by
// finalize(): true iff worst_ratio <= 1 + tolerance.  Checks that only
// report observations (no asserted inequality) leave worst_ratio at 0.
struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, double>> parameters;  // insertion-ordered
    long long samples = 0;
    double worst_ratio = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void set_param(const std::string& key, double value);
    double param(const std::string& key) const;  // throws if missing
    bool has_param(const std::string& key) const;
    void finalize() { verdict = worst_ratio <= 1.0 + tolerance; }
};

std::string to_csv(const ExperimentReport& report);

}  // namespace dhz
