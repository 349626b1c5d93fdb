#ifndef COJAC_REPORT_HPP
#define COJAC_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "cojac/checks.hpp"

namespace cojac {

/// Structured command output. Rendering is deterministic: no timestamps, checks
/// sorted by name, objects in insertion order. Exit codes: 0 all checks pass,
/// 1 mathematical failure, 2 usage or parse failure.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> objects;
    int exit_code = 0;

    void add_summary(std::string key, std::string value) {
        summary.emplace_back(std::move(key), std::move(value));
    }
    void add_object(std::string label, std::string value) {
        objects.emplace_back(std::move(label), std::move(value));
    }

    int failed_count() const;
    int passed_count() const;
    int skipped_count() const;

    /// Recomputes the exit code from the check statuses (keeps 2 if already set).
    void finalize();

    std::string render(bool quiet) const;
};

}  // namespace cojac

#endif
