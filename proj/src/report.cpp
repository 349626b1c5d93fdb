#include "cojac/report.hpp"

#include <algorithm>
#include <sstream>

namespace cojac {

int Report::failed_count() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) ++n;
    return n;
}

int Report::passed_count() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Pass) ++n;
    return n;
}

int Report::skipped_count() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Skipped) ++n;
    return n;
}

void Report::finalize() {
    if (exit_code == 2) return;
    exit_code = failed_count() > 0 ? 1 : 0;
}

std::string Report::render(bool quiet) const {
    std::vector<CheckResult> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         return a.name < b.name;
                     });
    std::ostringstream out;
    if (!quiet) {
        out << "command: " << command << "\n";
        if (!summary.empty()) {
            out << "structure:\n";
            for (const auto& [k, v] : summary) out << "  " << k << ": " << v << "\n";
        }
        if (!sorted.empty()) {
            out << "checks:\n";
            for (const auto& c : sorted) {
                out << "  " << c.name << ": " << to_string(c.status);
                if (!c.details.empty()) out << "  (" << c.details << ")";
                out << "\n";
            }
        }
        if (!objects.empty()) {
            out << "objects:\n";
            for (const auto& [k, v] : objects) out << "  " << k << ": " << v << "\n";
        }
    }
    out << "summary: " << passed_count() << " passed, " << failed_count()
        << " failed, " << skipped_count() << " skipped\n";
    out << "exit: " << exit_code << "\n";
    return out.str();
}

}  // namespace cojac
