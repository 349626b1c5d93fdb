#ifndef COJAC_CHECKS_HPP
#define COJAC_CHECKS_HPP

#include <string>
#include <vector>

namespace cojac {

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string details;

    static CheckResult pass(std::string name, std::string details = "") {
        return {std::move(name), CheckStatus::Pass, std::move(details)};
    }
    static CheckResult fail(std::string name, std::string details = "") {
        return {std::move(name), CheckStatus::Fail, std::move(details)};
    }
    static CheckResult skipped(std::string name, std::string details = "") {
        return {std::move(name), CheckStatus::Skipped, std::move(details)};
    }
    static CheckResult of(std::string name, bool ok, std::string details = "") {
        return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
                std::move(details)};
    }
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

}  // namespace cojac

#endif
