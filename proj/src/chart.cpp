#include "cojac/chart.hpp"

#include <set>

namespace cojac {

namespace {
const std::set<std::string> kReservedNames = {"sin", "cos", "exp"};
}

Chart::Chart(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 3 || names_.size() % 2 == 0)
        throw Error("chart dimension must be odd and >= 3, got " +
                    std::to_string(names_.size()));
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw Error("empty coordinate name");
        if (kReservedNames.count(n))
            throw Error("coordinate name collides with a function name: " + n);
        if (!seen.insert(n).second) throw Error("duplicate coordinate name: " + n);
    }
}

int Chart::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace cojac
