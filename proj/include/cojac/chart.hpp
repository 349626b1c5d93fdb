#ifndef COJAC_CHART_HPP
#define COJAC_CHART_HPP

#include <string>
#include <vector>

#include "cojac/error.hpp"
#include "cojac/rational.hpp"

namespace cojac {

/// A coordinate chart on an odd-dimensional manifold: dim = 2n+1 >= 3 with
/// distinct coordinate names.
class Chart {
  public:
    Chart() = default;
    explicit Chart(std::vector<std::string> names);

    int dim() const { return static_cast<int>(names_.size()); }
    int n() const { return (dim() - 1) / 2; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

    /// Index of a coordinate name, or -1 if absent.
    int index_of(const std::string& name) const;

    friend bool operator==(const Chart& a, const Chart& b) { return a.names_ == b.names_; }
    friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

  private:
    std::vector<std::string> names_;
};

/// Exact point of a chart (one rational per coordinate).
using Point = std::vector<Rational>;

/// Floating point, used by the sampled policy and numeric oracles.
using NumericPoint = std::vector<double>;

inline NumericPoint to_numeric(const Point& p) {
    NumericPoint out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c.to_double());
    return out;
}

}  // namespace cojac

#endif
