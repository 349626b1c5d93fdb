#ifndef COJAC_SUITE_HPP
#define COJAC_SUITE_HPP

#include <functional>
#include <optional>

#include "cojac/algebroid.hpp"
#include "cojac/corpus.hpp"

namespace cojac {

/// Debug fault injection target for the suite.
struct TamperSpec {
    enum class Kind { Lambda, Omega1 };
    Kind kind;
    IndexTuple idx;  // pair (i, j) for Lambda, single (i) for omega
};

struct SuiteOptions {
    Policy policy = Policy::exact();
    std::uint64_t seed = 0;
    int cases = 10;
    std::optional<TamperSpec> tamper;
};

/// Structure-adapted seeded generators of in-domain pairs. Families are known
/// in closed form for the corpus structures; for unknown structures the
/// generators degrade to constants (or are absent), and the dependent checks
/// report skipped.
struct PairFamilies {
    std::function<Expr(Sampler&)> conserved;         // E.f = 0
    std::function<PairFH(Sampler&)> acc;             // cond1 & cond2 & cond3
    std::function<PairFH(Sampler&)> reeb;            // Reeb-symmetry generators
    std::function<PairFH(Sampler&)> cond12;          // cond1 & cond2
};

/// Families for a corpus entry (by name) or generic fallbacks.
PairFamilies make_pair_families(const std::string& corpus_name, const Chart& chart);

/// Runs every module invariant against one structure and returns the results
/// sorted by check name. `corpus_name`, when known, unlocks the structure's
/// closed-form pair families and the expected-dual reconstruction check.
std::vector<CheckResult> run_suite(const ACCStructure& s,
                                   const std::string& corpus_name,
                                   const SuiteOptions& options);

std::vector<CheckResult> run_suite(const ExampleEntry& entry,
                                   const SuiteOptions& options);

}  // namespace cojac

#endif
