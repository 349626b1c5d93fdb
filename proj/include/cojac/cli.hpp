#ifndef COJAC_CLI_HPP
#define COJAC_CLI_HPP

#include <optional>
#include <string>

#include "cojac/report.hpp"
#include "cojac/suite.hpp"
#include "cojac/structfile.hpp"

namespace cojac {

/// Input selector: exactly one of `file`, `example` is non-empty.
struct CliInput {
    std::string file;
    std::string example;
};

/// Explicit command-line policy overrides; unset fields fall back to the
/// structure file's policy block, then to the defaults.
struct CliFlags {
    std::optional<std::string> mode;
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    bool quiet = false;
};

/// Structure resolved from a file or the example catalogue, with the merged
/// policy. Throws FormatError/ParseError/UsageError for exit-2 conditions;
/// validation failures are reported by the commands as exit-1 check rows.
struct LoadedStructure {
    ACCStructure structure;
    std::string corpus_name;  // non-empty when loaded from the catalogue
    Policy policy;
};

Report cmd_verify(const CliInput& in, const CliFlags& flags);
Report cmd_classify(const CliInput& in, const CliFlags& flags);
Report cmd_dual(const CliInput& in, const CliFlags& flags);
Report cmd_pair_check(const CliInput& in, const CliFlags& flags, const std::string& f,
                      const std::string& h);
Report cmd_bracket(const CliInput& in, const CliFlags& flags, const std::string& alg,
                   const std::string& arg1, const std::string& arg2);
Report cmd_suite(const CliInput& in, const CliFlags& flags,
                 const std::optional<std::string>& tamper);
Report cmd_examples(const CliFlags& flags);

}  // namespace cojac

#endif
