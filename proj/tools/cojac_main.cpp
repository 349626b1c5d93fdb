#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "cojac/cli.hpp"

using namespace cojac;

namespace {

struct Common {
    CliInput input;
    CliFlags flags;
    std::string mode;
    int samples = 0;
    std::uint64_t seed = 0;
    double tol = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
    cmd->fallthrough();
    if (with_input) {
        cmd->add_option("file", c.input.file, "structure file (JSON)");
        cmd->add_option("--example", c.input.example, "built-in example name");
    }
    auto* mode = cmd->add_option("--mode", c.mode, "zero-test policy: exact | sampled");
    auto* samples = cmd->add_option("--samples", c.samples, "sampled-policy point count");
    auto* seed = cmd->add_option("--seed", c.seed, "seed for sampled checks and suites");
    auto* tol = cmd->add_option("--tol", c.tol, "sampled-policy tolerance");
    cmd->callback([&c, mode, samples, seed, tol] {
        if (mode->count()) c.flags.mode = c.mode;
        if (samples->count()) c.flags.samples = c.samples;
        if (seed->count()) c.flags.seed = c.seed;
        if (tol->count()) c.flags.tol = c.tol;
    });
}

int emit(const Report& report, bool quiet) {
    std::fputs(report.render(quiet).c_str(), stdout);
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic workbench for almost-cosymplectic-contact pairs and their "
                 "dual Jacobi-type structures"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet", quiet, "print only the summary and exit status");

    Common verify_c, classify_c, dual_c, pair_c, bracket_c, suite_c, examples_c;
    std::string pair_f, pair_h;
    std::string bracket_alg, bracket_a1, bracket_a2;
    std::string tamper;

    auto* verify =
        app.add_subcommand("verify", "validate a pair and report the dual identities");
    add_common(verify, verify_c);

    auto* classify_cmd = app.add_subcommand("classify", "contact / cosymplectic / mixed");
    add_common(classify_cmd, classify_c);

    auto* dual = app.add_subcommand("dual", "compute and print the dual pair (E, Lambda)");
    add_common(dual, dual_c);

    auto* pair_check = app.add_subcommand(
        "pair-check", "membership of a pair (f, h) in the generator algebras");
    // long-only help so that --h stays available for the pair's second function
    pair_check->set_help_flag("--help", "print this help message and exit");
    add_common(pair_check, pair_c);
    pair_check->add_option("--f", pair_f, "first function (DSL)")->required();
    pair_check->add_option("--h", pair_h, "second function (DSL)")->required();

    auto* bracket = app.add_subcommand("bracket", "evaluate one of the pair/section brackets");
    bracket->fallthrough();
    bracket->add_option("--example", bracket_c.input.example, "built-in example name");
    auto* bmode = bracket->add_option("--mode", bracket_c.mode, "exact | sampled");
    auto* bsamples = bracket->add_option("--samples", bracket_c.samples, "point count");
    auto* bseed = bracket->add_option("--seed", bracket_c.seed, "seed");
    auto* btol = bracket->add_option("--tol", bracket_c.tol, "tolerance");
    bracket->callback([&bracket_c, bmode, bsamples, bseed, btol] {
        if (bmode->count()) bracket_c.flags.mode = bracket_c.mode;
        if (bsamples->count()) bracket_c.flags.samples = bracket_c.samples;
        if (bseed->count()) bracket_c.flags.seed = bracket_c.seed;
        if (btol->count()) bracket_c.flags.tol = bracket_c.tol;
    });
    bracket->add_option("--alg", bracket_alg, "omega | Omega | acc | algebroid")->required();
    std::vector<std::string> bracket_args;
    bracket->add_option("args", bracket_args,
                        "[file] then two pairs 'f,h' (or sections 'x1,..,xn,fbreve')");

    auto* suite = app.add_subcommand("suite", "run the full invariant suite");
    add_common(suite, suite_c);
    suite->add_option("--tamper", tamper,
                      "debug fault injection: 'lambda:a^b' or 'omega:a'");

    auto* examples = app.add_subcommand("examples", "list built-in example structures");
    add_common(examples, examples_c, false);

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return emit(cmd_verify(verify_c.input, verify_c.flags), quiet);
        if (classify_cmd->parsed())
            return emit(cmd_classify(classify_c.input, classify_c.flags), quiet);
        if (dual->parsed()) return emit(cmd_dual(dual_c.input, dual_c.flags), quiet);
        if (pair_check->parsed())
            return emit(cmd_pair_check(pair_c.input, pair_c.flags, pair_f, pair_h), quiet);
        if (bracket->parsed()) {
            std::size_t expected = bracket_c.input.example.empty() ? 3 : 2;
            if (bracket_args.size() != expected)
                throw UsageError("bracket needs " + std::to_string(expected) +
                                 " positional arguments, got " +
                                 std::to_string(bracket_args.size()));
            std::size_t base = 0;
            if (bracket_c.input.example.empty()) {
                bracket_c.input.file = bracket_args[0];
                base = 1;
            }
            bracket_a1 = bracket_args[base];
            bracket_a2 = bracket_args[base + 1];
            return emit(cmd_bracket(bracket_c.input, bracket_c.flags, bracket_alg,
                                    bracket_a1, bracket_a2),
                        quiet);
        }
        if (suite->parsed())
            return emit(cmd_suite(suite_c.input, suite_c.flags,
                                  tamper.empty() ? std::nullopt
                                                 : std::optional<std::string>(tamper)),
                        quiet);
        if (examples->parsed()) return emit(cmd_examples(examples_c.flags), quiet);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
