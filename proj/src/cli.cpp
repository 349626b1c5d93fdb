#include "cojac/cli.hpp"

#include <functional>

#include "cojac/parser.hpp"

namespace cojac {

namespace {

Policy merge_policy(const Policy& base, const CliFlags& flags) {
    Policy p = base;
    if (flags.mode) {
        if (*flags.mode == "exact") {
            p.mode = Policy::Mode::Exact;
        } else if (*flags.mode == "sampled") {
            p.mode = Policy::Mode::Sampled;
        } else {
            throw UsageError("mode must be 'exact' or 'sampled'");
        }
    }
    if (flags.samples) {
        if (*flags.samples <= 0) throw UsageError("samples must be positive");
        p.samples = *flags.samples;
    }
    if (flags.seed) p.seed = *flags.seed;
    if (flags.tol) {
        if (*flags.tol <= 0) throw UsageError("tol must be positive");
        p.tol = *flags.tol;
    }
    return p;
}

std::string input_echo(const CliInput& in) {
    return in.example.empty() ? in.file : "--example " + in.example;
}

LoadedStructure resolve(const CliInput& in, const CliFlags& flags) {
    if (!in.example.empty()) {
        const ExampleEntry& entry = get_example(in.example);
        return LoadedStructure{entry.structure, entry.name,
                               merge_policy(Policy::exact(), flags)};
    }
    if (in.file.empty()) throw UsageError("provide a structure file or --example NAME");
    StructureFile sf = load_structure_file(in.file);
    Policy policy = merge_policy(sf.has_policy ? sf.policy : Policy::exact(), flags);
    ACCStructure s = ACCStructure::validate(sf.chart, sf.omega, sf.Omega, policy);
    return LoadedStructure{std::move(s), "", policy};
}

std::string point_to_string(const Point& p, const Chart& chart) {
    std::string out = "(";
    for (int i = 0; i < chart.dim(); ++i) {
        if (i) out += ", ";
        out += chart.name(i) + " = " + p[static_cast<std::size_t>(i)].to_string();
    }
    return out + ")";
}

/// Shared skeleton: resolve the structure, mark validity, delegate. Validation
/// failures become exit-1 reports rather than exceptions.
Report with_structure(const std::string& echo, const CliInput& in, const CliFlags& flags,
                      const std::function<void(Report&, LoadedStructure&)>& body) {
    Report report;
    report.command = echo;
    try {
        LoadedStructure loaded = resolve(in, flags);
        report.add_summary("chart", [&] {
            std::string names;
            for (const auto& n : loaded.structure.chart().names()) {
                if (!names.empty()) names += " ";
                names += n;
            }
            return names;
        }());
        report.checks.push_back(CheckResult::pass("structure.valid"));
        body(report, loaded);
    } catch (const NotClosedError& e) {
        report.checks.push_back(CheckResult::fail("structure.valid", e.what()));
    } catch (const DegenerateStructureError& e) {
        report.checks.push_back(CheckResult::fail("structure.valid", e.what()));
    } catch (const WitnessSearchFailedError& e) {
        report.checks.push_back(CheckResult::fail("structure.valid", e.what()));
    } catch (const PolicyError& e) {
        // e.g. a transcendental structure whose symbolic dual does not exist
        report.checks.push_back(CheckResult::fail("dual.computed", e.what()));
    }
    report.finalize();
    return report;
}

/// The duality identity battery with expectation-aware specializations: the
/// Jacobi-pair package is expected exactly on contact structures, the coPoisson
/// package exactly on cosymplectic ones.
void identity_checks(Report& report, const ACPJStructure& d, StructureClass cls,
                     const Policy& policy) {
    for (const auto& r : verify_dual_identities(d, policy)) {
        if (r.name == "dual.jacobi_pair") {
            bool holds = r.status == CheckStatus::Pass;
            bool expected = cls == StructureClass::Contact;
            report.checks.push_back(CheckResult::of(
                "jacobi_pair", holds == expected,
                holds ? "Jacobi-pair identities hold"
                      : "Jacobi-pair identities do not hold, as expected for class " +
                            to_string(cls)));
        } else if (r.name == "dual.copoisson") {
            bool holds = r.status == CheckStatus::Pass;
            bool expected = cls == StructureClass::Cosymplectic;
            report.checks.push_back(CheckResult::of(
                "copoisson", holds == expected,
                holds ? "coPoisson identities hold"
                      : "coPoisson identities do not hold, as expected for class " +
                            to_string(cls)));
        } else {
            report.checks.push_back(r);
        }
    }
}

PairFH parse_pair_arg(std::string arg, const Chart& chart) {
    if (arg.size() >= 2 && arg.front() == '(' && arg.back() == ')')
        arg = arg.substr(1, arg.size() - 2);
    auto comma = arg.find(',');
    if (comma == std::string::npos || arg.find(',', comma + 1) != std::string::npos)
        throw UsageError("pair argument must be 'f,h', got '" + arg + "'");
    return PairFH{parse_expr(arg.substr(0, comma), chart),
                  parse_expr(arg.substr(comma + 1), chart)};
}

AlgebroidSection parse_section_arg(std::string arg, const Chart& chart) {
    if (arg.size() >= 2 && arg.front() == '(' && arg.back() == ')')
        arg = arg.substr(1, arg.size() - 2);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = arg.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(arg.substr(start));
            break;
        }
        parts.push_back(arg.substr(start, comma - start));
        start = comma + 1;
    }
    if (static_cast<int>(parts.size()) != chart.dim() + 1)
        throw UsageError("section argument needs " + std::to_string(chart.dim()) +
                         " vector components plus one function, got '" + arg + "'");
    MultiVector x(chart, 1);
    for (int i = 0; i < chart.dim(); ++i)
        x.set_component({i}, parse_expr(parts[static_cast<std::size_t>(i)], chart));
    return AlgebroidSection{x, parse_expr(parts.back(), chart)};
}

}  // namespace

Report cmd_verify(const CliInput& in, const CliFlags& flags) {
    return with_structure(
        "verify " + input_echo(in), in, flags, [&](Report& report, LoadedStructure& ls) {
            StructureClass cls = classify(ls.structure, ls.policy);
            report.add_summary("class", to_string(cls));
            report.add_summary(
                "witness",
                point_to_string(ls.structure.regularity_witness(), ls.structure.chart()));
            ACPJStructure d = compute_dual(ls.structure);
            identity_checks(report, d, cls, ls.policy);
            report.add_object("E", tensor_to_string(d.E));
            report.add_object("Lambda", tensor_to_string(d.Lambda));
        });
}

Report cmd_classify(const CliInput& in, const CliFlags& flags) {
    return with_structure("classify " + input_echo(in), in, flags,
                          [&](Report& report, LoadedStructure& ls) {
                              report.add_summary(
                                  "class", to_string(classify(ls.structure, ls.policy)));
                          });
}

Report cmd_dual(const CliInput& in, const CliFlags& flags) {
    return with_structure(
        "dual " + input_echo(in), in, flags, [&](Report& report, LoadedStructure& ls) {
            StructureClass cls = classify(ls.structure, ls.policy);
            report.add_summary("class", to_string(cls));
            ACPJStructure d = compute_dual(ls.structure);
            identity_checks(report, d, cls, ls.policy);
            report.add_object("E", tensor_to_string(d.E));
            report.add_object("Lambda", tensor_to_string(d.Lambda));
            report.add_object("d_omega", tensor_to_string(d.d_omega));
            report.add_object("L_E_omega", tensor_to_string(d.lie_E_omega));
        });
}

Report cmd_pair_check(const CliInput& in, const CliFlags& flags, const std::string& f,
                      const std::string& h) {
    return with_structure(
        "pair-check " + input_echo(in) + " --f " + f + " --h " + h, in, flags,
        [&](Report& report, LoadedStructure& ls) {
            const Chart& chart = ls.structure.chart();
            PairFH pair{parse_expr(f, chart), parse_expr(h, chart)};
            require_pair_domain(ls.structure, pair);
            ACPJStructure d = compute_dual(ls.structure);
            GeneratorClass g = classify_generator(d, pair, ls.policy);
            auto yesno = [](bool b) { return b ? std::string("true") : std::string("false"); };
            report.add_object("cond1 (E.f = 0)", yesno(g.cond1));
            report.add_object("cond2 (E.h + (L_E omega)#.f = 0)", yesno(g.cond2));
            report.add_object("cond3 (symmetry 1-form kills sharped covectors)",
                              yesno(g.cond3));
            report.add_object("LGen(omega)", yesno(g.lgen_omega()));
            report.add_object("LGen(Omega)", yesno(g.lgen_Omega()));
            report.add_object("LGen(Lambda)", yesno(g.lgen_Lambda()));
            report.add_object("LGen(E,Omega)", yesno(g.lgen_E_Omega()));
            report.add_object("LGen(omega,Omega)", yesno(g.lgen_acc()));
            report.checks.push_back(CheckResult::pass("pair.classified"));
        });
}

Report cmd_bracket(const CliInput& in, const CliFlags& flags, const std::string& alg,
                   const std::string& arg1, const std::string& arg2) {
    return with_structure(
        "bracket " + input_echo(in) + " --alg " + alg + " " + arg1 + " " + arg2, in,
        flags, [&](Report& report, LoadedStructure& ls) {
            const Chart& chart = ls.structure.chart();
            ACPJStructure d = compute_dual(ls.structure);
            try {
                if (alg == "algebroid") {
                    AlgebroidSection s1 = parse_section_arg(arg1, chart);
                    AlgebroidSection s2 = parse_section_arg(arg2, chart);
                    ClosedTwoForm f = ClosedTwoForm::from_structure(d);
                    AlgebroidSection br = algebroid_bracket(f, s1, s2);
                    report.add_object("X", tensor_to_string(br.x));
                    report.add_object("fbreve", print_expr(br.fbreve, chart));
                } else {
                    PairFH p1 = parse_pair_arg(arg1, chart);
                    PairFH p2 = parse_pair_arg(arg2, chart);
                    require_pair_domain(ls.structure, p1);
                    require_pair_domain(ls.structure, p2);
                    PairFH br;
                    if (alg == "omega") {
                        br = bracket_omega(d, p1, p2);
                    } else if (alg == "Omega") {
                        br = bracket_Omega(d, p1, p2, ls.policy);
                    } else if (alg == "acc") {
                        br = bracket_acc(d, p1, p2, ls.policy);
                    } else {
                        throw UsageError(
                            "--alg must be omega, Omega, acc, or algebroid");
                    }
                    report.add_object("f", print_expr(br.f, chart));
                    report.add_object("h", print_expr(br.h, chart));
                }
                report.checks.push_back(CheckResult::pass("bracket.computed"));
            } catch (const MembershipError& e) {
                report.checks.push_back(CheckResult::fail("bracket.membership", e.what()));
            } catch (const DomainMismatchError& e) {
                report.checks.push_back(CheckResult::fail("bracket.domain", e.what()));
            }
        });
}

Report cmd_suite(const CliInput& in, const CliFlags& flags,
                 const std::optional<std::string>& tamper) {
    return with_structure(
        "suite " + input_echo(in), in, flags, [&](Report& report, LoadedStructure& ls) {
            SuiteOptions opts;
            opts.policy = ls.policy;
            opts.seed = ls.policy.seed;
            if (tamper) {
                auto colon = tamper->find(':');
                if (colon == std::string::npos)
                    throw UsageError("tamper argument must be 'lambda:a^b' or 'omega:a'");
                std::string kind = tamper->substr(0, colon);
                std::string where = tamper->substr(colon + 1);
                const Chart& chart = ls.structure.chart();
                if (kind == "lambda") {
                    auto caret = where.find('^');
                    if (caret == std::string::npos)
                        throw UsageError("lambda tamper needs a key like 'q^p'");
                    int a = chart.index_of(where.substr(0, caret));
                    int b = chart.index_of(where.substr(caret + 1));
                    if (a < 0 || b < 0 || a >= b)
                        throw UsageError("bad lambda tamper key '" + where + "'");
                    opts.tamper = TamperSpec{TamperSpec::Kind::Lambda, {a, b}};
                } else if (kind == "omega") {
                    int a = chart.index_of(where);
                    if (a < 0) throw UsageError("bad omega tamper key '" + where + "'");
                    opts.tamper = TamperSpec{TamperSpec::Kind::Omega1, {a}};
                } else {
                    throw UsageError("tamper kind must be 'lambda' or 'omega'");
                }
                report.add_summary("tamper", *tamper);
            }
            report.add_summary("seed", std::to_string(opts.seed));
            report.add_summary("runtime_budget_seconds", "300");
            auto checks = run_suite(ls.structure, ls.corpus_name, opts);
            for (auto& c : checks) report.checks.push_back(std::move(c));
        });
}

Report cmd_examples(const CliFlags&) {
    Report report;
    report.command = "examples";
    for (const auto& [name, cls] : list_examples())
        report.add_object(name, to_string(cls));
    report.checks.push_back(CheckResult::pass("examples.listed"));
    report.finalize();
    return report;
}

}  // namespace cojac
