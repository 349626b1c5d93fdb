#include "cojac/corpus.hpp"

#include "cojac/parser.hpp"

namespace cojac {

namespace {

DiffForm one_form(const Chart& chart,
                  const std::vector<std::pair<std::string, std::string>>& comps) {
    DiffForm f(chart, 1);
    for (const auto& [name, expr] : comps)
        f.set_component({chart.index_of(name)}, parse_expr(expr, chart));
    return f;
}

DiffForm two_form(const Chart& chart,
                  const std::vector<std::pair<std::pair<std::string, std::string>,
                                              std::string>>& comps) {
    DiffForm f(chart, 2);
    for (const auto& [key, expr] : comps)
        f.set_component({chart.index_of(key.first), chart.index_of(key.second)},
                        parse_expr(expr, chart));
    return f;
}

MultiVector vector_field(const Chart& chart,
                         const std::vector<std::pair<std::string, std::string>>& comps) {
    MultiVector v(chart, 1);
    for (const auto& [name, expr] : comps)
        v.set_component({chart.index_of(name)}, parse_expr(expr, chart));
    return v;
}

MultiVector bivector(const Chart& chart,
                     const std::vector<std::pair<std::pair<std::string, std::string>,
                                                 std::string>>& comps) {
    MultiVector v(chart, 2);
    for (const auto& [key, expr] : comps)
        v.set_component({chart.index_of(key.first), chart.index_of(key.second)},
                        parse_expr(expr, chart));
    return v;
}

std::vector<ExampleEntry> build_catalogue() {
    Policy exact = Policy::exact();
    std::vector<ExampleEntry> out;

    Chart c3({"q", "p", "z"});

    // C3: contact pair, Omega = d(omega)
    {
        DiffForm omega = one_form(c3, {{"z", "1"}, {"q", "-p"}});
        DiffForm Omega = two_form(c3, {{{"q", "p"}, "1"}});
        out.push_back({"C3", ACCStructure::validate(c3, omega, Omega, exact),
                       StructureClass::Contact,
                       vector_field(c3, {{"z", "1"}}),
                       bivector(c3, {{{"q", "p"}, "-1"}, {{"p", "z"}, "p"}}),
                       "contact pair on dimension 3"});
    }

    // C5: contact pair with two (q, p) blocks
    {
        Chart c5({"q1", "q2", "p1", "p2", "z"});
        DiffForm omega = one_form(c5, {{"z", "1"}, {"q1", "-p1"}, {"q2", "-p2"}});
        DiffForm Omega = two_form(c5, {{{"q1", "p1"}, "1"}, {{"q2", "p2"}, "1"}});
        out.push_back({"C5", ACCStructure::validate(c5, omega, Omega, exact),
                       StructureClass::Contact,
                       vector_field(c5, {{"z", "1"}}),
                       bivector(c5, {{{"q1", "p1"}, "-1"},
                                     {{"q2", "p2"}, "-1"},
                                     {{"p1", "z"}, "p1"},
                                     {{"p2", "z"}, "p2"}}),
                       "contact pair on dimension 5"});
    }

    // K3: cosymplectic pair (d omega = 0)
    {
        DiffForm omega = one_form(c3, {{"z", "1"}});
        DiffForm Omega = two_form(c3, {{{"q", "p"}, "1"}});
        out.push_back({"K3", ACCStructure::validate(c3, omega, Omega, exact),
                       StructureClass::Cosymplectic,
                       vector_field(c3, {{"z", "1"}}),
                       bivector(c3, {{{"q", "p"}, "-1"}}),
                       "cosymplectic pair; dual is a coPoisson pair"});
    }

    // M3: mixed pair with Omega = -d(omega)
    {
        DiffForm omega = one_form(c3, {{"z", "1"}, {"q", "-p"}});
        DiffForm Omega = two_form(c3, {{{"q", "p"}, "-1"}});
        out.push_back({"M3", ACCStructure::validate(c3, omega, Omega, exact),
                       StructureClass::Mixed,
                       vector_field(c3, {{"z", "1"}}),
                       bivector(c3, {{{"q", "p"}, "1"}, {{"p", "z"}, "-p"}}),
                       "mixed pair; Omega + d(omega) = 0, so the algebroid form "
                       "F vanishes identically"});
    }

    // M3b: mixed pair with L_E omega != 0, regular where p != 1
    {
        DiffForm omega = one_form(c3, {{"z", "1"}, {"q", "-p"}});
        DiffForm Omega = two_form(c3, {{{"q", "p"}, "-1"}, {{"p", "z"}, "-1"}});
        out.push_back({"M3b", ACCStructure::validate(c3, omega, Omega, exact),
                       StructureClass::Mixed,
                       vector_field(c3, {{"q", "1/(1 - p)"}, {"z", "1/(1 - p)"}}),
                       bivector(c3, {{{"q", "p"}, "1/(1 - p)"},
                                     {{"p", "z"}, "-p/(1 - p)"}}),
                       "mixed pair with non-vanishing L_E omega; the dual has "
                       "rational-function components with poles on p = 1"});
    }

    // EM3: C3 deformed by the closed 2-form G = 1/10 dq^dz
    {
        DiffForm omega = one_form(c3, {{"z", "1"}, {"q", "-p"}});
        DiffForm Omega = two_form(c3, {{{"q", "p"}, "1"}, {{"q", "z"}, "1/10"}});
        out.push_back({"EM3", ACCStructure::validate(c3, omega, Omega, exact),
                       StructureClass::Mixed,
                       vector_field(c3, {{"p", "-1/10"}, {"z", "1"}}),
                       bivector(c3, {{{"q", "p"}, "-1"}, {{"p", "z"}, "p"}}),
                       "electromagnetic-style deformation of C3 by a closed "
                       "2-form; flat analogue of a charged phase structure"});
    }

    return out;
}

}  // namespace

const std::vector<ExampleEntry>& catalogue() {
    static const std::vector<ExampleEntry> entries = build_catalogue();
    return entries;
}

const ExampleEntry& get_example(const std::string& name) {
    for (const auto& e : catalogue())
        if (e.name == name) return e;
    throw UsageError("unknown example '" + name + "'");
}

std::vector<std::pair<std::string, StructureClass>> list_examples() {
    std::vector<std::pair<std::string, StructureClass>> out;
    for (const auto& e : catalogue()) out.emplace_back(e.name, e.expected_class);
    return out;
}

}  // namespace cojac
