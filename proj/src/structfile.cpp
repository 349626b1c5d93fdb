#include "cojac/structfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cojac/parser.hpp"

namespace cojac {

using ordered_json = nlohmann::ordered_json;

namespace {

Expr parse_leaf(const std::string& text, const Chart& chart, const std::string& key) {
    try {
        return parse_expr(text, chart);
    } catch (const ParseError& e) {
        throw ParseError("in component '" + key + "': " + e.what(), e.offset);
    }
}

}  // namespace

StructureFile parse_structure_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("structure file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("structure file must be a JSON object");
    if (!j.contains("chart") || !j["chart"].is_array())
        throw FormatError("missing 'chart' array");
    std::vector<std::string> names;
    for (const auto& n : j["chart"]) {
        if (!n.is_string()) throw FormatError("chart entries must be strings");
        names.push_back(n.get<std::string>());
    }
    Chart chart;
    try {
        chart = Chart(std::move(names));
    } catch (const Error& e) {
        throw FormatError(std::string("bad chart: ") + e.what());
    }

    StructureFile out{chart, DiffForm(chart, 1), DiffForm(chart, 2), Policy::exact(),
                      false};

    if (!j.contains("omega") || !j["omega"].is_object())
        throw FormatError("missing 'omega' object");
    for (const auto& [key, val] : j["omega"].items()) {
        int idx = chart.index_of(key);
        if (idx < 0) throw FormatError("omega key '" + key + "' is not a coordinate");
        if (!val.is_string()) throw FormatError("omega values must be DSL strings");
        out.omega.set_component({idx}, parse_leaf(val.get<std::string>(), chart, key));
    }

    if (!j.contains("Omega") || !j["Omega"].is_object())
        throw FormatError("missing 'Omega' object");
    for (const auto& [key, val] : j["Omega"].items()) {
        auto caret = key.find('^');
        if (caret == std::string::npos)
            throw FormatError("Omega key '" + key + "' must look like 'a^b'");
        int a = chart.index_of(key.substr(0, caret));
        int b = chart.index_of(key.substr(caret + 1));
        if (a < 0 || b < 0)
            throw FormatError("Omega key '" + key + "' uses unknown coordinates");
        if (a >= b)
            throw FormatError("Omega key '" + key +
                              "' must be strictly increasing in chart order");
        if (!val.is_string()) throw FormatError("Omega values must be DSL strings");
        out.Omega.set_component({a, b}, parse_leaf(val.get<std::string>(), chart, key));
    }

    if (j.contains("policy")) {
        const auto& p = j["policy"];
        if (!p.is_object()) throw FormatError("'policy' must be an object");
        out.has_policy = true;
        std::string mode = p.value("mode", "exact");
        if (mode == "exact") {
            out.policy.mode = Policy::Mode::Exact;
        } else if (mode == "sampled") {
            out.policy.mode = Policy::Mode::Sampled;
        } else {
            throw FormatError("policy mode must be 'exact' or 'sampled'");
        }
        out.policy.samples = p.value("samples", 50);
        out.policy.seed = p.value("seed", static_cast<std::uint64_t>(0));
        out.policy.tol = p.value("tol", 1e-9);
        if (out.policy.samples <= 0) throw FormatError("policy samples must be positive");
        if (out.policy.tol <= 0) throw FormatError("policy tol must be positive");
    }

    return out;
}

StructureFile load_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open structure file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_structure_json(buf.str());
}

std::string serialize_structure(const StructureFile& sf) {
    ordered_json j;
    j["chart"] = ordered_json::array();
    for (const auto& n : sf.chart.names()) j["chart"].push_back(n);

    ordered_json omega = ordered_json::object();
    for (int i = 0; i < sf.chart.dim(); ++i) {
        Expr e = sf.omega.component({i});
        if (e.is_syntactic_zero()) continue;
        omega[sf.chart.name(i)] = print_expr(e, sf.chart);
    }
    j["omega"] = omega;

    ordered_json big = ordered_json::object();
    for (int a = 0; a < sf.chart.dim(); ++a) {
        for (int b = a + 1; b < sf.chart.dim(); ++b) {
            Expr e = sf.Omega.component({a, b});
            if (e.is_syntactic_zero()) continue;
            big[sf.chart.name(a) + "^" + sf.chart.name(b)] = print_expr(e, sf.chart);
        }
    }
    j["Omega"] = big;

    if (sf.has_policy) {
        ordered_json p = ordered_json::object();
        p["mode"] = sf.policy.mode == Policy::Mode::Exact ? "exact" : "sampled";
        p["samples"] = sf.policy.samples;
        p["seed"] = sf.policy.seed;
        p["tol"] = sf.policy.tol;
        j["policy"] = p;
    }

    return j.dump(2) + "\n";
}

void save_structure_file(const StructureFile& sf, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write structure file '" + path + "'");
    out << serialize_structure(sf);
}

}  // namespace cojac
