#ifndef COJAC_STRUCTFILE_HPP
#define COJAC_STRUCTFILE_HPP

#include <string>

#include "cojac/policy.hpp"
#include "cojac/tensor.hpp"

namespace cojac {

/// On-disk description of an almost-cosymplectic-contact pair: a JSON document
///   { "chart": ["q","p","z"],
///     "omega": {"q": "-p", "z": "1"},
///     "Omega": {"q^p": "1"},
///     "policy": {"mode": "exact", "samples": 50, "seed": 0, "tol": 1e-9} }
/// Coordinate keys must be chart names; wedge keys are "a^b" with a before b in
/// chart order; expression leaves use the DSL grammar; policy is optional.
struct StructureFile {
    Chart chart;
    DiffForm omega;
    DiffForm Omega;
    Policy policy;
    bool has_policy = false;
};

/// FormatError on malformed documents; ParseError surfaces expression errors.
StructureFile parse_structure_json(const std::string& text);
StructureFile load_structure_file(const std::string& path);

/// Canonical serialization: keys in chart order, 2-space indent, trailing
/// newline. Fixture files are frozen bytes of this form.
std::string serialize_structure(const StructureFile& sf);
void save_structure_file(const StructureFile& sf, const std::string& path);

}  // namespace cojac

#endif
