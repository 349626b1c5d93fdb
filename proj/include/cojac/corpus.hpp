#ifndef COJAC_CORPUS_HPP
#define COJAC_CORPUS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cojac/duality.hpp"

namespace cojac {

/// Built-in example structure with its expected classification and, where known
/// in closed form, the expected dual pair.
struct ExampleEntry {
    std::string name;
    ACCStructure structure;
    StructureClass expected_class;
    std::optional<MultiVector> expected_E;
    std::optional<MultiVector> expected_Lambda;
    std::string notes;
};

/// Catalogue in deterministic order: C3, C5, K3, M3, M3b, EM3.
const std::vector<ExampleEntry>& catalogue();

/// Entry by name; UsageError on unknown names.
const ExampleEntry& get_example(const std::string& name);

std::vector<std::pair<std::string, StructureClass>> list_examples();

}  // namespace cojac

#endif
