#include "cojac/corpus.hpp"
#include "cojac/structfile.hpp"
#include <cstdio>
using namespace cojac;
int main() {
    for (const auto& e : catalogue()) {
        StructureFile sf{e.structure.chart(), e.structure.omega(), e.structure.Omega(),
                         Policy::exact(), false};
        save_structure_file(sf, "fixtures/" + e.name + ".json");
        std::printf("wrote fixtures/%s.json\n", e.name.c_str());
    }
    return 0;
}
