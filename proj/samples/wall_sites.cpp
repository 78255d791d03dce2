#include <iostream>

#include "polyreal/polyreal.hpp"

int main() {
    using namespace polyreal;
    auto seq = build_adapted(build_root_system({Family::A2, 3}), {2, 1, 3});
    YoungWall Y(WallKind{WallFamily::A2wall, 3, 1}, {8, 4, 2});
    std::cout << render_ascii(Y);
    for (const auto& site : classify_sites(Y)) {
        std::cout << (site.role == SiteRole::admissible_slot ? "slot  " : "block ") << "column " << site.column
                  << " row " << site.row << " color " << site.color
                  << (site.multiplicity == Multiplicity::double_ ? " (double)" : "") << "\n";
    }
    std::cout << "L = " << to_string(assign_wall(seq, Y, 1), 1) << "\n";
}
