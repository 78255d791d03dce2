// Inequalities cutting out the image for A1, n = 3, word 2,1,3.
#include <iostream>

#include "polyreal/polyreal.hpp"

int main() {
    using namespace polyreal;
    auto seq = build_adapted(build_root_system({Family::A1, 3}), {2, 1, 3});
    for (int k = 1; k <= 3; ++k) {
        std::cout << "k = " << k << "\n";
        for (const auto& T : enumerate_eyd(k, 2)) std::cout << "  " << to_string(assign_a1(seq, T, 1), 1) << " >= 0\n";
    }
}
