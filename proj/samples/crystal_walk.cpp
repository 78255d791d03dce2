#include <iostream>

#include "polyreal/polyreal.hpp"

int main() {
    using namespace polyreal;
    auto seq = build_adapted(build_root_system({Family::C1, 3}), {2, 1, 3});
    LatticeElement a;
    for (int i : {1, 2, 3, 2, 1, 1}) {
        a = ftilde(seq, a, i);
        std::cout << "f" << i << " -> " << to_string(a) << "\n";
    }
    // every form from the generators is nonnegative on the image
    long checked = 0;
    for (int k = 1; k <= 3; ++k)
        for (const auto& f : generated_forms(seq, k, 1, 4)) {
            if (evaluate(seq, f, a) < 0) std::cout << "violated: " << to_string(f) << "\n";
            ++checked;
        }
    std::cout << checked << " forms checked\n";
}
