#pragma once

#include <set>
#include <string>
#include <vector>

#include "eyd.hpp"
#include "forms.hpp"
#include "reyd.hpp"
#include "young_wall.hpp"

namespace polyreal {

enum class GeneratorKind { eyd, reyd, wall };

inline std::string to_string(GeneratorKind g) {
    switch (g) {
        case GeneratorKind::eyd: return "eyd";
        case GeneratorKind::reyd: return "reyd";
        case GeneratorKind::wall: return "wall";
    }
    return "?";
}

inline GeneratorKind generator_kind(Family f, int n, int k) {
    if (k < 1 || k > n) throw DomainError("k outside the index set");
    switch (f) {
        case Family::A1:
        case Family::D2: return GeneratorKind::eyd;
        case Family::A2: return k == 1 ? GeneratorKind::wall : GeneratorKind::reyd;
        case Family::C1: return (k == 1 || k == n) ? GeneratorKind::wall : GeneratorKind::reyd;
    }
    return GeneratorKind::eyd;
}

inline ReydFlavor reyd_flavor_for(Family f) { return f == Family::A2 ? ReydFlavor::A2 : ReydFlavor::D2target; }

inline WallKind wall_kind_for(Family f, int n, int k) {
    return WallKind{f == Family::A2 ? WallFamily::A2wall : WallFamily::D2wall, n, k};
}

// Forms L(T) for every generator object T of charge k with at most max_size steps
// from the empty object: boxes for diagrams, units for revised diagrams, blocks for walls.
inline std::set<LinearForm> generated_forms(const AdaptedSequence& seq, int k, int s, int max_size) {
    std::set<LinearForm> out;
    const Family f = seq.family();
    const int n = seq.n();
    switch (generator_kind(f, n, k)) {
        case GeneratorKind::eyd:
            for (const auto& T : enumerate_eyd(k, max_size)) out.insert(assign_eyd(seq, T, s));
            break;
        case GeneratorKind::reyd:
            for (const auto& T : enumerate_reyd(reyd_flavor_for(f), n, k, max_size)) out.insert(assign(seq, T, s));
            break;
        case GeneratorKind::wall:
            for (const auto& Y : enumerate_walls_by_blocks(wall_kind_for(f, n, k), max_size))
                out.insert(assign_wall(seq, Y, s));
            break;
    }
    return out;
}

}  // namespace polyreal
