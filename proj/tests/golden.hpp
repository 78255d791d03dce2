#pragma once

// Printed example data: word [2,1,3], rank 3. Forms are (s offset, l, c).

#include <string>
#include <tuple>
#include <vector>

#include "polyreal/polyreal.hpp"

namespace golden {

using Terms = std::vector<std::tuple<int, int, long>>;

inline polyreal::LinearForm materialize(const Terms& terms, int s) {
    polyreal::LinearForm f;
    for (auto [ds, l, c] : terms) f.add({s + ds, l}, c);
    return f;
}

struct PValue {
    polyreal::FoldMap map;
    int k;
    long t;
    long value;
};

inline const std::vector<PValue>& a1_p_values() {
    using polyreal::FoldMap;
    static const std::vector<PValue> v = {
        {FoldMap::overline, 1, -1, 1}, {FoldMap::overline, 1, 0, 0}, {FoldMap::overline, 1, 1, 0},
        {FoldMap::overline, 1, 2, 1},  {FoldMap::overline, 1, 3, 1}, {FoldMap::overline, 2, 0, 0},
        {FoldMap::overline, 2, 1, 0},  {FoldMap::overline, 2, 2, 0}, {FoldMap::overline, 2, 3, 0},
        {FoldMap::overline, 2, 4, 1},  {FoldMap::overline, 3, 1, 1}, {FoldMap::overline, 3, 2, 1},
        {FoldMap::overline, 3, 3, 0},  {FoldMap::overline, 3, 4, 1}, {FoldMap::overline, 3, 5, 2}};
    return v;
}

inline const std::vector<PValue>& a2_p_values() {
    using polyreal::FoldMap;
    static const std::vector<PValue> v = {
        {FoldMap::pi_prime, 1, 1, 0}, {FoldMap::pi_prime, 1, 2, 1}, {FoldMap::pi_prime, 1, 3, 1},
        {FoldMap::pi_prime, 1, 4, 2}, {FoldMap::pi1, 2, 0, 0},      {FoldMap::pi1, 2, 1, 0},
        {FoldMap::pi1, 2, 2, 0},      {FoldMap::pi1, 2, 3, 0},      {FoldMap::pi1, 2, 4, 1},
        {FoldMap::pi1, 3, 1, 1},      {FoldMap::pi1, 3, 2, 1},      {FoldMap::pi1, 3, 3, 0},
        {FoldMap::pi1, 3, 4, 1},      {FoldMap::pi1, 3, 5, 1}};
    return v;
}

struct EydCase {
    std::string name;
    int k;
    std::vector<int> ys;
    Terms form;
};

// phi^k and T^k_1..T^k_5 for k = 1,2,3; the diagrams are read off the corner lists
inline std::vector<EydCase> a1_forms() {
    std::vector<EydCase> out;
    const Terms forms[3][6] = {
        {{{0, 1, 1}},
         {{1, 2, 1}, {0, 3, 1}, {1, 1, -1}},
         {{1, 3, 1}, {0, 3, 1}, {2, 2, -1}},
         {{1, 2, 2}, {1, 3, -1}},
         {{1, 2, 1}, {1, 1, 1}, {2, 2, -1}},
         {{1, 2, 1}, {1, 3, 1}, {2, 1, -1}}},
        {{{0, 2, 1}},
         {{0, 1, 1}, {0, 3, 1}, {1, 2, -1}},
         {{0, 1, 1}, {1, 1, 1}, {1, 3, -1}},
         {{0, 3, 2}, {1, 1, -1}},
         {{0, 3, 1}, {1, 2, 1}, {1, 3, -1}},
         {{0, 3, 1}, {1, 1, 1}, {2, 2, -1}}},
        {{{0, 3, 1}},
         {{1, 1, 1}, {1, 2, 1}, {1, 3, -1}},
         {{2, 2, 1}, {1, 2, 1}, {2, 1, -1}},
         {{1, 1, 2}, {2, 2, -1}},
         {{1, 1, 1}, {1, 3, 1}, {2, 1, -1}},
         {{1, 1, 1}, {2, 2, 1}, {2, 3, -1}}}};
    for (int k = 1; k <= 3; ++k) {
        const std::vector<int> shapes[6] = {{}, {k - 1}, {k - 1, k - 1}, {k - 2}, {k - 2, k - 1}, {k - 2, k - 2}};
        for (int r = 0; r < 6; ++r) {
            std::string name = r == 0 ? "phi^" + std::to_string(k) : "T^" + std::to_string(k) + "_" + std::to_string(r);
            out.push_back({name, k, shapes[r], forms[k - 1][r]});
        }
    }
    return out;
}

struct ReydCase {
    std::string name;
    int k;
    long t_lo;
    std::vector<int> ys;
    Terms form;
};

inline std::vector<ReydCase> a2_reyd_forms() {
    return {{"phi^2", 2, 0, {}, {{0, 2, 1}}},
            {"T^2_1", 2, 0, {1}, {{0, 1, 2}, {0, 3, 1}, {1, 2, -1}}},
            {"T^2_2", 2, -1, {0, 1}, {{0, 1, 1}, {0, 3, 1}, {1, 1, -1}}},
            {"T^2_3", 2, -1, {0, 1, 1}, {{0, 1, 1}, {1, 2, 2}, {1, 3, -1}, {1, 1, -1}}},
            {"T^2_4", 2, -1, {0, 0, 1}, {{1, 1, 1}, {1, 2, 1}, {0, 1, 1}, {2, 2, -1}}},
            {"T^2_5", 2, -1, {-1, 0, 1}, {{0, 1, 1}, {1, 2, 1}, {2, 1, -1}}},
            {"phi^3", 3, 0, {}, {{0, 3, 1}}},
            {"T^3_1", 3, 0, {2}, {{1, 2, 2}, {1, 3, -1}}},
            {"T^3_2", 3, -1, {1, 2}, {{1, 1, 2}, {1, 2, 1}, {2, 2, -1}}}};
}

struct WallCase {
    std::string name;
    std::vector<int> halves;
    Terms form;
};

inline std::vector<WallCase> a2_wall_forms() {
    return {{"Y_Lambda1", {}, {{0, 1, 1}}},
            {"Y_1", {2}, {{1, 2, 1}, {1, 1, -1}}},
            {"Y_2", {4}, {{1, 3, 1}, {1, 1, 1}, {2, 2, -1}}},
            {"Y_3", {4, 2}, {{1, 3, 1}, {2, 1, -1}}},
            {"Y_4", {6}, {{2, 2, 1}, {1, 1, 1}, {2, 3, -1}}}};
}

}  // namespace golden
