#pragma once

#include <initializer_list>
#include <ostream>
#include <tuple>
#include <vector>

#include "polyreal/polyreal.hpp"

namespace th {

using namespace polyreal;

inline AdaptedSequence seq(Family f, int n, std::vector<int> word) {
    return build_adapted(build_root_system({f, n}), std::move(word));
}

inline AdaptedSequence a1_213() { return seq(Family::A1, 3, {2, 1, 3}); }
inline AdaptedSequence a2_213() { return seq(Family::A2, 3, {2, 1, 3}); }

// terms as (s offset, l, coefficient), materialized at the given s
inline LinearForm form_at(int s, std::initializer_list<std::tuple<int, int, long>> terms) {
    LinearForm f;
    for (auto [ds, l, c] : terms) f.add({s + ds, l}, c);
    return f;
}

inline LinearForm x(int s, int l) { return LinearForm::var(s, l); }

inline std::vector<int> default_word(int n) {
    if (n == 2) return {1, 2};
    std::vector<int> w{2, 1};
    for (int l = 3; l <= n; ++l) w.push_back(l);
    return w;
}

}  // namespace th

namespace polyreal {
inline void PrintTo(const LinearForm& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const LatticeElement& a, std::ostream* os) { *os << to_string(a); }
inline void PrintTo(const DoubleIndex& d, std::ostream* os) { *os << "(" << d.s << "," << d.l << ")"; }
}  // namespace polyreal
