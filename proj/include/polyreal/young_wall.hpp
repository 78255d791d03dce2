#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "forms.hpp"
#include "reyd.hpp"
#include "root_data.hpp"

namespace polyreal {

enum class WallFamily { A2wall, D2wall };

inline std::string to_string(WallFamily f) { return f == WallFamily::A2wall ? "A2wall" : "D2wall"; }

inline WallFamily parse_wall_family(const std::string& s) {
    if (s == "A2wall" || s == "A2") return WallFamily::A2wall;
    if (s == "D2wall" || s == "C1") return WallFamily::D2wall;
    throw DomainError("unknown wall family '" + s + "'");
}

struct WallKind {
    WallFamily family = WallFamily::A2wall;
    int n = 3;
    int ground = 1;

    void check() const {
        if (n < 3) throw RankError(to_string(family), 3);
        if (family == WallFamily::A2wall && ground != 1) throw DomainError("A2 walls sit on the ground state 1");
        if (family == WallFamily::D2wall && ground != 1 && ground != n)
            throw DomainError("D2 walls sit on the ground state 1 or n");
    }

    int row_color(long l) const { return fold(FoldMap::pi_prime, n, l); }

    bool split(long l) const {
        const int c = row_color(l);
        return c == 1 || (family == WallFamily::D2wall && c == n);
    }

    // row holding the h-th half above the baseline
    long row_of_half(long h) const { return ground + (h - 1) / 2; }

    // walk the rows: true when h halves end on a row boundary
    bool full(long h) const {
        long acc = 0;
        for (long l = ground; acc < h; ++l) acc += 2;
        return acc == h;
    }

    bool aligned(long h) const { return h >= 1 && (full(h) || split(row_of_half(h))); }

    auto operator<=>(const WallKind&) const = default;
    bool operator==(const WallKind&) const = default;
};

// Column heights in half-units above the baseline row `ground`; column 1 is the
// rightmost and columns past the stored list are at ground level (1 half).
class YoungWall {
public:
    YoungWall() = default;
    explicit YoungWall(WallKind kind, std::vector<int> halves = {}) : kind_(kind), halves_(std::move(halves)) {
        kind_.check();
        for (int h : halves_)
            if (h < 1) throw DomainError("wall column heights are at least the ground half");
        while (!halves_.empty() && halves_.back() == 1) halves_.pop_back();
    }

    const WallKind& kind() const noexcept { return kind_; }
    const std::vector<int>& halves() const noexcept { return halves_; }
    long columns() const noexcept { return static_cast<long>(halves_.size()); }
    int h(long j) const { return j <= columns() ? halves_[j - 1] : 1; }

    YoungWall with_height(long j, int h) const {
        std::vector<int> hs = halves_;
        if (j > columns()) hs.resize(j, 1);
        hs[j - 1] = h;
        return YoungWall(kind_, std::move(hs));
    }

    long total_halves() const {
        long t = 0;
        for (int h : halves_) t += h - 1;
        return t;
    }

    // number of cells above the ground: unit blocks and half blocks each count once
    long blocks() const {
        long b = 0;
        for (int h : halves_) {
            long acc = 1;
            for (long l = kind_.ground; acc < h; ++l) {
                if (l == kind_.ground) {
                    acc += 1;
                    b += 1;
                } else if (kind_.split(l)) {
                    b += std::min<long>(2, h - acc);
                    acc += 2;
                } else {
                    acc += 2;
                    b += 1;
                }
            }
        }
        return b;
    }

    auto operator<=>(const YoungWall&) const = default;
    bool operator==(const YoungWall&) const = default;

private:
    WallKind kind_;
    std::vector<int> halves_;
};

enum class WallViolationKind { monotone, alignment, properness };

struct WallViolation {
    WallViolationKind kind;
    long column;
    bool operator==(const WallViolation&) const = default;
};

inline std::vector<WallViolation> validate_proper(const YoungWall& Y) {
    std::vector<WallViolation> out;
    const WallKind& K = Y.kind();
    for (long j = 1; j <= Y.columns(); ++j) {
        if (Y.h(j) < Y.h(j + 1)) out.push_back({WallViolationKind::monotone, j});
        if (!K.aligned(Y.h(j))) out.push_back({WallViolationKind::alignment, j});
    }
    for (long j = 1; j <= Y.columns(); ++j) {
        if (!K.full(Y.h(j))) continue;
        for (long m = j + 1; m <= Y.columns(); ++m)
            if (Y.h(m) == Y.h(j) && K.full(Y.h(m))) out.push_back({WallViolationKind::properness, m});
    }
    return out;
}

inline bool is_proper(const YoungWall& Y) { return validate_proper(Y).empty(); }

enum class HalfSelector { unit, bottom, top };
enum class SiteRole { admissible_slot, removable_block };

struct WallSite {
    long column = 1;
    long row = 1;
    HalfSelector half = HalfSelector::unit;
    SiteRole role = SiteRole::admissible_slot;
    Multiplicity multiplicity = Multiplicity::single;
    int color = 1;
    bool operator==(const WallSite&) const = default;
};

namespace detail {

struct WallMove {
    long row;
    HalfSelector half;
    int new_h;
};

inline WallMove add_move(const WallKind& K, int h) {
    if (h % 2 == 1) return {K.row_of_half(h), HalfSelector::top, h + 1};
    const long l = K.ground + h / 2;
    if (K.split(l)) return {l, HalfSelector::bottom, h + 1};
    return {l, HalfSelector::unit, h + 2};
}

inline WallMove remove_move(const WallKind& K, int h) {
    if (h % 2 == 1) return {K.row_of_half(h), HalfSelector::bottom, h - 1};
    const long l = K.ground + h / 2 - 1;
    if (K.split(l)) return {l, HalfSelector::top, h - 1};
    return {l, HalfSelector::unit, h - 2};
}

}  // namespace detail

inline std::vector<WallSite> classify_sites(const YoungWall& Y) {
    std::vector<WallSite> out;
    const WallKind& K = Y.kind();
    for (long j = 1; j <= Y.columns() + 1; ++j) {
        const int h = Y.h(j);
        auto add = detail::add_move(K, h);
        if (is_proper(Y.with_height(j, add.new_h))) {
            WallSite s{j, add.row, add.half, SiteRole::admissible_slot, Multiplicity::single, K.row_color(add.row)};
            if (add.half == HalfSelector::bottom && is_proper(Y.with_height(j, h + 2)))
                s.multiplicity = Multiplicity::double_;
            out.push_back(s);
        }
        if (h <= 1) continue;
        auto rem = detail::remove_move(K, h);
        if (is_proper(Y.with_height(j, rem.new_h))) {
            WallSite s{j, rem.row, rem.half, SiteRole::removable_block, Multiplicity::single, K.row_color(rem.row)};
            if (rem.half == HalfSelector::top && rem.row > K.ground && is_proper(Y.with_height(j, h - 2)))
                s.multiplicity = Multiplicity::double_;
            out.push_back(s);
        }
    }
    return out;
}

inline DoubleIndex wall_slot_index(const PTable& P, const WallKind& K, int s, long column, long row) {
    return {static_cast<int>(s + P(row) + column - 1), K.row_color(row)};
}

inline DoubleIndex wall_block_index(const PTable& P, const WallKind& K, int s, long column, long row) {
    return {static_cast<int>(s + P(row) + column), K.row_color(row)};
}

inline LinearForm assign_wall(const AdaptedSequence& seq, const YoungWall& Y, int s) {
    if (s < 1) throw DomainError("s must be >= 1");
    const WallKind& K = Y.kind();
    const Family want = K.family == WallFamily::A2wall ? Family::A2 : Family::C1;
    if (seq.family() != want) throw FamilyMismatchError(to_string(K.family) + " assigns for family " + to_string(want));
    if (seq.n() != K.n) throw FamilyMismatchError("rank of the wall differs from the sequence");
    const PTable P(seq, FoldMap::pi_prime, K.ground);
    LinearForm f;
    for (const WallSite& site : classify_sites(Y)) {
        const long c = site.multiplicity == Multiplicity::double_ ? 2 : 1;
        if (site.role == SiteRole::admissible_slot)
            f.add(wall_slot_index(P, K, s, site.column, site.row), c);
        else
            f.add(wall_block_index(P, K, s, site.column, site.row), -c);
    }
    return f;
}

// single-cell move by default; double_move adds or removes both halves of a split row
inline YoungWall toggle_block(const YoungWall& Y, const WallSite& site, bool double_move = false) {
    auto sites = classify_sites(Y);
    auto hit = std::find_if(sites.begin(), sites.end(), [&](const WallSite& s) {
        return s.column == site.column && s.role == site.role && s.row == site.row && s.half == site.half;
    });
    if (hit == sites.end()) throw NotASiteError("not an admissible slot or removable block of the wall");
    if (double_move && hit->multiplicity != Multiplicity::double_) throw NotASiteError("site is not double");
    const int h = Y.h(site.column);
    int nh;
    if (site.role == SiteRole::admissible_slot)
        nh = double_move ? h + 2 : detail::add_move(Y.kind(), h).new_h;
    else
        nh = double_move ? h - 2 : detail::remove_move(Y.kind(), h).new_h;
    YoungWall out = Y.with_height(site.column, nh);
    if (!is_proper(out)) throw Error("toggle_block produced an improper wall");
    return out;
}

namespace detail {

template <class Measure>
std::set<YoungWall> enumerate_walls_by(const WallKind& kind, long budget, Measure measure, std::size_t cap) {
    std::set<YoungWall> all{YoungWall(kind)};
    std::vector<YoungWall> frontier{YoungWall(kind)};
    while (!frontier.empty()) {
        std::vector<YoungWall> next;
        for (const auto& Y : frontier) {
            for (const WallSite& s : classify_sites(Y)) {
                if (s.role != SiteRole::admissible_slot) continue;
                YoungWall Z = Y.with_height(s.column, add_move(kind, Y.h(s.column)).new_h);
                if (measure(Z) > budget || all.count(Z)) continue;
                all.insert(Z);
                next.push_back(std::move(Z));
            }
        }
        if (all.size() > cap) throw ResourceLimitError("enumerate_walls", all.size());
        frontier = std::move(next);
    }
    return all;
}

}  // namespace detail

inline std::set<YoungWall> enumerate_walls(const WallKind& kind, int max_halves, std::size_t cap = 2'000'000) {
    if (max_halves < 0) throw DomainError("max_halves must be >= 0");
    kind.check();
    return detail::enumerate_walls_by(kind, max_halves, [](const YoungWall& Y) { return Y.total_halves(); }, cap);
}

inline std::set<YoungWall> enumerate_walls_by_blocks(const WallKind& kind, int max_blocks,
                                                     std::size_t cap = 2'000'000) {
    if (max_blocks < 0) throw DomainError("max_blocks must be >= 0");
    kind.check();
    return detail::enumerate_walls_by(kind, max_blocks, [](const YoungWall& Y) { return Y.blocks(); }, cap);
}

// brick picture, column 1 on the right; a unit row prints as "[c ]", a split row
// as two lines of half blocks "[c\]" over "[c/]"
inline std::string render_ascii(const YoungWall& Y) {
    const WallKind& K = Y.kind();
    const long cols = Y.columns() + 2;
    int top = 1;
    for (long j = 1; j <= cols; ++j) top = std::max(top, Y.h(j));
    std::string out = to_string(K.family) + " n=" + std::to_string(K.n) + " ground=" + std::to_string(K.ground) + "\n";
    auto line = [&](long l, int need, const std::string& cell) {
        std::string label = std::to_string(l);
        std::string s = std::string(4 - std::min<std::size_t>(4, label.size()), ' ') + label + " ...";
        for (long j = cols; j >= 1; --j) s += Y.h(j) >= need ? cell : "    ";
        return s + "\n";
    };
    for (long l = K.row_of_half(top); l >= K.ground; --l) {
        const std::string c = std::to_string(K.row_color(l));
        const int lower = static_cast<int>(2 * (l - K.ground) + 1);
        if (K.split(l)) {
            if (top >= lower + 1) out += line(l, lower + 1, "[" + c + "\\]");
            out += line(l, lower, "[" + c + "/]");
        } else {
            out += line(l, lower + 1, "[" + c + " ]");
        }
    }
    return out;
}

}  // namespace polyreal
