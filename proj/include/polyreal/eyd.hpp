#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "forms.hpp"
#include "root_data.hpp"

namespace polyreal {

enum class CornerKind { concave, convex };

struct Corner {
    int x = 0;
    int y = 0;
    CornerKind kind = CornerKind::concave;
    int diagonal() const { return x + y; }
    bool operator==(const Corner&) const = default;
};

class ExtendedYoungDiagram {
public:
    ExtendedYoungDiagram() = default;
    explicit ExtendedYoungDiagram(int charge, std::vector<int> ys = {}) : charge_(charge), ys_(std::move(ys)) {
        for (std::size_t t = 0; t < ys_.size(); ++t) {
            if (ys_[t] > charge_) throw DomainError("extended Young diagram values must not exceed the charge");
            if (t > 0 && ys_[t - 1] > ys_[t]) throw DomainError("extended Young diagram must be weakly increasing");
        }
        trim();
    }

    int charge() const noexcept { return charge_; }
    const std::vector<int>& ys() const noexcept { return ys_; }
    int y(long t) const { return t < static_cast<long>(ys_.size()) ? ys_[t] : charge_; }

    long boxes() const {
        long b = 0;
        for (int v : ys_) b += charge_ - v;
        return b;
    }

    auto operator<=>(const ExtendedYoungDiagram&) const = default;
    bool operator==(const ExtendedYoungDiagram&) const = default;

private:
    friend ExtendedYoungDiagram toggle_concave(const ExtendedYoungDiagram&, Corner);
    friend ExtendedYoungDiagram toggle_convex(const ExtendedYoungDiagram&, Corner);

    void trim() {
        while (!ys_.empty() && ys_.back() == charge_) ys_.pop_back();
    }

    int charge_ = 1;
    std::vector<int> ys_;
};

using EYD = ExtendedYoungDiagram;

inline std::vector<Corner> corners(const EYD& T) {
    std::vector<Corner> out{{0, T.y(0), CornerKind::concave}};
    const long m = static_cast<long>(T.ys().size());
    for (long t = 0; t < m; ++t) {
        const int a = T.y(t), b = T.y(t + 1);
        if (a < b) {
            out.push_back({static_cast<int>(t + 1), a, CornerKind::convex});
            out.push_back({static_cast<int>(t + 1), b, CornerKind::concave});
        }
    }
    return out;
}

inline bool has_corner(const EYD& T, const Corner& c) {
    auto cs = corners(T);
    return std::find(cs.begin(), cs.end(), c) != cs.end();
}

inline ExtendedYoungDiagram toggle_concave(const EYD& T, Corner c) {
    if (c.kind != CornerKind::concave || !has_corner(T, c)) throw NotASiteError("not a concave corner of the diagram");
    EYD out = T;
    if (static_cast<std::size_t>(c.x) >= out.ys_.size()) out.ys_.resize(c.x + 1, out.charge_);
    out.ys_[c.x] -= 1;
    out.trim();
    return out;
}

inline ExtendedYoungDiagram toggle_convex(const EYD& T, Corner c) {
    if (c.kind != CornerKind::convex || !has_corner(T, c)) throw NotASiteError("not a convex corner of the diagram");
    EYD out = T;
    out.ys_[c.x - 1] += 1;
    out.trim();
    return out;
}

inline DoubleIndex eyd_point(const AdaptedSequence& seq, const PTable& P, FoldMap map, int k, int s, int i, int j) {
    return {static_cast<int>(s + P(i + j) + std::min(k - j, i)), fold(map, seq.n(), i + j)};
}

inline LinearForm assign_eyd(const AdaptedSequence& seq, const EYD& T, int s) {
    if (s < 1) throw DomainError("s must be >= 1");
    const Family fam = seq.family();
    if (fam != Family::A1 && fam != Family::D2)
        throw FamilyMismatchError("extended Young diagrams assign only for A1 and D2");
    const int k = T.charge();
    if (k < 1 || k > seq.n()) throw DomainError("charge outside the index set");
    const FoldMap map = fold_for(fam);
    const PTable P(seq, map, k);
    LinearForm f;
    for (const Corner& c : corners(T))
        f.add(eyd_point(seq, P, map, k, s, c.x, c.y), c.kind == CornerKind::concave ? 1 : -1);
    return f;
}

inline LinearForm assign_a1(const AdaptedSequence& seq, const EYD& T, int s) {
    if (seq.family() != Family::A1) throw FamilyMismatchError("assign_a1 needs an A1 sequence");
    return assign_eyd(seq, T, s);
}

inline LinearForm assign_d2(const AdaptedSequence& seq, const EYD& T, int s) {
    if (seq.family() != Family::D2) throw FamilyMismatchError("assign_d2 needs a D2 sequence");
    return assign_eyd(seq, T, s);
}

inline std::set<EYD> enumerate_eyd(int k, int max_boxes, std::size_t cap = 2'000'000) {
    if (max_boxes < 0) throw DomainError("max_boxes must be >= 0");
    std::set<EYD> all{EYD(k)};
    std::set<EYD> frontier = all;
    for (int b = 0; b < max_boxes; ++b) {
        std::set<EYD> next;
        for (const auto& T : frontier)
            for (const Corner& c : corners(T))
                if (c.kind == CornerKind::concave) next.insert(toggle_concave(T, c));
        all.insert(next.begin(), next.end());
        if (all.size() > cap) throw ResourceLimitError("enumerate_eyd", all.size());
        frontier = std::move(next);
    }
    return all;
}

// rows from y = charge downward; "[]" is a box between y_t and the charge line
inline std::string render_ascii(const EYD& T) {
    const int k = T.charge();
    const int m = static_cast<int>(T.ys().size());
    int lo = k;
    for (int v : T.ys()) lo = std::min(lo, v);
    std::string out = "charge " + std::to_string(k) + "\n";
    std::string rule = "      +";
    for (int t = 0; t <= m; ++t) rule += "--";
    out += rule + "\n";
    for (int y = k; y > lo; --y) {
        std::string label = std::to_string(y);
        out += std::string(5 - std::min<std::size_t>(5, label.size()), ' ') + label + " |";
        for (int t = 0; t < m; ++t)
            if (T.y(t) <= y - 1) out += "[]";
        out += "\n";
    }
    if (lo == k) out += "      | (empty)\n";
    return out;
}

}  // namespace polyreal
