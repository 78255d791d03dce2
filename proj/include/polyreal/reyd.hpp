#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "forms.hpp"
#include "root_data.hpp"

namespace polyreal {

enum class ReydFlavor { A2, D2target };

inline std::string to_string(ReydFlavor f) { return f == ReydFlavor::A2 ? "A2" : "D2target"; }

inline ReydFlavor parse_reyd_flavor(const std::string& s) {
    if (s == "A2") return ReydFlavor::A2;
    if (s == "D2target") return ReydFlavor::D2target;
    throw DomainError("unknown REYD flavor '" + s + "'");
}

// Stored as a window [t_lo, t_lo + ys.size()) of values; outside the window the
// sequence agrees with the empty diagram k + min(t, 0).
class RevisedEYD {
public:
    RevisedEYD() = default;
    RevisedEYD(ReydFlavor flavor, int n, int k, long t_lo = 0, std::vector<int> ys = {})
        : flavor_(flavor), n_(n), k_(k), t_lo_(t_lo), ys_(std::move(ys)) {
        if (n < 3) throw RankError(to_string(flavor), 3);
        if (flavor == ReydFlavor::A2 && (k < 2 || k > n)) throw DomainError("A2 REYD needs 2 <= k <= n");
        if (flavor == ReydFlavor::D2target && (k < 2 || k > n - 1)) throw DomainError("D2target REYD needs 1 < k < n");
        canonicalize();
    }

    ReydFlavor flavor() const noexcept { return flavor_; }
    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    long t_lo() const noexcept { return t_lo_; }
    long t_hi() const noexcept { return t_lo_ + static_cast<long>(ys_.size()) - 1; }
    const std::vector<int>& ys() const noexcept { return ys_; }

    int base(long t) const { return k_ + static_cast<int>(std::min(t, 0L)); }
    int y(long t) const {
        if (t < t_lo_ || t > t_hi()) return base(t);
        return ys_[t - t_lo_];
    }

    int modulus() const { return flavor_ == ReydFlavor::A2 ? 2 * n_ - 1 : 2 * n_; }

    bool special(long t) const {
        const int r = fmod_pos(k_ + t, modulus());
        return r == 0 || (flavor_ == ReydFlavor::D2target && r == n_);
    }

    long units() const {
        long u = 0;
        for (long t = t_lo_; t <= t_hi(); ++t) u += base(t) - y(t);
        return u;
    }

    RevisedEYD with_value(long t, int v) const {
        RevisedEYD out = *this;
        if (out.ys_.empty()) {
            out.t_lo_ = t;
            out.ys_.push_back(base(t));
        }
        while (t < out.t_lo_) {
            out.ys_.insert(out.ys_.begin(), base(out.t_lo_ - 1));
            --out.t_lo_;
        }
        while (t > out.t_hi()) out.ys_.push_back(base(out.t_hi() + 1));
        out.ys_[t - out.t_lo_] = v;
        out.canonicalize();
        return out;
    }

    auto operator<=>(const RevisedEYD&) const = default;
    bool operator==(const RevisedEYD&) const = default;

private:
    void canonicalize() {
        std::size_t lead = 0;
        while (lead < ys_.size() && ys_[lead] == base(t_lo_ + static_cast<long>(lead))) ++lead;
        ys_.erase(ys_.begin(), ys_.begin() + static_cast<long>(lead));
        t_lo_ += static_cast<long>(lead);
        while (!ys_.empty() && ys_.back() == base(t_hi())) ys_.pop_back();
        if (ys_.empty()) t_lo_ = 0;
    }

    ReydFlavor flavor_ = ReydFlavor::A2;
    int n_ = 3;
    int k_ = 2;
    long t_lo_ = 0;
    std::vector<int> ys_;
};

struct ReydViolation {
    int condition;
    long t;
    bool operator==(const ReydViolation&) const = default;
};

inline std::vector<ReydViolation> validate(const RevisedEYD& T) {
    std::vector<ReydViolation> out;
    const long M = T.modulus();
    const long lo = std::min(T.t_lo(), 0L) - M - 1, hi = std::max(T.t_hi(), 0L) + M + 1;
    for (long t = lo; t <= hi; ++t) {
        const int d = T.y(t + 1) - T.y(t);
        if (!T.special(t)) {
            if (d != 0 && d != 1) out.push_back({3, t});
        } else if (t > 0) {
            if (d < 0) out.push_back({4, t});
        } else if (t < 0) {
            if (d > 1) out.push_back({5, t});
        }
    }
    return out;
}

inline bool is_valid(const RevisedEYD& T) { return validate(T).empty(); }

enum class PointRole { admissible, removable };
enum class Multiplicity { single, double_ };

struct MarkedPoint {
    long x = 0;
    int y = 0;
    PointRole role = PointRole::admissible;
    Multiplicity multiplicity = Multiplicity::single;
    int color = 1;
    bool operator==(const MarkedPoint&) const = default;
};

namespace detail {

inline FoldMap reyd_fold(ReydFlavor f) { return f == ReydFlavor::A2 ? FoldMap::pi1 : FoldMap::pi2; }

// l values of the double conditions: {0} for A2, {0, n} for D2target
inline std::vector<int> double_classes(const RevisedEYD& T) {
    if (T.flavor() == ReydFlavor::A2) return {0};
    return {0, T.n()};
}

inline bool congruent(long a, long b, int m) { return fmod_pos(a - b, m) == 0; }

}  // namespace detail

inline std::vector<MarkedPoint> classify_points(const RevisedEYD& T) {
    std::vector<MarkedPoint> out;
    const int k = T.k(), n = T.n(), M = T.modulus();
    const FoldMap map = detail::reyd_fold(T.flavor());
    const long lo = std::min(T.t_lo(), 0L) - M - 1, hi = std::max(T.t_hi(), 0L) + M + 2;
    for (long i = lo; i <= hi; ++i) {
        const int yi = T.y(i);
        if (is_valid(T.with_value(i, yi - 1))) {
            MarkedPoint p{i, yi, PointRole::admissible, Multiplicity::single, fold(map, n, i + k)};
            if (T.y(i - 1) < yi && yi == T.y(i + 1)) {
                for (int l : detail::double_classes(T)) {
                    if ((detail::congruent(i + k, l + 1, M) && i < 0) || (detail::congruent(i + k, l, M) && i > 0)) {
                        p.multiplicity = Multiplicity::double_;
                        p.color = fold(map, n, l);
                    }
                }
            }
            out.push_back(p);
        }
        const int yp = T.y(i - 1);
        if (is_valid(T.with_value(i - 1, yp + 1))) {
            MarkedPoint p{i, yp, PointRole::removable, Multiplicity::single, fold(map, n, i + k - 1)};
            if (T.y(i - 2) == yp && yp < T.y(i)) {
                for (int l : detail::double_classes(T)) {
                    if ((detail::congruent(i + k - 1, l + 1, M) && i > 1) ||
                        (detail::congruent(i + k - 1, l, M) && i < 1)) {
                        p.multiplicity = Multiplicity::double_;
                        p.color = fold(map, n, l);
                    }
                }
            }
            out.push_back(p);
        }
    }
    return out;
}

inline DoubleIndex reyd_admissible_index(const AdaptedSequence& seq, const PTable& P, FoldMap map, int k, int s,
                                         long i, int j) {
    return {static_cast<int>(s + P(i + k) + std::min(i, 0L) + k - j), fold(map, seq.n(), i + k)};
}

inline DoubleIndex reyd_removable_index(const AdaptedSequence& seq, const PTable& P, FoldMap map, int k, int s,
                                        long i, int j) {
    return {static_cast<int>(s + P(i + k - 1) + std::min(i - 1, 0L) + k - j), fold(map, seq.n(), i + k - 1)};
}

inline LinearForm assign(const AdaptedSequence& seq, const RevisedEYD& T, int s) {
    if (s < 1) throw DomainError("s must be >= 1");
    const Family want = T.flavor() == ReydFlavor::A2 ? Family::A2 : Family::C1;
    if (seq.family() != want)
        throw FamilyMismatchError(to_string(T.flavor()) + " diagrams assign for family " + to_string(want));
    if (seq.n() != T.n()) throw FamilyMismatchError("rank of the diagram differs from the sequence");
    const FoldMap map = detail::reyd_fold(T.flavor());
    const PTable P(seq, map, T.k());
    LinearForm f;
    for (const MarkedPoint& p : classify_points(T)) {
        const long c = p.multiplicity == Multiplicity::double_ ? 2 : 1;
        if (p.role == PointRole::admissible)
            f.add(reyd_admissible_index(seq, P, map, T.k(), s, p.x, p.y), c);
        else
            f.add(reyd_removable_index(seq, P, map, T.k(), s, p.x, p.y), -c);
    }
    return f;
}

inline RevisedEYD toggle_unit(const RevisedEYD& T, const MarkedPoint& point) {
    auto pts = classify_points(T);
    auto hit = std::find_if(pts.begin(), pts.end(), [&](const MarkedPoint& p) {
        return p.x == point.x && p.y == point.y && p.role == point.role;
    });
    if (hit == pts.end()) throw NotASiteError("point is not marked in the diagram");
    if (point.role == PointRole::admissible) return T.with_value(point.x, point.y - 1);
    return T.with_value(point.x - 1, point.y + 1);
}

inline std::set<RevisedEYD> enumerate_reyd(ReydFlavor flavor, int n, int k, int max_units,
                                           std::size_t cap = 2'000'000) {
    if (max_units < 0) throw DomainError("max_units must be >= 0");
    std::set<RevisedEYD> all{RevisedEYD(flavor, n, k)};
    std::set<RevisedEYD> frontier = all;
    for (int u = 0; u < max_units; ++u) {
        std::set<RevisedEYD> next;
        for (const auto& T : frontier)
            for (const MarkedPoint& p : classify_points(T))
                if (p.role == PointRole::admissible) next.insert(T.with_value(p.x, p.y - 1));
        all.insert(next.begin(), next.end());
        if (all.size() > cap) throw ResourceLimitError("enumerate_reyd", all.size());
        frontier = std::move(next);
    }
    return all;
}

// half-plane picture: "##" cells belong to the empty diagram, "[]" are added units
inline std::string render_ascii(const RevisedEYD& T) {
    const int k = T.k();
    const long lo = std::min(T.t_lo(), 0L) - 2, hi = std::max(T.t_hi(), 0L) + 1;
    int ymin = k;
    for (long t = lo; t <= hi; ++t) ymin = std::min(ymin, T.y(t));
    std::string out = to_string(T.flavor()) + " n=" + std::to_string(T.n()) + " k=" + std::to_string(k) +
                      " columns " + std::to_string(lo) + ".." + std::to_string(hi) + "\n";
    for (int y = k; y > ymin; --y) {
        std::string label = std::to_string(y);
        out += std::string(5 - std::min<std::size_t>(5, label.size()), ' ') + label + " |";
        for (long t = lo; t <= hi; ++t) {
            const bool filled = T.y(t) <= y - 1;
            const bool staircase = T.base(t) <= y - 1;
            out += !filled ? "  " : (staircase ? "##" : "[]");
        }
        out += "\n";
    }
    return out;
}

}  // namespace polyreal
