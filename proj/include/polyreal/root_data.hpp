#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace polyreal {

enum class Family { A1, C1, A2, D2 };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::A1: return "A1";
        case Family::C1: return "C1";
        case Family::A2: return "A2";
        case Family::D2: return "D2";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    if (s == "A1") return Family::A1;
    if (s == "C1") return Family::C1;
    if (s == "A2") return Family::A2;
    if (s == "D2") return Family::D2;
    throw DomainError("unknown family '" + std::string(s) + "'");
}

struct AlgebraType {
    Family family = Family::A1;
    int n = 2;
    bool operator==(const AlgebraType&) const = default;
};

inline int minimum_rank(Family f) { return f == Family::A1 ? 2 : 3; }

// floor modulus, result in [0, m)
inline int fmod_pos(long t, int m) {
    long r = t % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

class RootSystem {
public:
    RootSystem() = default;
    RootSystem(AlgebraType algebra, std::vector<int> cartan) : algebra_(algebra), cartan_(std::move(cartan)) {}

    const AlgebraType& algebra() const noexcept { return algebra_; }
    Family family() const noexcept { return algebra_.family; }
    int n() const noexcept { return algebra_.n; }
    int a(int i, int j) const { return cartan_[(i - 1) * algebra_.n + (j - 1)]; }
    bool adjacent(int i, int j) const { return i != j && a(i, j) < 0; }

    std::vector<int> neighbors(int l) const {
        std::vector<int> out;
        for (int j = 1; j <= n(); ++j)
            if (adjacent(l, j)) out.push_back(j);
        return out;
    }

private:
    AlgebraType algebra_;
    std::vector<int> cartan_;
};

inline RootSystem build_root_system(AlgebraType algebra) {
    const int n = algebra.n;
    if (n < minimum_rank(algebra.family)) throw RankError(to_string(algebra.family), minimum_rank(algebra.family));

    std::vector<int> c(static_cast<std::size_t>(n) * n, 0);
    auto set = [&](int i, int j, int v) { c[(i - 1) * n + (j - 1)] = v; };
    for (int i = 1; i <= n; ++i) set(i, i, 2);

    if (algebra.family == Family::A1) {
        if (n == 2) {
            set(1, 2, -2);
            set(2, 1, -2);
        } else {
            for (int i = 1; i <= n; ++i) {
                int j = i % n + 1;
                set(i, j, -1);
                set(j, i, -1);
            }
        }
        return RootSystem(algebra, std::move(c));
    }

    for (int i = 1; i < n; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
    }
    switch (algebra.family) {
        case Family::C1:
            set(2, 1, -2);
            set(n - 1, n, -2);
            break;
        case Family::A2:
            set(2, 1, -2);
            set(n, n - 1, -2);
            break;
        case Family::D2:
            set(1, 2, -2);
            set(n, n - 1, -2);
            break;
        default: break;
    }
    return RootSystem(algebra, std::move(c));
}

enum class FoldMap { overline, pi, pi1, pi2, pi_prime };

inline std::string to_string(FoldMap m) {
    switch (m) {
        case FoldMap::overline: return "overline";
        case FoldMap::pi: return "pi";
        case FoldMap::pi1: return "pi1";
        case FoldMap::pi2: return "pi2";
        case FoldMap::pi_prime: return "pi_prime";
    }
    return "?";
}

inline int fold_period(FoldMap m, int n) {
    switch (m) {
        case FoldMap::overline: return n;
        case FoldMap::pi:
        case FoldMap::pi_prime: return 2 * n - 2;
        case FoldMap::pi1: return 2 * n - 1;
        case FoldMap::pi2: return 2 * n;
    }
    return n;
}

inline int fold(FoldMap m, int n, long t) {
    if (m == FoldMap::pi_prime && t < 1) throw DomainError("pi_prime is defined for t >= 1 only");
    const int r = fmod_pos(t - 1, fold_period(m, n)) + 1;
    switch (m) {
        case FoldMap::overline: return r;
        case FoldMap::pi:
        case FoldMap::pi_prime:
        case FoldMap::pi1: return r <= n ? r : 2 * n - r;
        case FoldMap::pi2: return r <= n ? r : 2 * n + 1 - r;
    }
    return r;
}

inline FoldMap fold_for(Family f) {
    switch (f) {
        case Family::A1: return FoldMap::overline;
        case Family::D2: return FoldMap::pi;
        case Family::A2: return FoldMap::pi1;
        case Family::C1: return FoldMap::pi2;
    }
    return FoldMap::overline;
}

struct DoubleIndex {
    int s = 1;
    int l = 1;
    auto operator<=>(const DoubleIndex&) const = default;
};

class AdaptedSequence {
public:
    AdaptedSequence() = default;

    const RootSystem& root_system() const noexcept { return rs_; }
    Family family() const noexcept { return rs_.family(); }
    int n() const noexcept { return rs_.n(); }
    int length() const noexcept { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const noexcept { return word_; }
    int a(int i, int j) const { return rs_.a(i, j); }

    int color(long j) const { return word_[fmod_pos(j - 1, length())]; }

    int p(int i, int j) const {
        int v = p_[(i - 1) * n() + (j - 1)];
        if (v < 0) throw DomainError("p is undefined for non-adjacent pair (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
        return v;
    }

    int occurrences(int l) const { return static_cast<int>(positions_[l - 1].size()); }

    DoubleIndex to_pair(long j) const {
        const int L = length();
        const long q = (j - 1) / L;
        const int r = static_cast<int>((j - 1) % L);
        const int l = word_[r];
        return {static_cast<int>(q * occurrences(l) + rank_[r] + 1), l};
    }

    long to_index(DoubleIndex d) const {
        const auto& pos = positions_[d.l - 1];
        const long c = static_cast<long>(pos.size());
        return ((d.s - 1) / c) * length() + pos[(d.s - 1) % c];
    }

    // next/previous position of the same color; 0 when there is none
    long next_same(long j) const { return to_index({to_pair(j).s + 1, color(j)}); }
    long prev_same(long j) const {
        DoubleIndex d = to_pair(j);
        return d.s == 1 ? 0 : to_index({d.s - 1, d.l});
    }

private:
    friend AdaptedSequence build_adapted(const RootSystem&, std::vector<int>);

    RootSystem rs_;
    std::vector<int> word_;
    std::vector<int> p_;
    std::vector<std::vector<int>> positions_;
    std::vector<int> rank_;
};

inline AdaptedSequence build_adapted(const RootSystem& rs, std::vector<int> word) {
    const int n = rs.n();
    if (word.empty()) throw DomainError("word must be nonempty");
    for (int x : word)
        if (x < 1 || x > n) throw DomainError("word entry " + std::to_string(x) + " outside 1.." + std::to_string(n));

    AdaptedSequence seq;
    seq.rs_ = rs;
    seq.positions_.assign(n, {});
    seq.rank_.resize(word.size());
    for (std::size_t r = 0; r < word.size(); ++r) {
        auto& pos = seq.positions_[word[r] - 1];
        seq.rank_[r] = static_cast<int>(pos.size());
        pos.push_back(static_cast<int>(r) + 1);
    }
    for (int l = 1; l <= n; ++l)
        if (seq.positions_[l - 1].empty()) throw MissingIndexError(l);
    const std::size_t L = word.size();
    for (std::size_t r = 0; r < L; ++r)
        if (word[r] == word[(r + 1) % L]) throw ConsecutiveRepeatError(static_cast<int>(r) + 1);

    seq.p_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (!rs.adjacent(i, j)) continue;
            std::vector<int> window;
            for (std::size_t r = 0; r < L; ++r)
                if (word[r] == i || word[r] == j) window.push_back(static_cast<int>(r) + 1);
            for (std::size_t r = 0; r < window.size(); ++r) {
                if (word[window[r] - 1] == word[window[(r + 1) % window.size()] - 1])
                    throw NotAdaptedError(i, j, window);
            }
            const int first = word[window.front() - 1];
            seq.p_[(i - 1) * n + (j - 1)] = first == i ? 1 : 0;
            seq.p_[(j - 1) * n + (i - 1)] = first == j ? 1 : 0;
        }
    }
    seq.word_ = std::move(word);
    return seq;
}

inline DoubleIndex index_to_pair(const AdaptedSequence& seq, long j) { return seq.to_pair(j); }
inline long pair_to_index(const AdaptedSequence& seq, DoubleIndex d) { return seq.to_index(d); }

// P^k(t) with O(1) lookups: the increments are periodic in t, so one period
// on each side of k is tabulated up front.
class PTable {
public:
    PTable(const AdaptedSequence& seq, FoldMap variant, int k) : variant_(variant), k_(k) {
        const int n = seq.n();
        if (k < 1 || k > n) throw DomainError("charge k outside the index set");
        period_ = fold_period(variant, n);
        auto pp = [&](int a, int b) { return a == b ? 0 : seq.p(a, b); };
        up_.assign(period_ + 1, 0);
        down_.assign(period_ + 1, 0);
        for (int r = 1; r <= period_; ++r) {
            long t = k + r;
            up_[r] = up_[r - 1] + pp(fold(variant, n, t), fold(variant, n, t - 1));
            if (variant != FoldMap::pi_prime) {
                long u = k - r;
                down_[r] = down_[r - 1] + pp(fold(variant, n, u), fold(variant, n, u + 1));
            }
        }
    }

    long operator()(long t) const {
        if (variant_ == FoldMap::pi_prime && t < k_) throw DomainError("wall offsets are defined for t >= k only");
        const long m = t - k_;
        const auto& tab = m >= 0 ? up_ : down_;
        const long d = m >= 0 ? m : -m;
        return (d / period_) * tab[period_] + tab[d % period_];
    }

    int k() const noexcept { return k_; }
    FoldMap variant() const noexcept { return variant_; }

private:
    FoldMap variant_;
    int k_;
    int period_ = 1;
    std::vector<long> up_, down_;
};

inline long p_table(const AdaptedSequence& seq, FoldMap variant, int k, long t) {
    return PTable(seq, variant, k)(t);
}

}  // namespace polyreal
