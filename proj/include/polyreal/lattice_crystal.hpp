#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "root_data.hpp"

namespace polyreal {

class LatticeElement {
public:
    LatticeElement() = default;

    static LatticeElement unit(long j, long v = 1) {
        LatticeElement a;
        a.add(j, v);
        return a;
    }

    long get(long j) const {
        auto it = entries_.find(j);
        return it == entries_.end() ? 0 : it->second;
    }

    void add(long j, long delta) {
        if (delta == 0) return;
        long v = (entries_[j] += delta);
        if (v == 0) entries_.erase(j);
    }

    void set(long j, long v) {
        if (v == 0)
            entries_.erase(j);
        else
            entries_[j] = v;
    }

    const std::map<long, long>& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    long max_support() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

    long total() const {
        long t = 0;
        for (auto& [j, v] : entries_) t += v;
        return t;
    }

    auto operator<=>(const LatticeElement&) const = default;
    bool operator==(const LatticeElement&) const = default;

private:
    std::map<long, long> entries_;
};

struct WeightVector {
    // coeffs[i-1] is the coefficient of -alpha_i
    std::vector<long> coeffs;
    long operator[](int i) const { return coeffs[i - 1]; }
    bool operator==(const WeightVector&) const = default;
};

inline long sigma(const AdaptedSequence& seq, const LatticeElement& a, long k) {
    const int ik = seq.color(k);
    long s = a.get(k);
    for (auto it = a.entries().upper_bound(k); it != a.entries().end(); ++it)
        s += seq.a(ik, seq.color(it->first)) * it->second;
    return s;
}

namespace detail {

// sigma_1..sigma_N in one backward sweep; out[0] unused
inline std::vector<long> sigma_prefix(const AdaptedSequence& seq, const LatticeElement& a, long N) {
    const int n = seq.n();
    std::vector<long> tot(n + 1, 0), out(N + 1, 0);
    for (auto it = a.entries().upper_bound(N); it != a.entries().end(); ++it) tot[seq.color(it->first)] += it->second;
    for (long k = N; k >= 1; --k) {
        const int c = seq.color(k);
        const long ak = a.get(k);
        long s = ak;
        for (int l = 1; l <= n; ++l)
            if (tot[l] != 0) s += seq.a(c, l) * tot[l];
        out[k] = s;
        tot[c] += ak;
    }
    return out;
}

inline long scan_limit(const AdaptedSequence& seq, const LatticeElement& a) {
    return a.max_support() + seq.length() + 1;
}

}  // namespace detail

inline long epsilon(const AdaptedSequence& seq, const LatticeElement& a, int i) {
    const long N = detail::scan_limit(seq, a);
    auto sg = detail::sigma_prefix(seq, a, N);
    long best = 0;
    for (long k = 1; k <= N; ++k)
        if (seq.color(k) == i) best = std::max(best, sg[k]);
    return best;
}

inline WeightVector weight(const AdaptedSequence& seq, const LatticeElement& a) {
    WeightVector w{std::vector<long>(seq.n(), 0)};
    for (auto& [j, v] : a.entries()) w.coeffs[seq.color(j) - 1] += v;
    return w;
}

inline long pairing(const AdaptedSequence& seq, int i, const WeightVector& w) {
    long s = 0;
    for (int c = 1; c <= seq.n(); ++c) s -= seq.a(i, c) * w[c];
    return s;
}

inline long phi(const AdaptedSequence& seq, const LatticeElement& a, int i) {
    return pairing(seq, i, weight(seq, a)) + epsilon(seq, a, i);
}

inline LatticeElement ftilde(const AdaptedSequence& seq, const LatticeElement& a, int i) {
    const long N = detail::scan_limit(seq, a);
    auto sg = detail::sigma_prefix(seq, a, N);
    long best = 0;
    for (long k = 1; k <= N; ++k)
        if (seq.color(k) == i) best = std::max(best, sg[k]);
    for (long k = 1; k <= N; ++k) {
        if (seq.color(k) == i && sg[k] == best) {
            LatticeElement out = a;
            out.add(k, 1);
            return out;
        }
    }
    throw Error("ftilde: no minimal position found");  // unreachable: scan window covers a full period past the support
}

inline std::optional<LatticeElement> etilde(const AdaptedSequence& seq, const LatticeElement& a, int i) {
    const long N = detail::scan_limit(seq, a);
    auto sg = detail::sigma_prefix(seq, a, N);
    long best = 0;
    for (long k = 1; k <= N; ++k)
        if (seq.color(k) == i) best = std::max(best, sg[k]);
    if (best == 0) return std::nullopt;
    for (long k = N; k >= 1; --k) {
        if (seq.color(k) == i && sg[k] == best) {
            LatticeElement out = a;
            out.add(k, -1);
            return out;
        }
    }
    return std::nullopt;
}

// f~ word applied right to left, as in f_{i_1} ... f_{i_m} 0
inline LatticeElement apply_f_word(const AdaptedSequence& seq, const std::vector<int>& word,
                                   LatticeElement a = {}) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) a = ftilde(seq, a, *it);
    return a;
}

inline std::set<LatticeElement> enumerate_image(const AdaptedSequence& seq, int max_word_length,
                                                std::size_t cap = 2'000'000) {
    if (max_word_length < 0) throw DomainError("max_word_length must be >= 0");
    std::set<LatticeElement> all{LatticeElement{}};
    std::set<LatticeElement> frontier{LatticeElement{}};
    for (int m = 0; m < max_word_length; ++m) {
        std::set<LatticeElement> next;
        for (const auto& a : frontier)
            for (int i = 1; i <= seq.n(); ++i) next.insert(ftilde(seq, a, i));
        all.insert(next.begin(), next.end());
        if (all.size() > cap) throw ResourceLimitError("enumerate_image", all.size());
        frontier = std::move(next);
    }
    return all;
}

}  // namespace polyreal
