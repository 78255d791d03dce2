#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lattice_crystal.hpp"
#include "root_data.hpp"

namespace polyreal {

class LinearForm {
public:
    using Term = std::pair<DoubleIndex, long>;

    LinearForm() = default;

    static LinearForm var(int s, int l, long c = 1) {
        LinearForm f;
        f.add({s, l}, c);
        return f;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    long coeff(DoubleIndex d) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                                   [](const Term& t, const DoubleIndex& x) { return t.first < x; });
        return it != terms_.end() && it->first == d ? it->second : 0;
    }

    void add(DoubleIndex d, long c) {
        if (c == 0) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                                   [](const Term& t, const DoubleIndex& x) { return t.first < x; });
        if (it != terms_.end() && it->first == d) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else {
            terms_.insert(it, {d, c});
        }
    }

    LinearForm& add_scaled(const LinearForm& o, long m) {
        if (m == 0 || o.terms_.empty()) return *this;
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.cbegin();
        auto b = o.terms_.cbegin();
        while (a != terms_.cend() || b != o.terms_.cend()) {
            if (b == o.terms_.cend() || (a != terms_.cend() && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == terms_.cend() || b->first < a->first) {
                out.push_back({b->first, m * b->second});
                ++b;
            } else {
                long c = a->second + m * b->second;
                if (c != 0) out.push_back({a->first, c});
                ++a;
                ++b;
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    LinearForm& operator+=(const LinearForm& o) { return add_scaled(o, 1); }
    LinearForm& operator-=(const LinearForm& o) { return add_scaled(o, -1); }
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(long m, const LinearForm& f) { return LinearForm{}.add_scaled(f, m); }
    LinearForm operator-() const { return LinearForm{}.add_scaled(*this, -1); }

    long max_index(const AdaptedSequence& seq) const {
        long m = 0;
        for (auto& [d, c] : terms_) m = std::max(m, seq.to_index(d));
        return m;
    }

    int min_s() const {
        int m = 0;
        for (auto& [d, c] : terms_) m = m == 0 ? d.s : std::min(m, d.s);
        return m;
    }

    // the same form with every s-component moved by delta
    LinearForm shifted(int delta) const {
        LinearForm f = *this;
        for (auto& [d, c] : f.terms_) d.s += delta;
        return f;
    }

    auto operator<=>(const LinearForm&) const = default;
    bool operator==(const LinearForm&) const = default;

private:
    std::vector<Term> terms_;
};

// "x[2,2] + x[1,3] - x[2,1]"; with base_s > 0 the s-slot is written relative to it, e.g. x[s+1,2]
inline std::string to_string(const LinearForm& f, int base_s = 0) {
    if (f.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [d, c] : f.terms()) {
        long mag = c < 0 ? -c : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1) out += std::to_string(mag);
        std::string s;
        if (base_s > 0) {
            int off = d.s - base_s;
            s = off == 0 ? "s" : (off > 0 ? "s+" + std::to_string(off) : "s" + std::to_string(off));
        } else {
            s = std::to_string(d.s);
        }
        out += "x[" + s + "," + std::to_string(d.l) + "]";
        first = false;
    }
    return out;
}

inline LinearForm beta_pair(const AdaptedSequence& seq, int s, int l) {
    if (s < 1) throw DomainError("beta_pair requires s >= 1");
    LinearForm f;
    f.add({s, l}, 1);
    f.add({s + 1, l}, 1);
    for (int j = 1; j <= seq.n(); ++j)
        if (seq.root_system().adjacent(l, j)) f.add({s + seq.p(j, l), j}, seq.a(l, j));
    return f;
}

inline LinearForm beta_index(const AdaptedSequence& seq, long j) {
    if (j < 0) throw DomainError("beta_index requires j >= 0");
    LinearForm f;
    if (j == 0) return f;
    const int ik = seq.color(j);
    const long kp = seq.next_same(j);
    f.add(seq.to_pair(j), 1);
    for (long m = j + 1; m < kp; ++m) f.add(seq.to_pair(m), seq.a(ik, seq.color(m)));
    f.add(seq.to_pair(kp), 1);
    return f;
}

inline LinearForm s_prime(const AdaptedSequence& seq, const LinearForm& form, DoubleIndex d) {
    const long c = form.coeff(d);
    if (c > 0) return form - beta_pair(seq, d.s, d.l);
    if (c < 0 && d.s > 1) return form + beta_pair(seq, d.s - 1, d.l);
    return form;
}

inline long evaluate(const AdaptedSequence& seq, const LinearForm& form, const LatticeElement& a) {
    long v = 0;
    for (auto& [d, c] : form.terms()) v += c * a.get(seq.to_index(d));
    return v;
}

struct ClosureResult {
    std::set<LinearForm> forms;
    // forms reached but past the index bound; never expanded
    std::set<LinearForm> pruned_forms;
    std::size_t pruned = 0;
};

struct ClosureOptions {
    unsigned threads = 1;
    std::size_t cap = 5'000'000;
};

inline ClosureResult closure(const AdaptedSequence& seq, const std::set<LinearForm>& seeds, int depth,
                             long index_bound, ClosureOptions opt = {}) {
    if (depth < 0) throw DomainError("closure depth must be >= 0");
    for (auto& f : seeds)
        if (f.max_index(seq) > index_bound) throw DomainError("seed " + to_string(f) + " exceeds the index bound");

    ClosureResult res;
    res.forms = seeds;
    std::set<LinearForm>& pruned = res.pruned_forms;
    std::vector<LinearForm> frontier(seeds.begin(), seeds.end());
    const unsigned threads = std::max(1u, opt.threads);

    auto expand = [&](std::size_t lo, std::size_t hi, std::vector<LinearForm>& out) {
        for (std::size_t r = lo; r < hi; ++r) {
            const LinearForm& f = frontier[r];
            for (auto& [d, c] : f.terms()) {
                LinearForm g = s_prime(seq, f, d);
                if (g != f) out.push_back(std::move(g));
            }
        }
    };

    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<std::vector<LinearForm>> parts(threads);
        if (threads == 1 || frontier.size() < 2 * threads) {
            expand(0, frontier.size(), parts[0]);
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (frontier.size() + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                std::size_t lo = std::min(frontier.size(), t * chunk), hi = std::min(frontier.size(), lo + chunk);
                pool.emplace_back(expand, lo, hi, std::ref(parts[t]));
            }
            for (auto& th : pool) th.join();
        }
        std::vector<LinearForm> next;
        for (auto& part : parts) {
            for (auto& g : part) {
                if (res.forms.count(g) || pruned.count(g)) continue;
                if (g.max_index(seq) > index_bound) {
                    pruned.insert(std::move(g));
                    continue;
                }
                res.forms.insert(g);
                next.push_back(std::move(g));
            }
        }
        if (res.forms.size() > opt.cap) throw ResourceLimitError("closure", res.forms.size());
        frontier = std::move(next);
    }
    res.pruned = pruned.size();
    return res;
}

struct PositivityReport {
    bool pass = true;
    std::size_t scanned = 0;
    std::vector<std::pair<LinearForm, DoubleIndex>> witnesses;
};

inline PositivityReport check_xi_positivity(const AdaptedSequence&, const std::set<LinearForm>& forms) {
    PositivityReport r;
    for (auto& f : forms) {
        ++r.scanned;
        for (auto& [d, c] : f.terms()) {
            if (d.s == 1 && c < 0) {
                r.pass = false;
                r.witnesses.push_back({f, d});
            }
        }
    }
    return r;
}

}  // namespace polyreal
