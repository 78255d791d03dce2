#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forms.hpp"
#include "generators.hpp"
#include "lattice_crystal.hpp"

namespace polyreal {

enum class Status { pass, fail, inconclusive };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

struct VerificationReport {
    std::string check;
    std::map<std::string, std::string> params;
    Status status = Status::pass;
    std::map<std::string, long> counts;
    std::vector<std::string> witnesses;

    static constexpr std::size_t max_witnesses = 20;

    void witness(std::string w) {
        status = Status::fail;
        ++counts["failures"];
        if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
    }
};

inline std::string word_string(const std::vector<int>& w) {
    std::string s;
    for (std::size_t r = 0; r < w.size(); ++r) s += (r ? "," : "") + std::to_string(w[r]);
    return s;
}

inline std::string to_string(const LatticeElement& a) {
    std::string s = "{";
    bool first = true;
    for (auto& [j, v] : a.entries()) {
        s += (first ? "" : ", ") + std::to_string(j) + ":" + std::to_string(v);
        first = false;
    }
    return s + "}";
}

namespace detail {

inline VerificationReport make_report(const std::string& check, const AdaptedSequence& seq) {
    VerificationReport r;
    r.check = check;
    r.params["family"] = to_string(seq.family());
    r.params["n"] = std::to_string(seq.n());
    r.params["word"] = word_string(seq.word());
    r.counts["failures"] = 0;
    return r;
}

inline bool beta_at(const AdaptedSequence& seq, DoubleIndex d, LinearForm& out) {
    if (d.s < 1) return false;
    out = beta_pair(seq, d.s, d.l);
    return true;
}

inline void expect_step(VerificationReport& r, const AdaptedSequence& seq, const LinearForm& before,
                        const LinearForm& after, DoubleIndex d, int sign, const std::string& what) {
    ++r.counts["toggles"];
    LinearForm beta;
    if (!beta_at(seq, d, beta)) {
        r.witness(what + ": beta index (" + std::to_string(d.s) + "," + std::to_string(d.l) + ") has s < 1");
        return;
    }
    if (after - before != sign * beta)
        r.witness(what + ": difference " + to_string(after - before) + " != " + to_string(sign * beta));
}

}  // namespace detail

struct StepBounds {
    int max_boxes = 6;   // diagrams and revised diagrams
    int max_halves = 8;  // walls
    std::vector<int> s_values{1, 2};
};

namespace detail {

inline void step_eyd(VerificationReport& r, const AdaptedSequence& seq, int k, int s, int max_boxes) {
    const FoldMap map = fold_for(seq.family());
    const PTable P(seq, map, k);
    for (const auto& T : enumerate_eyd(k, max_boxes)) {
        ++r.counts["objects"];
        const LinearForm base = assign_eyd(seq, T, s);
        for (const Corner& c : corners(T)) {
            const std::string what = "k=" + std::to_string(k) + " s=" + std::to_string(s) + " corner (" +
                                     std::to_string(c.x) + "," + std::to_string(c.y) + ")";
            if (c.kind == CornerKind::concave)
                expect_step(r, seq, base, assign_eyd(seq, toggle_concave(T, c), s),
                            eyd_point(seq, P, map, k, s, c.x, c.y), -1, what);
            else
                expect_step(r, seq, base, assign_eyd(seq, toggle_convex(T, c), s),
                            eyd_point(seq, P, map, k, s, c.x - 1, c.y + 1), 1, what);
        }
    }
}

inline void step_reyd(VerificationReport& r, const AdaptedSequence& seq, int k, int s, int max_units) {
    const ReydFlavor flavor = reyd_flavor_for(seq.family());
    const FoldMap map = detail::reyd_fold(flavor);
    const PTable P(seq, map, k);
    for (const auto& T : enumerate_reyd(flavor, seq.n(), k, max_units)) {
        ++r.counts["objects"];
        const LinearForm base = assign(seq, T, s);
        for (const MarkedPoint& p : classify_points(T)) {
            const std::string what = "k=" + std::to_string(k) + " s=" + std::to_string(s) + " point (" +
                                     std::to_string(p.x) + "," + std::to_string(p.y) + ")";
            const LinearForm next = assign(seq, toggle_unit(T, p), s);
            if (p.role == PointRole::admissible)
                expect_step(r, seq, base, next, reyd_admissible_index(seq, P, map, k, s, p.x, p.y), -1, what);
            else
                expect_step(r, seq, base, next, reyd_removable_index(seq, P, map, k, s, p.x, p.y + 1), 1, what);
        }
    }
}

inline void step_wall(VerificationReport& r, const AdaptedSequence& seq, int k, int s, int max_halves) {
    const WallKind K = wall_kind_for(seq.family(), seq.n(), k);
    const PTable P(seq, FoldMap::pi_prime, k);
    for (const auto& Y : enumerate_walls(K, max_halves)) {
        ++r.counts["objects"];
        const LinearForm base = assign_wall(seq, Y, s);
        for (const WallSite& site : classify_sites(Y)) {
            const std::string what = "k=" + std::to_string(k) + " s=" + std::to_string(s) + " column " +
                                     std::to_string(site.column) + " row " + std::to_string(site.row);
            const LinearForm next = assign_wall(seq, toggle_block(Y, site), s);
            const int sign = site.role == SiteRole::admissible_slot ? -1 : 1;
            expect_step(r, seq, base, next, wall_slot_index(P, K, s, site.column, site.row), sign, what);
        }
    }
}

}  // namespace detail

inline VerificationReport check_step_identities(const AdaptedSequence& seq, GeneratorKind generator,
                                                const StepBounds& bounds = {}) {
    auto r = detail::make_report("step-identities", seq);
    r.params["generator"] = to_string(generator);
    r.params["max_boxes"] = std::to_string(bounds.max_boxes);
    r.params["max_halves"] = std::to_string(bounds.max_halves);
    r.counts["toggles"] = 0;
    r.counts["objects"] = 0;
    const int n = seq.n();
    for (int k = 1; k <= n; ++k) {
        if (generator_kind(seq.family(), n, k) != generator) continue;
        ++r.counts["charges"];
        for (int s : bounds.s_values) {
            switch (generator) {
                case GeneratorKind::eyd: detail::step_eyd(r, seq, k, s, bounds.max_boxes); break;
                case GeneratorKind::reyd: detail::step_reyd(r, seq, k, s, bounds.max_boxes); break;
                case GeneratorKind::wall: detail::step_wall(r, seq, k, s, bounds.max_halves); break;
            }
        }
    }
    return r;
}

// every generator kind the family uses
inline std::vector<VerificationReport> check_all_step_identities(const AdaptedSequence& seq,
                                                                 const StepBounds& bounds = {}) {
    std::set<GeneratorKind> kinds;
    for (int k = 1; k <= seq.n(); ++k) kinds.insert(generator_kind(seq.family(), seq.n(), k));
    std::vector<VerificationReport> out;
    for (GeneratorKind g : kinds) out.push_back(check_step_identities(seq, g, bounds));
    return out;
}

inline long default_index_bound(const AdaptedSequence& seq, int depth) {
    return static_cast<long>(seq.length()) * (depth + 2);
}

inline VerificationReport check_closure_equality(const AdaptedSequence& seq, int s, int k, int depth,
                                                 long index_bound = 0) {
    auto r = detail::make_report("closure", seq);
    if (index_bound <= 0) index_bound = default_index_bound(seq, depth) + static_cast<long>(seq.length()) * (s - 1);
    r.params["s"] = std::to_string(s);
    r.params["k"] = std::to_string(k);
    r.params["depth"] = std::to_string(depth);
    r.params["index_bound"] = std::to_string(index_bound);

    const auto A = closure(seq, {LinearForm::var(s, k)}, depth, index_bound);
    const auto B = generated_forms(seq, k, s, depth);
    r.counts["closure_forms"] = static_cast<long>(A.forms.size());
    r.counts["generator_forms"] = static_cast<long>(B.size());
    r.counts["pruned"] = static_cast<long>(A.pruned);

    std::vector<LinearForm> only_a, only_b;
    std::set_difference(A.forms.begin(), A.forms.end(), B.begin(), B.end(), std::back_inserter(only_a));
    std::set_difference(B.begin(), B.end(), A.forms.begin(), A.forms.end(), std::back_inserter(only_b));
    r.counts["closure_only"] = static_cast<long>(only_a.size());
    r.counts["generator_only"] = static_cast<long>(only_b.size());
    for (auto& f : only_a) r.witness("closure only: " + to_string(f));
    for (auto& f : only_b) {
        if (A.pruned_forms.count(f)) continue;
        r.witness("generator only: " + to_string(f));
    }
    if (r.status == Status::fail && A.pruned > 0) r.status = Status::inconclusive;
    return r;
}

struct ImageBounds {
    int max_size = -1;  // generator objects; default max_weight + 2
    int max_s = -1;     // default max_weight + 1
    long window = -1;   // candidate support window; default L * max_weight
};

inline VerificationReport check_image_equality(const AdaptedSequence& seq, int max_weight, ImageBounds b = {}) {
    auto r = detail::make_report("image", seq);
    if (b.max_size < 0) b.max_size = max_weight + 2;
    if (b.max_s < 0) b.max_s = max_weight + 1;
    if (b.window < 0) b.window = static_cast<long>(seq.length()) * max_weight;
    r.params["max_weight"] = std::to_string(max_weight);
    r.params["max_size"] = std::to_string(b.max_size);
    r.params["max_s"] = std::to_string(b.max_s);
    r.params["window"] = std::to_string(b.window);

    std::set<LinearForm> forms;
    for (int k = 1; k <= seq.n(); ++k) {
        auto base = generated_forms(seq, k, 1, b.max_size);
        for (int s = 1; s <= b.max_s; ++s)
            for (auto& f : base) forms.insert(f.shifted(s - 1));
    }
    r.counts["forms"] = static_cast<long>(forms.size());

    // forms just past the truncation that could still cut the candidate window
    std::set<LinearForm> beyond;
    for (int k = 1; k <= seq.n(); ++k) {
        auto base = generated_forms(seq, k, 1, b.max_size + 1);
        for (int s = 1; s <= b.max_s + 1; ++s)
            for (auto& f : base) {
                LinearForm g = f.shifted(s - 1);
                if (!forms.count(g) && g.max_index(seq) <= b.window) beyond.insert(g);
            }
    }
    r.counts["pruned"] = static_cast<long>(beyond.size());

    const auto image = enumerate_image(seq, max_weight);
    r.counts["image"] = static_cast<long>(image.size());
    long forward = 0;
    for (const auto& a : image) {
        for (const auto& f : forms) {
            if (evaluate(seq, f, a) < 0) {
                ++forward;
                r.witness("forward: " + to_string(f) + " < 0 at " + to_string(a));
            }
        }
    }
    r.counts["forward_violations"] = forward;

    // all nonnegative vectors on positions 1..window with entry sum <= max_weight
    long candidates = 0, converse = 0;
    LatticeElement a;
    auto visit = [&]() {
        ++candidates;
        if (image.count(a)) return;
        for (const auto& f : forms)
            if (evaluate(seq, f, a) < 0) return;
        ++converse;
        if (r.witnesses.size() < VerificationReport::max_witnesses)
            r.witnesses.push_back("converse: " + to_string(a) + " satisfies every form but is not in the image");
    };
    std::vector<long> stack;
    auto rec = [&](auto&& self, long from, int left) -> void {
        visit();
        if (left == 0) return;
        for (long j = from; j <= b.window; ++j) {
            a.add(j, 1);
            self(self, j, left - 1);
            a.add(j, -1);
        }
    };
    rec(rec, 1, max_weight);
    r.counts["candidates"] = candidates;
    r.counts["converse_violations"] = converse;
    if (forward > 0)
        r.status = Status::fail;
    else if (converse > 0) {
        r.counts["failures"] += converse;
        r.status = beyond.empty() ? Status::fail : Status::inconclusive;
    }
    return r;
}

inline VerificationReport check_crystal_axioms(const AdaptedSequence& seq, const std::set<LatticeElement>& sample) {
    auto r = detail::make_report("crystal-axioms", seq);
    r.counts["elements"] = static_cast<long>(sample.size());
    const int n = seq.n();
    for (const auto& a : sample) {
        const std::string at = " at " + to_string(a);
        for (auto& [j, v] : a.entries())
            if (v < 0) r.witness("negative entry" + at);
        const WeightVector w = weight(seq, a);
        for (int i = 1; i <= n; ++i) {
            ++r.counts["checks"];
            const std::string ai = " (i=" + std::to_string(i) + ")" + at;
            const long e = epsilon(seq, a, i), p = phi(seq, a, i);
            if (p != e + pairing(seq, i, w)) r.witness("phi != eps + <h,wt>" + ai);

            const LatticeElement b = ftilde(seq, a, i);
            WeightVector wb = w;
            wb.coeffs[i - 1] += 1;
            if (weight(seq, b) != wb) r.witness("wt(f a) != wt(a) - alpha" + ai);
            if (epsilon(seq, b, i) != e + 1) r.witness("eps(f a) != eps(a) + 1" + ai);
            if (phi(seq, b, i) != p - 1) r.witness("phi(f a) != phi(a) - 1" + ai);
            auto back = etilde(seq, b, i);
            if (!back || *back != a) r.witness("e f a != a" + ai);

            auto c = etilde(seq, a, i);
            if ((e == 0) != !c) r.witness("e a null iff eps = 0 fails" + ai);
            if (c) {
                if (ftilde(seq, *c, i) != a) r.witness("f e a != a" + ai);
                WeightVector wc = w;
                wc.coeffs[i - 1] -= 1;
                if (weight(seq, *c) != wc) r.witness("wt(e a) != wt(a) + alpha" + ai);
                if (epsilon(seq, *c, i) != e - 1) r.witness("eps(e a) != eps(a) - 1" + ai);
                if (phi(seq, *c, i) != p + 1) r.witness("phi(e a) != phi(a) + 1" + ai);
            }
        }
    }
    return r;
}

inline VerificationReport check_positivity(const AdaptedSequence& seq, int depth, int max_s = 2) {
    auto r = detail::make_report("positivity", seq);
    r.params["depth"] = std::to_string(depth);
    r.params["max_s"] = std::to_string(max_s);
    std::set<LinearForm> all;
    long pruned = 0;
    for (int k = 1; k <= seq.n(); ++k) {
        for (int s = 1; s <= max_s; ++s) {
            const long bound = default_index_bound(seq, depth) + static_cast<long>(seq.length()) * (s - 1);
            auto res = closure(seq, {LinearForm::var(s, k)}, depth, bound);
            all.insert(res.forms.begin(), res.forms.end());
            all.insert(res.pruned_forms.begin(), res.pruned_forms.end());
            pruned += static_cast<long>(res.pruned);
        }
    }
    r.counts["forms"] = static_cast<long>(all.size());
    r.counts["pruned"] = pruned;
    auto pos = check_xi_positivity(seq, all);
    for (auto& [f, d] : pos.witnesses)
        r.witness("negative coefficient at (1," + std::to_string(d.l) + ") in " + to_string(f));
    return r;
}

}  // namespace polyreal
