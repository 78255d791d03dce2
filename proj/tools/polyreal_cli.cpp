#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyreal/polyreal.hpp"
#include "polyreal/serialize.hpp"

namespace {

using namespace polyreal;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconclusive = 3;

struct Common {
    std::string family = "A1";
    int n = 3;
    std::string word;
    bool json = false;
};

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw DomainError("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw DomainError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<int> default_word(int n) {
    if (n == 2) return {1, 2};
    std::vector<int> w{2, 1};
    for (int i = 3; i <= n; ++i) w.push_back(i);
    return w;
}

AdaptedSequence make_seq(const Common& c) {
    auto rs = build_root_system({parse_family(c.family), c.n});
    return build_adapted(rs, c.word.empty() ? default_word(c.n) : parse_list(c.word));
}

json header(const AdaptedSequence& seq) {
    return json{{"family", to_string(seq.family())}, {"n", seq.n()}, {"word", seq.word()}};
}

std::vector<int> charges(const AdaptedSequence& seq, int k) {
    if (k > 0) {
        if (k > seq.n()) throw DomainError("k outside the index set");
        return {k};
    }
    std::vector<int> ks;
    for (int i = 1; i <= seq.n(); ++i) ks.push_back(i);
    return ks;
}

std::string pair_string(const AdaptedSequence& seq, const LatticeElement& a) {
    std::string s = "{";
    bool first = true;
    for (auto& [j, v] : a.entries()) {
        auto d = seq.to_pair(j);
        s += (first ? "" : ", ") + std::string("(") + std::to_string(d.s) + "," + std::to_string(d.l) + "):" +
             std::to_string(v);
        first = false;
    }
    return s + "}";
}

// extended Young diagrams with at most `side` columns and depth at most `side`
std::set<LinearForm> square_forms(const AdaptedSequence& seq, int k, int s, int side) {
    if (generator_kind(seq.family(), seq.n(), k) != GeneratorKind::eyd)
        throw DomainError("--square applies to extended Young diagrams only");
    std::set<LinearForm> out;
    for (const auto& T : enumerate_eyd(k, side * side)) {
        if (static_cast<int>(T.ys().size()) > side) continue;
        if (!T.ys().empty() && k - T.ys().front() > side) continue;
        out.insert(assign_eyd(seq, T, s));
    }
    return out;
}

int report_exit(const std::vector<VerificationReport>& reports) {
    bool inconclusive = false;
    for (auto& r : reports) {
        if (r.status == Status::fail) return exit_fail;
        if (r.status == Status::inconclusive) inconclusive = true;
    }
    return inconclusive ? exit_inconclusive : exit_ok;
}

void print_report(const VerificationReport& r) {
    std::cout << r.check << " " << to_string(r.status);
    for (auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
    std::cout << "\n ";
    for (auto& [k, v] : r.counts) std::cout << " " << k << "=" << v;
    std::cout << "\n";
    for (auto& w : r.witnesses) std::cout << "  ! " << w << "\n";
}

json read_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw DomainError("cannot open " + arg.substr(1));
        return json::parse(in);
    }
    return json::parse(arg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polyhedral realizations of B(infinity) for affine types A1, C1, A2, D2"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", c.family, "A1, C1, A2 or D2")->check(CLI::IsMember({"A1", "C1", "A2", "D2"}));
        sub->add_option("--n", c.n, "rank parameter, index set {1..n}");
        sub->add_option("--word", c.word, "adapted word i_1,i_2,...; default 2,1,3,...,n");
        sub->add_flag("--json", c.json, "machine-readable output");
    };

    // inequalities
    int k = 0, s = 1, bound = 2;
    bool symbolic = false, square = false;
    auto* ineq = app.add_subcommand("inequalities", "generator-family forms L(T) >= 0");
    add_common(ineq);
    ineq->add_option("--k", k, "charge; all charges when omitted");
    ineq->add_option("--s", s, "occurrence offset s >= 1");
    ineq->add_option("--bound", bound, "object size bound (boxes, units or blocks)");
    ineq->add_flag("--symbolic", symbolic, "write indices relative to s");
    ineq->add_flag("--square", square, "diagram families: objects inside a bound x bound square instead of by size");

    // verify
    std::string check = "all";
    int depth = -1, weight_bound = 4, max_boxes = 6, max_halves = 8, max_size = -1, max_s = -1;
    long window = -1;
    auto* ver = app.add_subcommand("verify", "run verification checks");
    add_common(ver);
    ver->add_option("check", check, "step-identities, closure, image, axioms, positivity or all")
        ->check(CLI::IsMember({"step-identities", "closure", "image", "axioms", "positivity", "all"}));
    ver->add_option("--k", k, "charge for closure; all when omitted");
    ver->add_option("--s", s, "s for closure");
    ver->add_option("--depth,--dep", depth, "closure/positivity depth or axiom sample depth");
    ver->add_option("--w", weight_bound, "max weight for the image check");
    ver->add_option("--max-boxes", max_boxes, "step identities: boxes/units bound");
    ver->add_option("--max-halves", max_halves, "step identities: wall half bound");
    ver->add_option("--max-size", max_size, "image check: generator object bound");
    ver->add_option("--max-s", max_s, "image/positivity: largest s");
    ver->add_option("--window", window, "image check: candidate support window");

    // crystal
    std::string apply;
    bool enumerate_flag = false;
    int crystal_depth = 2;
    auto* cry = app.add_subcommand("crystal", "Kashiwara operators on the lattice");
    add_common(cry);
    cry->add_option("--apply", apply, "operator word such as 'f1 f2 e1', applied right to left to 0");
    cry->add_flag("--enumerate", enumerate_flag, "list the f-reachable set");
    cry->add_option("--depth", crystal_depth, "enumeration depth");

    // render and enumerate share object options
    std::string object = "eyd", ys, halves, flavor, from_json;
    int charge = 1, ground = 1, max_units = 3;
    long t_lo = 0;
    auto add_object = [&](CLI::App* sub) {
        sub->add_option("object", object, "eyd, reyd or wall")->check(CLI::IsMember({"eyd", "reyd", "wall"}));
        sub->add_option("--charge,--k", charge, "charge k");
        sub->add_option("--flavor", flavor, "A2 or D2target (reyd); defaults from --family");
        sub->add_option("--ground", ground, "wall ground state 1 or n");
    };
    auto* ren = app.add_subcommand("render", "draw a diagram or wall");
    add_common(ren);
    add_object(ren);
    ren->add_option("--ys", ys, "diagram values");
    ren->add_option("--t-lo", t_lo, "first stored position of a revised diagram");
    ren->add_option("--halves", halves, "wall column heights in halves, column 1 first");
    ren->add_option("--from-json", from_json, "object as JSON text or @file");
    ren->add_option("--s", s, "s for the assigned form");

    auto* enu = app.add_subcommand("enumerate", "list generator objects with their forms");
    add_common(enu);
    add_object(enu);
    enu->add_option("--max", max_units, "bound: boxes, units, or wall halves");
    enu->add_option("--s", s, "s for the assigned forms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*ineq) {
            if (s < 1 || bound < 0) throw DomainError("need s >= 1 and bound >= 0");
            auto seq = make_seq(c);
            json out = header(seq);
            out["s"] = s;
            out["bound"] = bound;
            out["charges"] = json::array();
            for (int kk : charges(seq, k)) {
                auto forms = square ? square_forms(seq, kk, s, bound) : generated_forms(seq, kk, s, bound);
                if (c.json) {
                    out["charges"].push_back(
                        {{"k", kk}, {"generator", to_string(generator_kind(seq.family(), seq.n(), kk))}, {"forms", forms}});
                } else {
                    std::cout << "# k=" << kk << " (" << to_string(generator_kind(seq.family(), seq.n(), kk))
                              << (square ? ", square <= " : ", size <= ") << bound << ")\n";
                    for (auto& f : forms) std::cout << to_string(f, symbolic ? s : 0) << " >= 0\n";
                }
            }
            if (c.json) std::cout << out.dump(2) << "\n";
            return exit_ok;
        }

        if (*ver) {
            auto seq = make_seq(c);
            std::vector<VerificationReport> reports;
            const bool all = check == "all";
            if (all || check == "step-identities") {
                StepBounds b;
                b.max_boxes = max_boxes;
                b.max_halves = max_halves;
                for (auto& r : check_all_step_identities(seq, b)) reports.push_back(r);
            }
            if (all || check == "closure")
                for (int kk : charges(seq, k)) reports.push_back(check_closure_equality(seq, s, kk, depth < 0 ? 4 : depth));
            if (all || check == "image") {
                ImageBounds b;
                b.max_size = max_size;
                b.max_s = max_s;
                b.window = window;
                reports.push_back(check_image_equality(seq, weight_bound, b));
            }
            if (all || check == "axioms")
                reports.push_back(check_crystal_axioms(seq, enumerate_image(seq, depth < 0 ? 4 : depth)));
            if (all || check == "positivity")
                reports.push_back(check_positivity(seq, depth < 0 ? 6 : depth, max_s < 0 ? 2 : max_s));
            if (c.json) {
                std::cout << json{{"reports", reports}}.dump(2) << "\n";
            } else {
                for (auto& r : reports) print_report(r);
            }
            return report_exit(reports);
        }

        if (*cry) {
            auto seq = make_seq(c);
            if (enumerate_flag) {
                auto image = enumerate_image(seq, crystal_depth);
                if (c.json) {
                    std::cout << json{{"depth", crystal_depth}, {"elements", image}}.dump(2) << "\n";
                } else {
                    std::cout << image.size() << " elements\n";
                    for (auto& a : image) std::cout << to_string(a) << "  " << pair_string(seq, a) << "\n";
                }
                return exit_ok;
            }
            std::vector<std::string> ops;
            {
                std::string tok;
                for (char ch : apply + " ") {
                    if (ch == ' ' || ch == ',') {
                        if (!tok.empty()) ops.push_back(tok);
                        tok.clear();
                    } else {
                        tok += ch;
                    }
                }
            }
            std::optional<LatticeElement> a = LatticeElement{};
            for (auto it = ops.rbegin(); it != ops.rend() && a; ++it) {
                const std::string& op = *it;
                if (op.size() < 2 || (op[0] != 'f' && op[0] != 'e')) throw DomainError("bad operator '" + op + "'");
                std::size_t used = 0;
                int i = 0;
                try {
                    i = std::stoi(op.substr(1), &used);
                } catch (const std::exception&) {
                    throw DomainError("bad operator '" + op + "'");
                }
                if (used != op.size() - 1 || i < 1 || i > seq.n()) throw DomainError("bad operator '" + op + "'");
                a = op[0] == 'f' ? std::optional<LatticeElement>(ftilde(seq, *a, i)) : etilde(seq, *a, i);
            }
            if (c.json) {
                json out = header(seq);
                out["result"] = a ? json(*a) : json(nullptr);
                if (a) {
                    out["weight"] = weight(seq, *a);
                    json eps = json::object(), ph = json::object();
                    for (int i = 1; i <= seq.n(); ++i) {
                        eps[std::to_string(i)] = epsilon(seq, *a, i);
                        ph[std::to_string(i)] = phi(seq, *a, i);
                    }
                    out["epsilon"] = eps;
                    out["phi"] = ph;
                }
                std::cout << out.dump(2) << "\n";
            } else if (!a) {
                std::cout << "null\n";
            } else {
                std::cout << "single: " << to_string(*a) << "\n";
                std::cout << "double: " << pair_string(seq, *a) << "\n";
                std::cout << "eps:";
                for (int i = 1; i <= seq.n(); ++i) std::cout << " " << epsilon(seq, *a, i);
                std::cout << "\nphi:";
                for (int i = 1; i <= seq.n(); ++i) std::cout << " " << phi(seq, *a, i);
                std::cout << "\n";
            }
            return exit_ok;
        }

        const Family fam = parse_family(c.family);
        auto wall_kind = [&]() {
            if (fam != Family::A2 && fam != Family::C1) throw DomainError("walls need --family A2 or C1");
            return WallKind{fam == Family::A2 ? WallFamily::A2wall : WallFamily::D2wall, c.n, ground};
        };
        auto reyd_flavor = [&]() {
            if (!flavor.empty()) return parse_reyd_flavor(flavor);
            if (fam != Family::A2 && fam != Family::C1) throw DomainError("revised diagrams need --family A2 or C1");
            return reyd_flavor_for(fam);
        };
        auto optional_seq = [&]() -> std::optional<AdaptedSequence> {
            try {
                return make_seq(c);
            } catch (const Error&) {
                return std::nullopt;
            }
        };

        if (*ren) {
            json obj;
            std::string text;
            std::optional<LinearForm> form;
            auto seq = optional_seq();
            if (object == "eyd") {
                EYD T = from_json.empty() ? EYD(charge, parse_list(ys)) : read_json_arg(from_json).get<EYD>();
                obj = T;
                text = render_ascii(T);
                for (auto& cn : corners(T))
                    text += std::string(cn.kind == CornerKind::concave ? "concave" : "convex ") + " (" +
                            std::to_string(cn.x) + "," + std::to_string(cn.y) + ")\n";
                if (seq && (seq->family() == Family::A1 || seq->family() == Family::D2) && T.charge() <= seq->n())
                    form = assign_eyd(*seq, T, s);
            } else if (object == "reyd") {
                RevisedEYD T = from_json.empty() ? RevisedEYD(reyd_flavor(), c.n, charge, t_lo, parse_list(ys))
                                                 : read_json_arg(from_json).get<RevisedEYD>();
                if (!is_valid(T)) throw DomainError("not a valid revised extended Young diagram");
                obj = T;
                text = render_ascii(T);
                for (auto& p : classify_points(T))
                    text += std::string(multiplicity_name(p.multiplicity)) + " " + std::to_string(p.color) +
                            (p.role == PointRole::admissible ? "-admissible" : "-removable") + " (" +
                            std::to_string(p.x) + "," + std::to_string(p.y) + ")\n";
                if (seq && seq->n() == T.n() &&
                    seq->family() == (T.flavor() == ReydFlavor::A2 ? Family::A2 : Family::C1))
                    form = assign(*seq, T, s);
            } else {
                YoungWall Y = from_json.empty() ? YoungWall(wall_kind(), parse_list(halves))
                                                : read_json_arg(from_json).get<YoungWall>();
                if (!is_proper(Y)) throw DomainError("not a proper Young wall");
                obj = Y;
                text = render_ascii(Y);
                for (auto& st : classify_sites(Y))
                    text += std::string(multiplicity_name(st.multiplicity)) + " " + std::to_string(st.color) +
                            (st.role == SiteRole::admissible_slot ? "-admissible slot" : "-removable block") +
                            " column " + std::to_string(st.column) + " row " + std::to_string(st.row) + "\n";
                if (seq && seq->n() == Y.kind().n &&
                    seq->family() == (Y.kind().family == WallFamily::A2wall ? Family::A2 : Family::C1))
                    form = assign_wall(*seq, Y, s);
            }
            if (c.json) {
                std::cout << obj.dump() << "\n";
            } else {
                std::cout << text;
                if (form) std::cout << "L = " << to_string(*form) << "\n";
            }
            return exit_ok;
        }

        if (*enu) {
            auto seq = optional_seq();
            json out = json::array();
            auto emit = [&](const json& o, std::optional<LinearForm> f, const std::string& label) {
                if (c.json) {
                    out.push_back({{"object", o}, {"form", f ? json(*f) : json(nullptr)}});
                } else {
                    std::cout << label << (f ? "  ->  " + to_string(*f) : "") << "\n";
                }
            };
            if (object == "eyd") {
                for (auto& T : enumerate_eyd(charge, max_units)) {
                    std::optional<LinearForm> f;
                    if (seq && (seq->family() == Family::A1 || seq->family() == Family::D2)) f = assign_eyd(*seq, T, s);
                    emit(T, f, json(T).dump());
                }
            } else if (object == "reyd") {
                const ReydFlavor fl = reyd_flavor();
                for (auto& T : enumerate_reyd(fl, c.n, charge, max_units)) {
                    std::optional<LinearForm> f;
                    if (seq && seq->family() == (fl == ReydFlavor::A2 ? Family::A2 : Family::C1)) f = assign(*seq, T, s);
                    emit(T, f, json(T).dump());
                }
            } else {
                for (auto& Y : enumerate_walls(wall_kind(), max_units)) {
                    std::optional<LinearForm> f;
                    if (seq) f = assign_wall(*seq, Y, s);
                    emit(Y, f, json(Y).dump());
                }
            }
            if (c.json) std::cout << out.dump(2) << "\n";
            return exit_ok;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
