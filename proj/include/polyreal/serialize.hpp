#pragma once

#include <json.hpp>

#include "eyd.hpp"
#include "forms.hpp"
#include "lattice_crystal.hpp"
#include "reyd.hpp"
#include "root_data.hpp"
#include "verify.hpp"
#include "young_wall.hpp"

namespace polyreal {

using json = nlohmann::json;

inline void to_json(json& j, const AlgebraType& a) { j = json{{"family", to_string(a.family)}, {"n", a.n}}; }
inline void from_json(const json& j, AlgebraType& a) {
    a.family = parse_family(j.at("family").get<std::string>());
    a.n = j.at("n").get<int>();
}

inline void to_json(json& j, const AdaptedSequence& seq) { j = json{{"word", seq.word()}}; }

inline AdaptedSequence adapted_from_json(const RootSystem& rs, const json& j) {
    return build_adapted(rs, j.at("word").get<std::vector<int>>());
}

inline void to_json(json& j, const LatticeElement& a) {
    j = json::array();
    for (auto& [k, v] : a.entries()) j.push_back({k, v});
}
inline void from_json(const json& j, LatticeElement& a) {
    a = LatticeElement{};
    for (auto& e : j) a.add(e.at(0).get<long>(), e.at(1).get<long>());
}

inline void to_json(json& j, const WeightVector& w) {
    j = json::object();
    for (std::size_t i = 0; i < w.coeffs.size(); ++i) j[std::to_string(i + 1)] = w.coeffs[i];
}

inline void to_json(json& j, const DoubleIndex& d) { j = json{{"s", d.s}, {"l", d.l}}; }

inline void to_json(json& j, const LinearForm& f) {
    json terms = json::array();
    for (auto& [d, c] : f.terms()) terms.push_back({{"s", d.s}, {"l", d.l}, {"c", c}});
    j = json{{"terms", terms}};
}
inline void from_json(const json& j, LinearForm& f) {
    f = LinearForm{};
    for (auto& t : j.at("terms")) f.add({t.at("s").get<int>(), t.at("l").get<int>()}, t.at("c").get<long>());
}

inline void to_json(json& j, const ExtendedYoungDiagram& T) { j = json{{"charge", T.charge()}, {"ys", T.ys()}}; }
inline void from_json(const json& j, ExtendedYoungDiagram& T) {
    T = ExtendedYoungDiagram(j.at("charge").get<int>(), j.value("ys", std::vector<int>{}));
}

inline void to_json(json& j, const Corner& c) {
    j = json{{"x", c.x}, {"y", c.y}, {"kind", c.kind == CornerKind::concave ? "concave" : "convex"},
             {"diagonal", c.diagonal()}};
}

inline void to_json(json& j, const RevisedEYD& T) {
    j = json{{"flavor", to_string(T.flavor())}, {"n", T.n()}, {"k", T.k()}, {"t_lo", T.t_lo()}, {"ys", T.ys()}};
}
inline void from_json(const json& j, RevisedEYD& T) {
    T = RevisedEYD(parse_reyd_flavor(j.at("flavor").get<std::string>()), j.at("n").get<int>(), j.at("k").get<int>(),
                   j.value("t_lo", 0L), j.value("ys", std::vector<int>{}));
}

inline const char* multiplicity_name(Multiplicity m) { return m == Multiplicity::double_ ? "double" : "single"; }

inline void to_json(json& j, const MarkedPoint& p) {
    j = json{{"x", p.x},
             {"y", p.y},
             {"role", p.role == PointRole::admissible ? "admissible" : "removable"},
             {"multiplicity", multiplicity_name(p.multiplicity)},
             {"color", p.color}};
}

inline void to_json(json& j, const YoungWall& Y) {
    j = json{{"family", to_string(Y.kind().family)},
             {"n", Y.kind().n},
             {"ground", Y.kind().ground},
             {"halves", Y.halves()}};
}
inline void from_json(const json& j, YoungWall& Y) {
    WallKind K{parse_wall_family(j.at("family").get<std::string>()), j.at("n").get<int>(), j.value("ground", 1)};
    Y = YoungWall(K, j.value("halves", std::vector<int>{}));
}

inline void to_json(json& j, const WallSite& s) {
    static const char* halves[] = {"unit", "bottom", "top"};
    j = json{{"column", s.column},
             {"row", s.row},
             {"half", halves[static_cast<int>(s.half)]},
             {"role", s.role == SiteRole::admissible_slot ? "admissible_slot" : "removable_block"},
             {"multiplicity", multiplicity_name(s.multiplicity)},
             {"color", s.color}};
}

inline void to_json(json& j, const VerificationReport& r) {
    j = json{{"check", r.check},
             {"params", r.params},
             {"status", to_string(r.status)},
             {"counts", r.counts},
             {"witnesses", r.witnesses}};
}

}  // namespace polyreal
