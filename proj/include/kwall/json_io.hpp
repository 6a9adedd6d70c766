#pragma once

// JSON (de)serialization. Rationals travel as "p/q" strings (plain "p"
// for integers); polynomials as coefficient arrays, lowest degree first.

#include "kwall/azflag.hpp"
#include "kwall/kclass.hpp"
#include "kwall/lct.hpp"
#include "kwall/vgit.hpp"
#include "kwall/wps.hpp"

#include <json.hpp>

namespace kwall {

using json = nlohmann::json;

inline json to_json(const Rat& r) { return r.str(); }
inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" string");
}

inline json to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
}
inline std::vector<Rat> rats_from_json(const json& j) {
    std::vector<Rat> v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

inline json to_json(const Poly& p) { return to_json(p.coeffs()); }

inline json to_json(const WPPlane& plane) {
    return json{{"weights", {plane.weight(0), plane.weight(1), plane.weight(2)}},
                {"labels", {plane.label(0), plane.label(1), plane.label(2)}}};
}

inline json to_json(const FamilyPoint& p) {
    return json{{"n", p.n}, {"a", to_json(p.a)}, {"ai", to_json(p.ai)}};
}
inline FamilyPoint family_point_from_json(const json& j) {
    return FamilyPoint(j.at("n").get<long>(), rat_from_json(j.at("a")),
                       rats_from_json(j.at("ai")));
}

inline json to_json(const OneParamSubgroup& l) { return json{{"d", l.d}, {"b", l.b}}; }

inline json to_json(const GitVerdict& v) {
    json j{{"semistable", v.semistable}, {"polystable", v.polystable}};
    j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
    return j;
}

inline json to_json(const WallSchedule& s) {
    json walls = json::array(), labels = json::array();
    for (const auto& [label, value] : s.walls) {
        labels.push_back(label);
        walls.push_back(to_json(value));
    }
    return json{{"n", s.n}, {"walls", walls}, {"labels", labels},
                {"domain_end", to_json(s.domain_end)}};
}

inline json to_json(const WSet& s) {
    switch (s.kind) {
        case WSet::Kind::empty: return json{{"type", "empty"}};
        case WSet::Kind::singleton: return json{{"type", "singleton"}, {"at", to_json(s.lo)}};
        case WSet::Kind::interval:
            return json{{"type", "interval"},
                        {"lo", to_json(s.lo)},
                        {"hi", to_json(s.hi)},
                        {"lo_closed", s.lo_closed},
                        {"hi_closed", s.hi_closed}};
    }
    return json{};
}

inline json to_json(const StabilityVerdict& v) {
    json j{{"ss", to_json(v.semistable)}, {"ps", to_json(v.polystable)}, {"row", v.table_row}};
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

inline const char* curve_case_name(CurveCase c) {
    switch (c) {
        case CurveCase::a_nonzero: return "a_nonzero";
        case CurveCase::a_zero_a0_nonzero: return "a_zero_a0_nonzero";
        case CurveCase::reducible: return "reducible";
        case CurveCase::all_zero: return "all_zero";
    }
    return "?";
}

inline json to_json(const LctReport& r) {
    json j{{"lct", to_json(r.lct)},
           {"case", curve_case_name(r.profile.case_tag)},
           {"mult", r.profile.mult},
           {"sum_mult", r.profile.sum_mult},
           {"is_dss", r.is_dss}};
    j["t"] = r.profile.t ? json(*r.profile.t) : json(nullptr);
    j["m0"] = r.profile.m0 ? json(*r.profile.m0) : json(nullptr);
    j["singularity"] = r.singularity ? json(*r.singularity) : json(nullptr);
    j["along_h"] = r.along_h ? to_json(*r.along_h) : json(nullptr);
    if (r.dss_rescale)
        j["dss_rescale"] = json{to_json(r.dss_rescale->first), to_json(r.dss_rescale->second)};
    return j;
}

inline const char* pair_kind_name(PairKind k) {
    switch (k) {
        case PairKind::monomial_de: return "monomial_de";
        case PairKind::dss_pair: return "dss_pair";
        case PairKind::w0_d0: return "w0_d0";
        case PairKind::w0_d1: return "w0_d1";
        case PairKind::wprime_h0_d0: return "wprime_h0_d0";
        case PairKind::wprime_h0_d1: return "wprime_h0_d1";
    }
    return "?";
}

inline json to_json(const PolystablePair& p) {
    json j{{"kind", pair_kind_name(p.kind)}, {"n", p.n}};
    if (p.kind == PairKind::monomial_de) j["e"] = p.e;
    if (!p.b.empty()) j["b"] = to_json(p.b);
    return j;
}

inline json to_json(const WallDegeneration& d) {
    return json{{"pair", to_json(d.pair)}, {"lambda", to_json(d.lambda)}};
}

inline json to_json(const Stratum& s) {
    json j;
    switch (s.kind) {
        case Stratum::Kind::empty_below: j["kind"] = "empty"; break;
        case Stratum::Kind::chamber: j["kind"] = "chamber"; break;
        case Stratum::Kind::wall: j["kind"] = "wall"; break;
    }
    j["index"] = s.index;
    j["lo"] = to_json(s.lo);
    j["hi"] = to_json(s.hi);
    if (s.kind != Stratum::Kind::empty_below) {
        j["lower_block_end"] = s.lower_end;
        j["upper_block_start"] = s.upper_start;
        j["pinned"] = s.pinned ? json(*s.pinned) : json(nullptr);
    }
    return j;
}

inline json to_json(const AZReport& r) {
    json ratios = json::object();
    for (const auto& [q, ratio] : r.ratios)
        ratios[q] = json{{"A", to_json(ratio.a_value)}, {"S", to_json(ratio.s_value)}};
    return json{{"A_E", to_json(r.a_e)},
                {"S_E", to_json(r.s_e)},
                {"ratios", ratios},
                {"delta_lower_bound", to_json(r.delta_lower_bound)}};
}

inline json to_json(const BetaEntry& e) {
    return json{{"divisor", e.divisor}, {"degree", to_json(e.degree)},
                {"A", to_json(e.a_value)}, {"S", to_json(e.s_value)},
                {"beta", to_json(e.beta)}};
}

inline json to_json(const ComplexityOneReport& r) {
    json vert = json::array(), hor = json::array();
    for (const auto& e : r.vertical) vert.push_back(to_json(e));
    for (const auto& e : r.horizontal) hor.push_back(to_json(e));
    return json{{"vertical", vert}, {"horizontal", hor},
                {"torus_beta", to_json(r.torus_beta)}, {"ok", r.ok}};
}

}  // namespace kwall
