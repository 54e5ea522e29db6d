#include "reeb/json_io.hpp"

#include <stdexcept>

namespace reeb {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

OrbitMultiset orbits_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("orbit list must be an array");
    OrbitMultiset out;
    for (const auto& o : j) out.push_back(orbit_from_json(o));
    return out;
}

Json orbits_to_json(const OrbitMultiset& orbits) {
    Json out = Json::array();
    for (const auto& o : orbits) out.push_back(to_json(o));
    return out;
}

Json curve_to_json(const AsymptoticData& d) { return {{"pos", orbits_to_json(d.positives)}, {"neg", orbits_to_json(d.negatives)}}; }

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const PerturbedRational& x) { return {{"base", to_string(x.base())}, {"eps", to_string(x.eps())}}; }

Json to_json(const ReebOrbit& o) { return {{"gen", to_string(o.generator)}, {"mult", o.multiplicity}}; }

Json to_json(const Ellipsoid& e) { return {{"a", to_json(e.a())}, {"b", to_json(e.b())}}; }

Json to_json(const CobordismData& c) {
    Json out{{"inner", to_json(c.inner())}, {"outer", to_json(c.outer())}};
    if (!c.nested()) out["embedding"] = true;
    return out;
}

Json to_json(const Setting& s) {
    if (const auto* sym = std::get_if<Symplectization>(&s)) {
        return {{"kind", "symplectization"}, {"ellipsoid", to_json(sym->ellipsoid)}};
    }
    Json out = to_json(std::get<CobordismData>(s));
    out["kind"] = "cobordism";
    return out;
}

Json to_json(const AsymptoticData& d) {
    Json out = curve_to_json(d);
    out["setting"] = to_json(d.setting);
    return out;
}

Json to_json(const Building& b) {
    Json levels = Json::array();
    auto add = [&](const Level& level, LevelKind kind) {
        Json curves = Json::array();
        for (const auto& c : level) curves.push_back(curve_to_json(c));
        levels.push_back({{"kind", to_string(kind)}, {"curves", std::move(curves)}});
    };
    for (const auto& l : b.lower_levels) add(l, LevelKind::lower);
    add(b.middle_level, LevelKind::middle);
    for (const auto& l : b.upper_levels) add(l, LevelKind::upper);
    return {{"cobordism", to_json(b.cobordism)}, {"levels", std::move(levels)}, {"bottom", to_json(b.bottom)},
            {"top", to_json(b.top)}};
}

Json to_json(const BuildingDiagnostics& d) {
    Json curves = Json::array();
    for (const auto& c : d.curves) {
        Json rec{{"kind", to_string(c.kind)},
                 {"level", c.level},
                 {"position", c.position},
                 {"index", c.index},
                 {"action_defect", to_json(c.action_defect)},
                 {"trivial_cover", c.trivial_cover}};
        if (c.kind == LevelKind::middle) rec["generic"] = c.generic;
        curves.push_back(std::move(rec));
    }
    Json violations = Json::array();
    for (const auto& v : d.violations) violations.push_back({{"id", v.id}, {"detail", v.detail}});
    return {{"curves", std::move(curves)},       {"total_index", d.total_index},
            {"euler_characteristic", d.euler_characteristic}, {"connected", d.connected},
            {"cylindrical", d.cylindrical},      {"violations", std::move(violations)}};
}

Json to_json(const Verdict& v) {
    Json reasons = Json::array();
    for (const auto& c : v.reasons) reasons.push_back({{"id", c.id}, {"holds", c.holds}, {"values", c.values}});
    return {{"applicable", v.applicable}, {"witness", v.witness ? *v.witness : Json(nullptr)},
            {"reasons", std::move(reasons)}};
}

Json to_json(const NopeInstance& n) {
    return {{"n", n.n},
            {"c1", to_json(n.c1)},
            {"cobordism", to_json(n.cobordism)},
            {"inner_orbit", to_json(n.inner_orbit)},
            {"outer_orbit", to_json(n.outer_orbit)},
            {"inner_cz", n.inner_cz},
            {"outer_cz", n.outer_cz},
            {"hypothesis_g_odd", n.hypothesis_g_odd},
            {"cz_equal", n.cz_equal},
            {"nonexistence", "not verified (requires ECH)"}};
}

Json to_json(const AreaObstruction& a) {
    return {{"c", to_json(a.c)}, {"data", to_json(a.curve)}, {"defect", to_json(a.defect)}, {"obstructed", a.obstructed}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
    throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

PerturbedRational perturbed_from_json(const Json& j) {
    if (!j.is_object()) return PerturbedRational(rational_from_json(j));
    Rational eps = j.contains("eps") ? rational_from_json(j.at("eps")) : Rational(0);
    return {rational_from_json(field(j, "base")), eps};
}

ReebOrbit orbit_from_json(const Json& j) {
    const Json& gen = field(j, "gen");
    const Json& mult = field(j, "mult");
    if (!gen.is_string() || !mult.is_number_integer()) throw std::invalid_argument("orbit needs string gen and integer mult");
    ReebOrbit o;
    auto g = gen.get<std::string>();
    if (g == "alpha") {
        o.generator = Generator::fast;
    } else if (g == "beta") {
        o.generator = Generator::slow;
    } else {
        throw std::invalid_argument("orbit gen must be \"alpha\" or \"beta\", got \"" + g + "\"");
    }
    o.multiplicity = mult.get<long>();
    if (o.multiplicity < 1) throw std::invalid_argument("orbit mult must be >= 1");
    return o;
}

Ellipsoid ellipsoid_from_json(const Json& j) {
    return Ellipsoid::make(perturbed_from_json(field(j, "a")), perturbed_from_json(field(j, "b")));
}

CobordismData cobordism_from_json(const Json& j) {
    auto inner = ellipsoid_from_json(field(j, "inner"));
    auto outer = ellipsoid_from_json(field(j, "outer"));
    bool embedding = j.contains("embedding") && j.at("embedding").is_boolean() && j.at("embedding").get<bool>();
    return embedding ? CobordismData::from_embedding(std::move(inner), std::move(outer))
                     : CobordismData::make(std::move(inner), std::move(outer));
}

Setting setting_from_json(const Json& j) {
    const Json& kind = field(j, "kind");
    if (kind == "symplectization") return Symplectization{ellipsoid_from_json(field(j, "ellipsoid"))};
    if (kind == "cobordism") return cobordism_from_json(j);
    throw std::invalid_argument("setting kind must be \"symplectization\" or \"cobordism\"");
}

AsymptoticData asymptotic_data_from_json(const Json& j) {
    return AsymptoticData::make(setting_from_json(field(j, "setting")), orbits_from_json(field(j, "pos")),
                                j.contains("neg") ? orbits_from_json(j.at("neg")) : OrbitMultiset{});
}

Building building_from_json(const Json& j) {
    Building b{cobordism_from_json(field(j, "cobordism")), {}, {}, {}, orbit_from_json(field(j, "bottom")),
               orbit_from_json(field(j, "top"))};
    const Json& levels = field(j, "levels");
    if (!levels.is_array()) throw std::invalid_argument("levels must be an array");
    bool seen_middle = false;
    for (const auto& level : levels) {
        const Json& kind = field(level, "kind");
        if (kind != "lower" && kind != "middle" && kind != "upper") {
            throw std::invalid_argument("level kind must be lower, middle or upper");
        }
        if (kind == "lower" && seen_middle) throw std::invalid_argument("lower level above the middle level");
        if (kind == "middle" && seen_middle) throw std::invalid_argument("more than one middle level");
        if (kind == "upper" && !seen_middle) throw std::invalid_argument("upper level below the middle level");
        Setting setting = kind == "middle" ? Setting{b.cobordism}
                                           : Setting{Symplectization{kind == "lower" ? b.cobordism.inner()
                                                                                     : b.cobordism.outer()}};
        Level curves;
        for (const auto& c : field(level, "curves")) {
            // Curves without a positive end are kept so validation can report them.
            AsymptoticData d{setting, orbits_from_json(field(c, "pos")),
                             c.contains("neg") ? orbits_from_json(c.at("neg")) : OrbitMultiset{}};
            canonicalize(d.positives);
            canonicalize(d.negatives);
            curves.push_back(std::move(d));
        }
        if (kind == "lower") {
            b.lower_levels.push_back(std::move(curves));
        } else if (kind == "middle") {
            b.middle_level = std::move(curves);
            seen_middle = true;
        } else {
            b.upper_levels.push_back(std::move(curves));
        }
    }
    if (!seen_middle) throw std::invalid_argument("building has no middle level");
    return b;
}

}  // namespace reeb
