#include "oie/event_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace oie {

namespace {

using nlohmann::ordered_json;

Rational parse_timestamp(const ordered_json& j, const std::string& where) {
    if (j.is_number_integer()) {
        return Rational(static_cast<long long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    throw ParseError("timestamp in " + where +
                     " must be an integer or a rational string, floats are "
                     "not representable exactly");
}

Interval parse_interval(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("interval in " + where + " must be a [start, end] pair");
    }
    const Rational start = parse_timestamp(j[0], where);
    const Rational end = parse_timestamp(j[1], where);
    if (!(start < end)) {
        throw ParseError("interval in " + where + " must have start < end");
    }
    return Interval(start, end);
}

ordered_json timestamp_json(const Rational& r) {
    if (r.raw().get_den() == 1 && r.raw().get_num().fits_slong_p()) {
        return ordered_json(r.raw().get_num().get_si());
    }
    return ordered_json(r.str());
}

ordered_json interval_json(const Interval& iv) {
    return ordered_json::array({timestamp_json(iv.start()), timestamp_json(iv.end())});
}

void require_known_id(const std::set<EventStarId>& declared, const EventStarId& id,
                      const std::string& where) {
    if (declared.count(id) == 0) {
        throw ParseError("constraint " + where + " references undeclared event \"" +
                         id + "\"");
    }
}

EventFile parse_document(const ordered_json& doc) {
    if (!doc.is_object()) {
        throw ParseError("an event file must be a JSON object");
    }
    if (doc.contains("format") &&
        !(doc["format"].is_number_integer() && doc["format"].get<int>() == 1)) {
        throw ParseError("unsupported event file format version");
    }
    if (!doc.contains("events") || !doc["events"].is_array()) {
        throw ParseError("an event file must declare an \"events\" array");
    }

    EventFile file;
    std::set<EventStarId> declared;
    for (const auto& entry : doc["events"]) {
        if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string()) {
            throw ParseError("each event needs a string \"id\"");
        }
        EventSpec spec;
        spec.id = entry["id"].get<std::string>();
        if (!declared.insert(spec.id).second) {
            throw ParseError("duplicate event id \"" + spec.id + "\"");
        }
        if (!entry.contains("intervals") || !entry["intervals"].is_array()) {
            throw ParseError("event \"" + spec.id + "\" needs an \"intervals\" array");
        }
        for (const auto& iv : entry["intervals"]) {
            spec.intervals.push_back(parse_interval(iv, "event \"" + spec.id + "\""));
        }
        std::sort(spec.intervals.begin(), spec.intervals.end());
        spec.intervals.erase(std::unique(spec.intervals.begin(), spec.intervals.end()),
                             spec.intervals.end());
        file.events.push_back(std::move(spec));
    }

    if (doc.contains("constraints")) {
        if (!doc["constraints"].is_array()) {
            throw ParseError("\"constraints\" must be an array");
        }
        for (const auto& entry : doc["constraints"]) {
            if (!entry.is_object()) {
                throw ParseError("each constraint must be an object");
            }
            if (entry.contains("forbidden")) {
                const auto& placement = entry["forbidden"];
                if (!placement.is_object() || placement.empty()) {
                    throw ParseError(
                        "a forbidden constraint maps event ids to intervals");
                }
                ForbiddenConstraint fc;
                for (const auto& [id, iv] : placement.items()) {
                    require_known_id(declared, id, "forbidden placement");
                    fc.placement.emplace(id,
                                         parse_interval(iv, "forbidden placement"));
                }
                file.forbidden.push_back(std::move(fc));
            } else if (entry.contains("no_overlap")) {
                const auto& ids = entry["no_overlap"];
                if (!ids.is_array() || ids.size() < 2) {
                    throw ParseError("no_overlap needs at least two event ids");
                }
                NoOverlapConstraint nc;
                for (const auto& id : ids) {
                    if (!id.is_string()) {
                        throw ParseError("no_overlap ids must be strings");
                    }
                    nc.ids.push_back(id.get<std::string>());
                    require_known_id(declared, nc.ids.back(), "no_overlap rule");
                }
                file.no_overlap.push_back(std::move(nc));
            } else if (entry.contains("min_gap")) {
                const auto& ids = entry["min_gap"];
                if (!ids.is_array() || ids.size() != 2 || !ids[0].is_string() ||
                    !ids[1].is_string() || !entry.contains("gap")) {
                    throw ParseError(
                        "min_gap needs a two-id array and a \"gap\" value");
                }
                MinGapConstraint mc;
                mc.first = ids[0].get<std::string>();
                mc.second = ids[1].get<std::string>();
                require_known_id(declared, mc.first, "min_gap rule");
                require_known_id(declared, mc.second, "min_gap rule");
                mc.gap = parse_timestamp(entry["gap"], "min_gap rule");
                if (mc.gap.sign() < 0) {
                    throw ParseError("min_gap separation must be non-negative");
                }
                file.min_gap.push_back(std::move(mc));
            } else {
                throw ParseError(
                    "constraint must be forbidden, no_overlap, or min_gap");
            }
        }
    }

    if (doc.contains("expression")) {
        if (!doc["expression"].is_string()) {
            throw ParseError("\"expression\" must be a string");
        }
        file.expression = doc["expression"].get<std::string>();
    }
    if (doc.contains("metadata")) {
        file.metadata = doc["metadata"];
    }
    return file;
}

ordered_json oie_to_json(const OIE& o) {
    ordered_json node = ordered_json::object();
    if (o.is_void()) {
        node["kind"] = "void";
        return node;
    }
    if (o.components().empty()) {
        node["kind"] = "atomic";
        node["atom"] = *o.atoms_A().begin();
        auto intervals = ordered_json::array();
        for (const auto& iv : o.intervals_I()) intervals.push_back(interval_json(iv));
        node["intervals"] = std::move(intervals);
        return node;
    }
    node["kind"] = "composite";
    auto components = ordered_json::array();
    for (const auto& part : o.components()) components.push_back(oie_to_json(part));
    node["components"] = std::move(components);
    auto details = ordered_json::array();
    for (const auto& combo : o.details_F().combos()) {
        auto row = ordered_json::array();
        for (const auto& iv : combo) row.push_back(interval_json(iv));
        details.push_back(std::move(row));
    }
    node["details"] = std::move(details);
    auto intervals = ordered_json::array();
    for (const auto& iv : o.intervals_I()) intervals.push_back(interval_json(iv));
    node["intervals"] = std::move(intervals);
    auto atoms = ordered_json::array();
    for (const auto& id : o.atoms_A()) atoms.push_back(id);
    node["atoms"] = std::move(atoms);
    return node;
}

OIE oie_from_json(const ordered_json& node) {
    if (!node.is_object() || !node.contains("kind") || !node["kind"].is_string()) {
        throw ParseError("a serialized instance needs a \"kind\" field");
    }
    const std::string kind = node["kind"].get<std::string>();
    if (kind == "void") return OIE::void_instance();
    if (kind == "atomic") {
        if (!node.contains("atom") || !node["atom"].is_string() ||
            !node.contains("intervals") || !node["intervals"].is_array()) {
            throw ParseError("an atomic instance needs \"atom\" and \"intervals\"");
        }
        std::set<Interval> intervals;
        for (const auto& iv : node["intervals"]) {
            intervals.insert(parse_interval(iv, "atomic instance"));
        }
        return OIE::atomic(node["atom"].get<std::string>(), intervals);
    }
    if (kind == "composite") {
        for (const char* key : {"components", "details", "intervals", "atoms"}) {
            if (!node.contains(key) || !node[key].is_array()) {
                throw ParseError(std::string("a composite instance needs \"") + key +
                                 "\"");
            }
        }
        std::vector<OIE> components;
        for (const auto& part : node["components"]) {
            components.push_back(oie_from_json(part));
        }
        std::vector<IntervalCombo> details;
        for (const auto& row : node["details"]) {
            if (!row.is_array()) {
                throw ParseError("composite details must be interval arrays");
            }
            IntervalCombo combo;
            for (const auto& iv : row) {
                combo.push_back(parse_interval(iv, "composite details"));
            }
            details.push_back(std::move(combo));
        }
        std::set<Interval> intervals;
        for (const auto& iv : node["intervals"]) {
            intervals.insert(parse_interval(iv, "composite instance"));
        }
        std::set<EventStarId> atoms;
        for (const auto& id : node["atoms"]) {
            if (!id.is_string()) throw ParseError("composite atoms must be strings");
            atoms.insert(id.get<std::string>());
        }
        return OIE::raw(std::move(components), ComboSet(std::move(details)),
                        std::move(intervals), std::move(atoms));
    }
    throw ParseError("unknown instance kind \"" + kind + "\"");
}

} // namespace

EventFile parse_event_file(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("event file is not valid JSON: ") + e.what());
    }
    try {
        return parse_document(doc);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("event file structure is invalid: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidInputError& e) {
        throw ParseError(e.what());
    }
}

EventFile load_event_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInputError("cannot open event file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_event_file(ss.str());
}

std::string serialize_event_file(const EventFile& file) {
    ordered_json doc = ordered_json::object();
    doc["format"] = 1;
    auto events = ordered_json::array();
    for (const auto& spec : file.events) {
        ordered_json entry = ordered_json::object();
        entry["id"] = spec.id;
        auto intervals = ordered_json::array();
        for (const auto& iv : spec.intervals) intervals.push_back(interval_json(iv));
        entry["intervals"] = std::move(intervals);
        events.push_back(std::move(entry));
    }
    doc["events"] = std::move(events);

    auto constraints = ordered_json::array();
    for (const auto& fc : file.forbidden) {
        ordered_json placement = ordered_json::object();
        for (const auto& [id, iv] : fc.placement) placement[id] = interval_json(iv);
        constraints.push_back(ordered_json{{"forbidden", std::move(placement)}});
    }
    for (const auto& nc : file.no_overlap) {
        constraints.push_back(ordered_json{{"no_overlap", nc.ids}});
    }
    for (const auto& mc : file.min_gap) {
        ordered_json entry = ordered_json::object();
        entry["min_gap"] = ordered_json::array({mc.first, mc.second});
        entry["gap"] = timestamp_json(mc.gap);
        constraints.push_back(std::move(entry));
    }
    doc["constraints"] = std::move(constraints);
    doc["expression"] = file.expression;
    doc["metadata"] = file.metadata;
    return doc.dump(2) + "\n";
}

std::vector<OIE> file_atoms(const EventFile& file) {
    std::vector<OIE> atoms;
    atoms.reserve(file.events.size());
    for (const auto& spec : file.events) {
        if (spec.intervals.empty()) {
            atoms.push_back(OIE::void_instance());
        } else {
            atoms.push_back(OIE::atomic(
                spec.id, std::set<Interval>(spec.intervals.begin(),
                                            spec.intervals.end())));
        }
    }
    return atoms;
}

ConstraintSet constraints_for(const EventFile& file,
                              const std::vector<EventStarId>& labels) {
    const std::set<EventStarId> label_set(labels.begin(), labels.end());
    ConstraintSet cs;
    for (const auto& fc : file.forbidden) {
        if (fc.placement.size() != label_set.size()) continue;
        const bool covers = std::all_of(
            fc.placement.begin(), fc.placement.end(),
            [&](const auto& entry) { return label_set.count(entry.first) != 0; });
        if (!covers) continue;
        IntervalCombo pattern;
        pattern.reserve(labels.size());
        for (const auto& label : labels) pattern.push_back(fc.placement.at(label));
        cs.add_forbidden(std::move(pattern));
    }
    for (const auto& nc : file.no_overlap) {
        const bool present = std::all_of(
            nc.ids.begin(), nc.ids.end(),
            [&](const EventStarId& id) { return label_set.count(id) != 0; });
        if (present) cs.add_no_overlap(nc.ids);
    }
    for (const auto& mc : file.min_gap) {
        if (label_set.count(mc.first) != 0 && label_set.count(mc.second) != 0) {
            cs.add_min_gap(mc.first, mc.second, mc.gap);
        }
    }
    return cs;
}

std::string serialize_oie(const OIE& o) {
    ordered_json doc = ordered_json::object();
    doc["format"] = 1;
    ordered_json node = oie_to_json(o);
    for (auto& [key, value] : node.items()) doc[key] = std::move(value);
    return doc.dump(2) + "\n";
}

OIE parse_oie(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("serialized instance is not valid JSON: ") +
                         e.what());
    }
    if (!doc.is_object() || !doc.contains("format") ||
        !(doc["format"].is_number_integer() && doc["format"].get<int>() == 1)) {
        throw ParseError("serialized instance must declare \"format\": 1");
    }
    try {
        return oie_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("serialized instance is malformed: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidInputError& e) {
        throw ParseError(e.what());
    }
}

} // namespace oie
