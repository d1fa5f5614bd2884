// JSON event file format: atomic event declarations, shared constraint
// declarations, an expression to evaluate, and free-form metadata. All
// timestamps are exact rationals carried as strings or integers; bare
// JSON floats are rejected.

#ifndef OIE_EVENT_FILE_HPP
#define OIE_EVENT_FILE_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oie/core.hpp"
#include "oie/feasibility.hpp"

namespace oie {

struct EventSpec {
    EventStarId id;
    // Ascending and deduplicated after parse. An empty list declares the
    // event void.
    std::vector<Interval> intervals;
};

// A forbidden joint placement keyed by event id. It binds to an operation
// node whose atomic operand ids are exactly the keys.
struct ForbiddenConstraint {
    std::map<EventStarId, Interval> placement;
};

struct NoOverlapConstraint {
    std::vector<EventStarId> ids;
};

struct MinGapConstraint {
    EventStarId first;
    EventStarId second;
    Rational gap;
};

struct EventFile {
    std::vector<EventSpec> events;
    std::vector<ForbiddenConstraint> forbidden;
    std::vector<NoOverlapConstraint> no_overlap;
    std::vector<MinGapConstraint> min_gap;
    std::string expression; // DSL text, may be empty
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

// Throws ParseError on malformed JSON, duplicate ids, unresolvable
// constraint ids, float timestamps, or start >= end.
EventFile parse_event_file(const std::string& text);
EventFile load_event_file(const std::string& path);
std::string serialize_event_file(const EventFile& file);

// The atomic instances declared by the file, in declaration order.
std::vector<OIE> file_atoms(const EventFile& file);

// The constraints applying to an operation over the given atomic operand
// labels, remapped to canonical positions in that operand list. Forbidden
// placements bind only when their keys exactly cover the labels; overlap
// and gap rules bind whenever all their ids occur among the labels.
ConstraintSet constraints_for(const EventFile& file,
                              const std::vector<EventStarId>& labels);

// Result serialization (versioned, "format": 1). Round-trips through
// parse_oie to an oie_equal value.
std::string serialize_oie(const OIE& o);
OIE parse_oie(const std::string& text);

} // namespace oie

#endif
