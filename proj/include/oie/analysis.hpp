// Permutational equivalence of OIE instances, orbit spaces of the two
// sequential operations, the two implementation forms, and the projection
// of results onto operand orderings by ending timestamp.

#ifndef OIE_ANALYSIS_HPP
#define OIE_ANALYSIS_HPP

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "oie/sequential.hpp"

namespace oie {

// A witnessing permutation M with components(a)*M = components(b), F(a)
// mapped combo-wise through M equal to F(b), and identical I and A sets.
// Void is equivalent only to void, atomic only to an equal atomic; both
// report the empty identity witness. The returned witness is the
// lexicographically smallest among all valid ones.
std::optional<PermutationMap> oie_perm_equivalent(const OIE& a, const OIE& b);

struct AddOp {
    DomainWindow window;
};
struct MulOp {};
using OpDescriptor = std::variant<AddOp, MulOp>;

struct OrbitClass {
    OIE representative;                  // result under the smallest index tuple
    std::vector<IndexTuple> index_tuples; // ascending
};

// Equivalence classes of the operation's results over all n! index tuples,
// ordered by each class's smallest index tuple.
struct OrbitSpace {
    std::vector<OrbitClass> classes;
};

OrbitSpace orbit_space(const std::vector<OIE>& events, const OpDescriptor& op,
                       const ConstraintSet& cs, std::size_t n_cap = 6,
                       IntersectionMode mode = IntersectionMode::pairwise,
                       const Limits& limits = {});

struct ScheduleAssignment {
    Interval overall;
    // Empty for the first implementation form; one (label, interval) pair
    // per component position for the second.
    std::vector<std::pair<std::string, Interval>> per_operand;
};

// Pick one overall interval from I. The instance must be non-void and the
// choice a member of its interval set.
ScheduleAssignment implement_first(const OIE& o, const Interval& chosen);

// Pick one combo from F: per-operand intervals labeled by component, with
// the combo's bound as the overall span. Exposes idle gaps that the first
// form cannot express.
ScheduleAssignment implement_second(const OIE& o, const IntervalCombo& chosen);

struct OperandOrdering {
    std::vector<std::string> ordering; // component labels, earliest ending first
    IntervalCombo source_combo;        // smallest combo realizing this ordering
};

// For each combo of a non-void composite, order the component positions by
// ascending end timestamp (ties by ascending position) and deduplicate the
// resulting label sequences. Multiplication results always give exactly
// one ordering; addition results may give up to n!.
std::vector<OperandOrdering> project_end_ts(const OIE& o);

// Reducers are restricted to permutation-invariant choices so that every
// ordering of the same operand set folds to one number.
enum class Reducer { min, max, sum };

// Folds each ordering's values and asserts the results agree; the values
// map must cover every label that occurs.
Rational fold_projection(const std::vector<OperandOrdering>& orderings,
                         const std::map<std::string, Rational>& values, Reducer op);

} // namespace oie

#endif
