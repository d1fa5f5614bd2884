// Index tuples, the Cartesian product of interval families in index order,
// and the constraint model that splits a product into infeasible and
// feasible combo sets.

#ifndef OIE_FEASIBILITY_HPP
#define OIE_FEASIBILITY_HPP

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

#include "oie/core.hpp"

namespace oie {

// A permutation of {1..n} describing which operand each combo position
// draws from: position k uses operand at(k).
class IndexTuple {
public:
    explicit IndexTuple(std::vector<std::size_t> indices);

    static IndexTuple ascending(std::size_t n);

    std::size_t size() const { return indices_.size(); }
    std::size_t at(std::size_t k) const { return indices_[k - 1]; }
    const std::vector<std::size_t>& indices() const { return indices_; }

    friend bool operator==(const IndexTuple& a, const IndexTuple& b) = default;
    friend std::strong_ordering operator<=>(const IndexTuple& a, const IndexTuple& b) = default;

private:
    std::vector<std::size_t> indices_;
};

// All n! index tuples in lexicographic order.
std::vector<IndexTuple> all_index_tuples(std::size_t n);

struct NoOverlapRule {
    std::vector<EventStarId> ids; // at least two distinct operand ids
};

struct MinGapRule {
    EventStarId first;
    EventStarId second;
    Rational gap; // required separation in either order, non-negative
};

// Declarative infeasibility. Patterns and rules are declared once against
// the canonical ascending operand order and remapped at query time for any
// index tuple, which is what makes the infeasible sets of two equivalent
// index tuples permutation images of each other.
class ConstraintSet {
public:
    ConstraintSet() = default;

    // A full-width pattern: one interval per operand position 1..n in
    // canonical order. A product combo matching it at every position is
    // infeasible.
    void add_forbidden(IntervalCombo pattern);

    // Combos where any two of the named operands' intervals overlap are
    // infeasible.
    void add_no_overlap(std::vector<EventStarId> ids);

    // Combos where the two named operands' intervals are separated by less
    // than gap (in whichever order they occur) are infeasible.
    void add_min_gap(EventStarId first, EventStarId second, Rational gap);

    bool empty() const {
        return forbidden_.empty() && no_overlap_.empty() && min_gap_.empty();
    }

    const std::vector<IntervalCombo>& forbidden() const { return forbidden_; }
    const std::vector<NoOverlapRule>& no_overlap_rules() const { return no_overlap_; }
    const std::vector<MinGapRule>& min_gap_rules() const { return min_gap_; }

private:
    std::vector<IntervalCombo> forbidden_;
    std::vector<NoOverlapRule> no_overlap_;
    std::vector<MinGapRule> min_gap_;
};

struct Limits {
    // Hard cap on enumerated product size; exceeding it raises
    // CapacityExceededError before any combo is materialized.
    std::size_t max_product = 100000;
};

// The set naturally isomorphic to the product of the family members in
// index order: position k of each combo draws from family[idx.at(k)]. Any
// empty factor yields the empty set.
ComboSet cartesian_by_index(const std::vector<std::set<Interval>>& family,
                            const IndexTuple& idx, const Limits& limits = {});

// Members of the product that match a forbidden pattern or violate a rule,
// with patterns and rules remapped from canonical order to idx order.
ComboSet infeasible_combos(const std::vector<OIE>& events, const IndexTuple& idx,
                           const ConstraintSet& cs, const Limits& limits = {});

// The product minus the infeasible subset.
ComboSet feasible_combos(const std::vector<OIE>& events, const IndexTuple& idx,
                         const ConstraintSet& cs, const Limits& limits = {});

// True when the infeasible set under the ascending index tuple is empty.
// Void members are rejected.
bool is_mutually_independent(const std::vector<OIE>& events, const ConstraintSet& cs,
                             const Limits& limits = {});

} // namespace oie

#endif
