// Core model: timestamps, intervals, interval combos, canonical combo sets,
// permutations, and the optional intervals event (OIE) 4-tuple with its
// shape and consistency rules.

#ifndef OIE_CORE_HPP
#define OIE_CORE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oie/error.hpp"
#include "oie/rational.hpp"

namespace oie {

using Timestamp = Rational;

// Half-open span [start, end). Construction enforces start < end, so every
// Interval in the system is non-degenerate by type.
class Interval {
public:
    Interval(Timestamp start, Timestamp end);

    const Timestamp& start() const { return start_; }
    const Timestamp& end() const { return end_; }

    friend bool operator==(const Interval& a, const Interval& b) = default;
    friend std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
        if (auto c = a.start_ <=> b.start_; c != 0) return c;
        return a.end_ <=> b.end_;
    }

private:
    Timestamp start_;
    Timestamp end_;
};

std::string to_string(const Interval& iv);

// One candidate joint schedule: one interval per operand position.
using IntervalCombo = std::vector<Interval>;

std::string to_string(const IntervalCombo& combo);

// A finite set of combos of uniform length, stored sorted and deduplicated
// (lexicographic by rational values) so iteration order and all derived
// output are deterministic.
class ComboSet {
public:
    ComboSet() = default;

    // Sorts and deduplicates; throws InvalidInputError if member lengths
    // differ or any member is empty.
    explicit ComboSet(std::vector<IntervalCombo> combos);

    const std::vector<IntervalCombo>& combos() const { return combos_; }
    std::size_t size() const { return combos_.size(); }
    bool empty() const { return combos_.empty(); }

    // 0 for the empty set.
    std::size_t uniform_length() const { return uniform_length_; }

    bool contains(const IntervalCombo& c) const;

    friend bool operator==(const ComboSet& a, const ComboSet& b) = default;

private:
    std::vector<IntervalCombo> combos_;
    std::size_t uniform_length_ = 0;
};

// Identity of an event whose interval is not yet determined. Two atoms are
// the same real-world event exactly when their ids are equal.
using EventStarId = std::string;

// A bijection on {1..n}, stored as 1-based images. apply_permutation sends
// the element at position i to position image(i).
class PermutationMap {
public:
    explicit PermutationMap(std::vector<std::size_t> images);

    static PermutationMap identity(std::size_t n);

    std::size_t size() const { return images_.size(); }
    std::size_t image(std::size_t i) const { return images_[i - 1]; }
    const std::vector<std::size_t>& images() const { return images_; }

    PermutationMap inverse() const;

    friend bool operator==(const PermutationMap& a, const PermutationMap& b) = default;

private:
    std::vector<std::size_t> images_;
};

// All permutations of {1..n} in lexicographic order of their image vectors.
std::vector<PermutationMap> all_permutations(std::size_t n);

// The OIE 4-tuple (components C, schedule details F, overall intervals I,
// atom identities A). The raw factory performs no checking so that
// validate_oie has invalid instances to report on; the shaped factories
// and the sequential operations only ever produce valid values. Instances
// are immutable.
class OIE {
public:
    OIE() = default; // the void instance

    static OIE void_instance() { return OIE(); }

    // Throws InvalidInputError when intervals is empty; an event with no
    // options is the void instance, which must be requested explicitly.
    static OIE atomic(EventStarId atom, const std::set<Interval>& intervals);

    static OIE raw(std::vector<OIE> components, ComboSet details_F,
                   std::set<Interval> intervals_I, std::set<EventStarId> atoms_A);

    const std::vector<OIE>& components() const { return components_; }
    const ComboSet& details_F() const { return details_F_; }
    const std::set<Interval>& intervals_I() const { return intervals_I_; }
    const std::set<EventStarId>& atoms_A() const { return atoms_A_; }

    bool is_void() const;
    bool is_atomic() const;
    bool is_composite() const;

    // Structural equality: components pairwise (recursively, order matters)
    // and the three sets memberwise.
    friend bool operator==(const OIE& a, const OIE& b) = default;

private:
    std::vector<OIE> components_;
    ComboSet details_F_;
    std::set<Interval> intervals_I_;
    std::set<EventStarId> atoms_A_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// (min of starts, max of ends) over a non-empty combo. Permutation
// invariant.
Interval bound_combo(const IntervalCombo& combo);

Timestamp min_first(const IntervalCombo& combo);
Timestamp max_second(const IntervalCombo& combo);

// Element at position i lands at position p.image(i). Sizes must match.
IntervalCombo apply_permutation(const IntervalCombo& combo, const PermutationMap& p);

// The lexicographically smallest permutation mapping a onto b, or nullopt
// when none exists. Exhaustive over |a|! candidates.
std::optional<PermutationMap> combo_perm_equivalent(const IntervalCombo& a, const IntervalCombo& b);

// { bound_combo(t) | t in details_F }. Empty input gives the empty set.
std::set<Interval> derive_intervals(const ComboSet& details_F);

// Accepts void, atomic, and composite shapes whose interval set matches the
// one derived from the schedule details; lists every violated rule.
ValidationReport validate_oie(const OIE& o);

inline bool oie_equal(const OIE& a, const OIE& b) { return a == b; }

// The per-member interval sets, preserving order.
std::vector<std::set<Interval>> intervals_family(const std::vector<OIE>& events);

// Display name: the atom id for atomic instances, "VOID" for void, and the
// parenthesized component labels for composites.
std::string oie_label(const OIE& o);

} // namespace oie

#endif
