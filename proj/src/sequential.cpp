#include "oie/sequential.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace oie {

DomainWindow::DomainWindow(Timestamp alpha, Timestamp beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (!(alpha_ < beta_)) {
        throw InvalidInputError("domain window must satisfy alpha < beta: (" +
                                alpha_.str() + ", " + beta_.str() + ")");
    }
}

ComboSet domain_filtered_subset(const ComboSet& cs, const DomainWindow& w) {
    if (cs.empty()) {
        throw InvalidInputError("the domain filter expects a non-empty combo set");
    }
    std::vector<IntervalCombo> kept;
    for (const auto& combo : cs.combos()) {
        const bool inside = std::all_of(combo.begin(), combo.end(), [&](const Interval& m) {
            return !(m.start() < w.alpha()) && !(w.beta() < m.end());
        });
        if (inside) kept.push_back(combo);
    }
    const std::size_t width = cs.uniform_length();
    for (std::size_t k = 0; k < width; ++k) {
        bool reaches_alpha = false;
        bool reaches_beta = false;
        for (const auto& combo : kept) {
            if (combo[k].start() == w.alpha()) reaches_alpha = true;
            if (combo[k].end() == w.beta()) reaches_beta = true;
        }
        if (!reaches_alpha || !reaches_beta) return ComboSet();
    }
    return ComboSet(std::move(kept));
}

ComboSet asc_order_filtered_subset(const ComboSet& cs) {
    if (cs.empty()) {
        throw InvalidInputError("the ordered filter expects a non-empty combo set");
    }
    std::vector<IntervalCombo> kept;
    for (const auto& combo : cs.combos()) {
        bool ordered = true;
        for (std::size_t i = 0; i + 1 < combo.size(); ++i) {
            if (combo[i + 1].start() < combo[i].end()) {
                ordered = false;
                break;
            }
        }
        if (ordered) kept.push_back(combo);
    }
    return ComboSet(std::move(kept));
}

namespace {

// Steps 1 and 2 and the assembly of step 4 are shared by both operations;
// only the step 3 filter differs.
SequentialResult sequential_common(
    const std::vector<OIE>& events, const IndexTuple& idx, const ConstraintSet& cs,
    IntersectionMode mode, const Limits& limits,
    const std::function<ComboSet(const ComboSet&)>& filter) {
    if (events.size() < 2) {
        throw InvalidInputError("sequential operations need at least two operands");
    }
    if (idx.size() != events.size()) {
        throw InvalidInputError("index tuple size does not match the operand count");
    }

    for (const auto& e : events) {
        if (e.is_void()) return {OIE::void_instance(), VoidStep::operands};
    }
    if (mode == IntersectionMode::pairwise) {
        for (std::size_t i = 0; i < events.size(); ++i) {
            for (std::size_t j = i + 1; j < events.size(); ++j) {
                const auto& a = events[i].atoms_A();
                const auto& b = events[j].atoms_A();
                const bool disjoint = std::none_of(a.begin(), a.end(), [&](const auto& id) {
                    return b.count(id) != 0;
                });
                if (!disjoint) return {OIE::void_instance(), VoidStep::operands};
            }
        }
    } else {
        std::set<EventStarId> common = events.front().atoms_A();
        for (std::size_t i = 1; i < events.size() && !common.empty(); ++i) {
            std::set<EventStarId> next;
            for (const auto& id : common) {
                if (events[i].atoms_A().count(id) != 0) next.insert(id);
            }
            common = std::move(next);
        }
        if (!common.empty()) return {OIE::void_instance(), VoidStep::operands};
    }

    const ComboSet feasible = feasible_combos(events, idx, cs, limits);
    if (feasible.empty()) return {OIE::void_instance(), VoidStep::feasibility};

    const ComboSet filtered = filter(feasible);
    if (filtered.empty()) return {OIE::void_instance(), VoidStep::filter};

    std::vector<OIE> components;
    components.reserve(events.size());
    std::set<EventStarId> atoms;
    for (std::size_t k = 1; k <= idx.size(); ++k) {
        const OIE& operand = events[idx.at(k) - 1];
        components.push_back(operand);
        atoms.insert(operand.atoms_A().begin(), operand.atoms_A().end());
    }
    std::set<Interval> intervals = derive_intervals(filtered);
    return {OIE::raw(std::move(components), filtered, std::move(intervals),
                     std::move(atoms)),
            VoidStep::none};
}

} // namespace

SequentialResult csa_traced(const std::vector<OIE>& events, const IndexTuple& idx,
                            const DomainWindow& w, const ConstraintSet& cs,
                            IntersectionMode mode, const Limits& limits) {
    return sequential_common(events, idx, cs, mode, limits, [&](const ComboSet& f) {
        return domain_filtered_subset(f, w);
    });
}

OIE csa(const std::vector<OIE>& events, const IndexTuple& idx, const DomainWindow& w,
        const ConstraintSet& cs, IntersectionMode mode, const Limits& limits) {
    return csa_traced(events, idx, w, cs, mode, limits).value;
}

SequentialResult natural_csa_traced(const std::vector<OIE>& events, const IndexTuple& idx,
                                    const ConstraintSet& cs, IntersectionMode mode,
                                    const Limits& limits) {
    if (events.empty()) {
        throw InvalidInputError("natural addition needs at least two operands");
    }
    std::optional<Timestamp> alpha;
    std::optional<Timestamp> beta;
    for (const auto& e : events) {
        if (e.is_void()) {
            throw PreconditionViolatedError(
                "natural addition is undefined for void operands");
        }
        const auto& I = e.intervals_I();
        Timestamp lo = I.begin()->start();
        Timestamp hi = I.begin()->end();
        for (const auto& iv : I) {
            lo = std::min(lo, iv.start());
            hi = std::max(hi, iv.end());
        }
        if (!alpha) {
            alpha = lo;
            beta = hi;
        } else if (!(*alpha == lo) || !(*beta == hi)) {
            throw PreconditionViolatedError(
                "natural addition needs every operand to span the same "
                "(min start, max end) window; operand " +
                oie_label(e) + " spans (" + lo.str() + ", " + hi.str() + ")");
        }
    }
    return csa_traced(events, idx, DomainWindow(*alpha, *beta), cs, mode, limits);
}

OIE natural_csa(const std::vector<OIE>& events, const IndexTuple& idx,
                const ConstraintSet& cs, IntersectionMode mode, const Limits& limits) {
    return natural_csa_traced(events, idx, cs, mode, limits).value;
}

SequentialResult csm_traced(const std::vector<OIE>& events, const IndexTuple& idx,
                            const ConstraintSet& cs, IntersectionMode mode,
                            const Limits& limits) {
    return sequential_common(events, idx, cs, mode, limits, asc_order_filtered_subset);
}

OIE csm(const std::vector<OIE>& events, const IndexTuple& idx, const ConstraintSet& cs,
        IntersectionMode mode, const Limits& limits) {
    return csm_traced(events, idx, cs, mode, limits).value;
}

} // namespace oie
