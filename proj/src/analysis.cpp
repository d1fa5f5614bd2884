#include "oie/analysis.hpp"

#include <algorithm>

namespace oie {

std::optional<PermutationMap> oie_perm_equivalent(const OIE& a, const OIE& b) {
    if (a.is_void() || b.is_void()) {
        if (a.is_void() && b.is_void()) return PermutationMap::identity(0);
        return std::nullopt;
    }
    if (a.components().empty() || b.components().empty()) {
        if (a == b) return PermutationMap::identity(0);
        return std::nullopt;
    }
    if (a.components().size() != b.components().size()) return std::nullopt;
    if (a.intervals_I() != b.intervals_I() || a.atoms_A() != b.atoms_A()) {
        return std::nullopt;
    }

    const std::size_t n = a.components().size();
    for (const auto& m : all_permutations(n)) {
        std::vector<OIE> permuted(n);
        for (std::size_t i = 1; i <= n; ++i) {
            permuted[m.image(i) - 1] = a.components()[i - 1];
        }
        if (permuted != b.components()) continue;

        std::vector<IntervalCombo> mapped;
        mapped.reserve(a.details_F().size());
        for (const auto& combo : a.details_F().combos()) {
            mapped.push_back(apply_permutation(combo, m));
        }
        if (ComboSet(std::move(mapped)) == b.details_F()) return m;
    }
    return std::nullopt;
}

OrbitSpace orbit_space(const std::vector<OIE>& events, const OpDescriptor& op,
                       const ConstraintSet& cs, std::size_t n_cap,
                       IntersectionMode mode, const Limits& limits) {
    if (events.size() > n_cap) {
        throw CapacityExceededError(
            "orbit enumeration over " + std::to_string(events.size()) +
            " operands exceeds the cap of " + std::to_string(n_cap) + " (" +
            std::to_string(events.size()) + "! index tuples)");
    }

    OrbitSpace space;
    for (const auto& idx : all_index_tuples(events.size())) {
        const OIE result = std::visit(
            [&](const auto& o) {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, AddOp>) {
                    return csa(events, idx, o.window, cs, mode, limits);
                } else {
                    return csm(events, idx, cs, mode, limits);
                }
            },
            op);

        bool placed = false;
        for (auto& cls : space.classes) {
            if (oie_perm_equivalent(cls.representative, result).has_value()) {
                cls.index_tuples.push_back(idx);
                placed = true;
                break;
            }
        }
        if (!placed) space.classes.push_back({result, {idx}});
    }
    return space;
}

ScheduleAssignment implement_first(const OIE& o, const Interval& chosen) {
    if (o.is_void()) {
        throw InvalidInputError("cannot implement the void instance");
    }
    if (o.intervals_I().count(chosen) == 0) {
        throw InvalidChoiceError("interval " + to_string(chosen) +
                                 " is not offered by " + oie_label(o));
    }
    return {chosen, {}};
}

ScheduleAssignment implement_second(const OIE& o, const IntervalCombo& chosen) {
    if (o.is_void()) {
        throw InvalidInputError("cannot implement the void instance");
    }
    if (!o.details_F().contains(chosen)) {
        throw InvalidChoiceError("combo " + to_string(chosen) +
                                 " is not offered by " + oie_label(o));
    }
    ScheduleAssignment assignment{bound_combo(chosen), {}};
    if (o.components().empty()) {
        assignment.per_operand.emplace_back(oie_label(o), chosen.front());
    } else {
        for (std::size_t k = 0; k < o.components().size(); ++k) {
            assignment.per_operand.emplace_back(oie_label(o.components()[k]), chosen[k]);
        }
    }
    return assignment;
}

std::vector<OperandOrdering> project_end_ts(const OIE& o) {
    if (!o.is_composite()) {
        throw InvalidInputError("end projection is defined for composites only");
    }
    std::vector<OperandOrdering> out;
    for (const auto& combo : o.details_F().combos()) {
        std::vector<std::size_t> positions(combo.size());
        for (std::size_t i = 0; i < combo.size(); ++i) positions[i] = i;
        std::stable_sort(positions.begin(), positions.end(),
                         [&](std::size_t x, std::size_t y) {
                             return combo[x].end() < combo[y].end();
                         });
        std::vector<std::string> labels;
        labels.reserve(positions.size());
        for (const std::size_t p : positions) {
            labels.push_back(oie_label(o.components()[p]));
        }
        const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& existing) {
            return existing.ordering == labels;
        });
        if (!seen) out.push_back({std::move(labels), combo});
    }
    return out;
}

Rational fold_projection(const std::vector<OperandOrdering>& orderings,
                         const std::map<std::string, Rational>& values, Reducer op) {
    if (orderings.empty()) {
        throw InvalidInputError("cannot fold an empty projection");
    }
    std::optional<Rational> agreed;
    for (const auto& ordering : orderings) {
        if (ordering.ordering.empty()) {
            throw InvalidInputError("cannot fold an empty ordering");
        }
        std::optional<Rational> folded;
        for (const auto& label : ordering.ordering) {
            const auto it = values.find(label);
            if (it == values.end()) {
                throw InvalidInputError("no value provided for operand " + label);
            }
            if (!folded) {
                folded = it->second;
            } else {
                switch (op) {
                case Reducer::min: folded = std::min(*folded, it->second); break;
                case Reducer::max: folded = std::max(*folded, it->second); break;
                case Reducer::sum: folded = *folded + it->second; break;
                }
            }
        }
        if (!agreed) {
            agreed = folded;
        } else if (!(*agreed == *folded)) {
            throw InvalidInputError(
                "orderings fold to different values under this reducer");
        }
    }
    return *agreed;
}

} // namespace oie
