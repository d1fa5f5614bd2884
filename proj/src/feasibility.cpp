#include "oie/feasibility.hpp"

#include <algorithm>
#include <numeric>

namespace oie {

namespace {

bool overlaps(const Interval& a, const Interval& b) {
    return a.start() < b.end() && b.start() < a.end();
}

// Positions here are zero-based offsets into the canonical operand list.
// Returns the offset of the operand labeled id, or npos when absent.
std::size_t operand_position(const std::vector<OIE>& events, const EventStarId& id) {
    for (std::size_t j = 0; j < events.size(); ++j) {
        if (oie_label(events[j]) == id) return j;
    }
    return static_cast<std::size_t>(-1);
}

} // namespace

IndexTuple::IndexTuple(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::vector<bool> seen(indices_.size(), false);
    for (const std::size_t idx : indices_) {
        if (idx < 1 || idx > indices_.size() || seen[idx - 1]) {
            throw InvalidInputError("index tuple must be a permutation of 1..n");
        }
        seen[idx - 1] = true;
    }
}

IndexTuple IndexTuple::ascending(std::size_t n) {
    std::vector<std::size_t> indices(n);
    std::iota(indices.begin(), indices.end(), std::size_t{1});
    return IndexTuple(std::move(indices));
}

std::vector<IndexTuple> all_index_tuples(std::size_t n) {
    std::vector<std::size_t> indices(n);
    std::iota(indices.begin(), indices.end(), std::size_t{1});
    std::vector<IndexTuple> out;
    do {
        out.push_back(IndexTuple(indices));
    } while (std::next_permutation(indices.begin(), indices.end()));
    return out;
}

void ConstraintSet::add_forbidden(IntervalCombo pattern) {
    if (pattern.empty()) {
        throw InvalidInputError("a forbidden pattern must name at least one interval");
    }
    forbidden_.push_back(std::move(pattern));
}

void ConstraintSet::add_no_overlap(std::vector<EventStarId> ids) {
    if (ids.size() < 2) {
        throw InvalidInputError("a no_overlap rule needs at least two event ids");
    }
    no_overlap_.push_back({std::move(ids)});
}

void ConstraintSet::add_min_gap(EventStarId first, EventStarId second, Rational gap) {
    if (gap.sign() < 0) {
        throw InvalidInputError("a min_gap separation must be non-negative");
    }
    min_gap_.push_back({std::move(first), std::move(second), std::move(gap)});
}

ComboSet cartesian_by_index(const std::vector<std::set<Interval>>& family,
                            const IndexTuple& idx, const Limits& limits) {
    if (family.size() != idx.size()) {
        throw InvalidInputError("index tuple size does not match the family size");
    }
    std::size_t total = 1;
    for (const auto& factor : family) {
        if (factor.empty()) return ComboSet();
        if (factor.size() > limits.max_product / total) {
            throw CapacityExceededError(
                "interval product exceeds the configured cap of " +
                std::to_string(limits.max_product));
        }
        total *= factor.size();
    }

    std::vector<std::vector<Interval>> factors;
    factors.reserve(family.size());
    for (std::size_t k = 1; k <= idx.size(); ++k) {
        const auto& source = family[idx.at(k) - 1];
        factors.emplace_back(source.begin(), source.end());
    }

    std::vector<IntervalCombo> combos;
    combos.reserve(total);
    std::vector<std::size_t> odometer(factors.size(), 0);
    for (std::size_t produced = 0; produced < total; ++produced) {
        IntervalCombo combo;
        combo.reserve(factors.size());
        for (std::size_t k = 0; k < factors.size(); ++k) {
            combo.push_back(factors[k][odometer[k]]);
        }
        combos.push_back(std::move(combo));
        for (std::size_t k = factors.size(); k-- > 0;) {
            if (++odometer[k] < factors[k].size()) break;
            odometer[k] = 0;
        }
    }
    return ComboSet(std::move(combos));
}

ComboSet infeasible_combos(const std::vector<OIE>& events, const IndexTuple& idx,
                           const ConstraintSet& cs, const Limits& limits) {
    const ComboSet product = cartesian_by_index(intervals_family(events), idx, limits);
    if (product.empty() || cs.empty()) return ComboSet();

    const std::size_t n = events.size();
    // combo_position[j] is where canonical operand j sits under idx.
    std::vector<std::size_t> combo_position(n);
    for (std::size_t k = 1; k <= n; ++k) combo_position[idx.at(k) - 1] = k - 1;

    std::vector<IntervalCombo> remapped_patterns;
    for (const auto& pattern : cs.forbidden()) {
        if (pattern.size() != n) continue;
        IntervalCombo remapped;
        remapped.reserve(n);
        for (std::size_t k = 1; k <= n; ++k) remapped.push_back(pattern[idx.at(k) - 1]);
        remapped_patterns.push_back(std::move(remapped));
    }

    struct ResolvedOverlap {
        std::vector<std::size_t> positions;
    };
    std::vector<ResolvedOverlap> overlap_rules;
    for (const auto& rule : cs.no_overlap_rules()) {
        ResolvedOverlap resolved;
        bool complete = true;
        for (const auto& id : rule.ids) {
            const std::size_t j = operand_position(events, id);
            if (j == static_cast<std::size_t>(-1)) {
                complete = false;
                break;
            }
            resolved.positions.push_back(combo_position[j]);
        }
        if (complete) overlap_rules.push_back(std::move(resolved));
    }

    struct ResolvedGap {
        std::size_t first;
        std::size_t second;
        Rational gap;
    };
    std::vector<ResolvedGap> gap_rules;
    for (const auto& rule : cs.min_gap_rules()) {
        const std::size_t a = operand_position(events, rule.first);
        const std::size_t b = operand_position(events, rule.second);
        if (a == static_cast<std::size_t>(-1) || b == static_cast<std::size_t>(-1)) {
            continue;
        }
        gap_rules.push_back({combo_position[a], combo_position[b], rule.gap});
    }

    std::vector<IntervalCombo> bad;
    for (const auto& combo : product.combos()) {
        bool is_bad = false;
        for (const auto& pattern : remapped_patterns) {
            if (combo == pattern) {
                is_bad = true;
                break;
            }
        }
        for (std::size_t r = 0; !is_bad && r < overlap_rules.size(); ++r) {
            const auto& positions = overlap_rules[r].positions;
            for (std::size_t x = 0; !is_bad && x < positions.size(); ++x) {
                for (std::size_t y = x + 1; y < positions.size(); ++y) {
                    if (overlaps(combo[positions[x]], combo[positions[y]])) {
                        is_bad = true;
                        break;
                    }
                }
            }
        }
        for (std::size_t r = 0; !is_bad && r < gap_rules.size(); ++r) {
            const Interval& x = combo[gap_rules[r].first];
            const Interval& y = combo[gap_rules[r].second];
            if (x.end() <= y.start()) {
                is_bad = y.start() - x.end() < gap_rules[r].gap;
            } else if (y.end() <= x.start()) {
                is_bad = x.start() - y.end() < gap_rules[r].gap;
            } else {
                is_bad = true;
            }
        }
        if (is_bad) bad.push_back(combo);
    }
    return ComboSet(std::move(bad));
}

ComboSet feasible_combos(const std::vector<OIE>& events, const IndexTuple& idx,
                         const ConstraintSet& cs, const Limits& limits) {
    const ComboSet product = cartesian_by_index(intervals_family(events), idx, limits);
    const ComboSet bad = infeasible_combos(events, idx, cs, limits);
    std::vector<IntervalCombo> good;
    std::set_difference(product.combos().begin(), product.combos().end(),
                        bad.combos().begin(), bad.combos().end(),
                        std::back_inserter(good));
    return ComboSet(std::move(good));
}

bool is_mutually_independent(const std::vector<OIE>& events, const ConstraintSet& cs,
                             const Limits& limits) {
    for (const auto& e : events) {
        if (e.is_void()) {
            throw InvalidInputError("independence is not defined for void members");
        }
    }
    return infeasible_combos(events, IndexTuple::ascending(events.size()), cs, limits)
        .empty();
}

} // namespace oie
