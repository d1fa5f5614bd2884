#include "oie/core.hpp"

#include <algorithm>
#include <numeric>

namespace oie {

Interval::Interval(Timestamp start, Timestamp end)
    : start_(std::move(start)), end_(std::move(end)) {
    if (!(start_ < end_)) {
        throw InvalidInputError("interval start must be strictly before its end: (" +
                                start_.str() + ", " + end_.str() + ")");
    }
}

std::string to_string(const Interval& iv) {
    return "(" + iv.start().str() + ", " + iv.end().str() + ")";
}

std::string to_string(const IntervalCombo& combo) {
    std::string out = "(";
    for (std::size_t i = 0; i < combo.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(combo[i]);
    }
    return out + ")";
}

ComboSet::ComboSet(std::vector<IntervalCombo> combos) : combos_(std::move(combos)) {
    for (const auto& c : combos_) {
        if (c.empty()) throw InvalidInputError("combo set members must be non-empty");
        if (c.size() != combos_.front().size()) {
            throw InvalidInputError("combo set members must have uniform length");
        }
    }
    std::sort(combos_.begin(), combos_.end());
    combos_.erase(std::unique(combos_.begin(), combos_.end()), combos_.end());
    uniform_length_ = combos_.empty() ? 0 : combos_.front().size();
}

bool ComboSet::contains(const IntervalCombo& c) const {
    return std::binary_search(combos_.begin(), combos_.end(), c);
}

PermutationMap::PermutationMap(std::vector<std::size_t> images)
    : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (const std::size_t img : images_) {
        if (img < 1 || img > images_.size() || seen[img - 1]) {
            throw InvalidInputError("permutation images must be a bijection on 1..n");
        }
        seen[img - 1] = true;
    }
}

PermutationMap PermutationMap::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{1});
    return PermutationMap(std::move(images));
}

PermutationMap PermutationMap::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 1; i <= images_.size(); ++i) inv[image(i) - 1] = i;
    return PermutationMap(std::move(inv));
}

std::vector<PermutationMap> all_permutations(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{1});
    std::vector<PermutationMap> out;
    do {
        out.push_back(PermutationMap(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

OIE OIE::atomic(EventStarId atom, const std::set<Interval>& intervals) {
    if (intervals.empty()) {
        throw InvalidInputError("atomic event \"" + atom +
                                "\" needs at least one interval; "
                                "an event with none is the void instance");
    }
    OIE o;
    std::vector<IntervalCombo> combos;
    for (const auto& iv : intervals) combos.push_back({iv});
    o.details_F_ = ComboSet(std::move(combos));
    o.intervals_I_ = intervals;
    o.atoms_A_ = {std::move(atom)};
    return o;
}

OIE OIE::raw(std::vector<OIE> components, ComboSet details_F,
             std::set<Interval> intervals_I, std::set<EventStarId> atoms_A) {
    OIE o;
    o.components_ = std::move(components);
    o.details_F_ = std::move(details_F);
    o.intervals_I_ = std::move(intervals_I);
    o.atoms_A_ = std::move(atoms_A);
    return o;
}

bool OIE::is_void() const {
    return components_.empty() && details_F_.empty() && intervals_I_.empty() &&
           atoms_A_.empty();
}

bool OIE::is_atomic() const {
    return components_.empty() && atoms_A_.size() == 1 && !details_F_.empty();
}

bool OIE::is_composite() const { return components_.size() > 1; }

Interval bound_combo(const IntervalCombo& combo) {
    return Interval(min_first(combo), max_second(combo));
}

Timestamp min_first(const IntervalCombo& combo) {
    if (combo.empty()) throw InvalidInputError("cannot bound an empty combo");
    Timestamp best = combo.front().start();
    for (const auto& iv : combo) best = std::min(best, iv.start());
    return best;
}

Timestamp max_second(const IntervalCombo& combo) {
    if (combo.empty()) throw InvalidInputError("cannot bound an empty combo");
    Timestamp best = combo.front().end();
    for (const auto& iv : combo) best = std::max(best, iv.end());
    return best;
}

IntervalCombo apply_permutation(const IntervalCombo& combo, const PermutationMap& p) {
    if (combo.size() != p.size()) {
        throw InvalidInputError("permutation size does not match combo length");
    }
    IntervalCombo out;
    out.reserve(combo.size());
    for (std::size_t i = 0; i < combo.size(); ++i) out.push_back(combo[i]);
    for (std::size_t i = 1; i <= combo.size(); ++i) out[p.image(i) - 1] = combo[i - 1];
    return out;
}

std::optional<PermutationMap> combo_perm_equivalent(const IntervalCombo& a,
                                                    const IntervalCombo& b) {
    if (a.size() != b.size()) return std::nullopt;
    for (const auto& p : all_permutations(a.size())) {
        if (apply_permutation(a, p) == b) return p;
    }
    return std::nullopt;
}

std::set<Interval> derive_intervals(const ComboSet& details_F) {
    std::set<Interval> out;
    for (const auto& c : details_F.combos()) out.insert(bound_combo(c));
    return out;
}

ValidationReport validate_oie(const OIE& o) {
    ValidationReport report;
    if (o.is_void()) return report;

    if (o.components().empty()) {
        if (o.atoms_A().size() != 1) {
            report.violations.push_back(
                "an instance without components must carry exactly one atom id");
        }
        if (o.details_F().empty()) {
            report.violations.push_back(
                "an atomic instance must offer at least one interval");
        } else if (o.details_F().uniform_length() != 1) {
            report.violations.push_back(
                "atomic schedule details must be single intervals");
        }
    } else if (o.components().size() == 1) {
        report.violations.push_back(
            "exactly one component is neither atomic nor composite");
    } else {
        if (o.details_F().empty()) {
            report.violations.push_back(
                "a composite must carry at least one schedule detail");
        } else if (o.details_F().uniform_length() != o.components().size()) {
            report.violations.push_back(
                "schedule detail width must equal the component count");
        }
        std::set<EventStarId> expected_atoms;
        for (const auto& part : o.components()) {
            if (!validate_oie(part).ok()) {
                report.violations.push_back("a component is itself invalid");
            }
            if (part.is_void()) {
                report.violations.push_back("components must be non-void");
            }
            expected_atoms.insert(part.atoms_A().begin(), part.atoms_A().end());
        }
        if (o.atoms_A() != expected_atoms) {
            report.violations.push_back(
                "atom identities must be the union over the components");
        }
    }

    if (o.intervals_I() != derive_intervals(o.details_F())) {
        report.violations.push_back(
            "the interval set must equal the bounds derived from the details");
    }
    return report;
}

std::vector<std::set<Interval>> intervals_family(const std::vector<OIE>& events) {
    std::vector<std::set<Interval>> family;
    family.reserve(events.size());
    for (const auto& e : events) family.push_back(e.intervals_I());
    return family;
}

std::string oie_label(const OIE& o) {
    if (o.is_void()) return "VOID";
    if (o.components().empty()) {
        return o.atoms_A().size() == 1 ? *o.atoms_A().begin() : "INVALID";
    }
    std::string out = "(";
    for (std::size_t i = 0; i < o.components().size(); ++i) {
        if (i > 0) out += ", ";
        out += oie_label(o.components()[i]);
    }
    return out + ")";
}

} // namespace oie
