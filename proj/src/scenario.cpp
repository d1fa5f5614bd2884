#include "oie/scenario.hpp"

#include <algorithm>
#include <string>

namespace oie {

namespace {

bool divides(const Rational& tick, const Rational& span) {
    const Rational q = span / tick;
    return q.raw().get_den() == 1;
}

void check_tick(const Rational& tick, const std::vector<Rational>& spans,
                const std::string& scenario) {
    if (!(Rational(0) < tick)) {
        throw InvalidInputError(scenario + " tick must be positive");
    }
    for (const auto& span : spans) {
        if (!divides(tick, span)) {
            throw InvalidInputError(scenario + " tick " + tick.str() +
                                    " must divide the window and duration bounds; " +
                                    span.str() + " is not a multiple");
        }
    }
}

// All intervals (s, s + d) with both endpoints on the tick grid anchored
// at alpha, duration d in [dmin, dmax], lying inside [alpha, beta].
std::vector<Interval> grid_intervals(const Rational& alpha, const Rational& beta,
                                     const Rational& dmin, const Rational& dmax,
                                     const Rational& tick) {
    std::vector<Interval> out;
    for (Rational d = dmin; !(dmax < d); d += tick) {
        for (Rational s = alpha; !(beta < s + d); s += tick) {
            out.push_back(Interval(s, s + d));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_product_capacity(std::size_t per_event, std::size_t events,
                            const Limits& limits) {
    if (per_event == 0) return;
    std::size_t total = 1;
    for (std::size_t e = 0; e < events; ++e) {
        if (per_event > limits.max_product / total) {
            throw CapacityExceededError(
                "scenario enumeration of " + std::to_string(per_event) + "^" +
                std::to_string(events) + " combos exceeds the cap of " +
                std::to_string(limits.max_product));
        }
        total *= per_event;
    }
}

std::string joined_call(const std::string& op, const std::vector<std::string>& ids,
                        const std::string& window_suffix) {
    std::string out = op + "(";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ", ";
        out += ids[i];
    }
    return out + window_suffix + ")";
}

} // namespace

EventFile scenario_sprint(std::size_t lanes, const DomainWindow& window,
                          const Rational& dmin, const Rational& dmax,
                          const Rational& tick, const Limits& limits) {
    if (lanes == 0) {
        throw InvalidInputError("a sprint needs at least one lane");
    }
    if (!(Rational(0) < dmin) || dmax < dmin) {
        throw InvalidInputError("sprint durations need 0 < dmin <= dmax");
    }
    check_tick(tick, {window.beta() - window.alpha(), dmin, dmax}, "sprint");

    const auto intervals =
        grid_intervals(window.alpha(), window.beta(), dmin, dmax, tick);
    check_product_capacity(intervals.size(), lanes, limits);

    EventFile file;
    std::vector<std::string> ids;
    for (std::size_t lane = 1; lane <= lanes; ++lane) {
        ids.push_back("lane" + std::to_string(lane));
        file.events.push_back({ids.back(), intervals});
    }
    file.expression = lanes == 1 ? ids.front() : joined_call("natadd", ids, "");
    file.metadata["scenario"] = "sprint";
    file.metadata["full_scale_reference"] = {
        {"window", {"1736253600", "1736253620"}},
        {"durations", {"47/5", "20"}},
        {"tick", "1/10"},
    };
    return file;
}

EventFile scenario_downhill(std::size_t skiers, const Timestamp& start,
                            const Rational& total, const Rational& tmin,
                            const Rational& tmax, const Rational& tick,
                            const Limits& limits) {
    if (skiers == 0) {
        throw InvalidInputError("a downhill needs at least one skier");
    }
    if (!(Rational(0) < total)) {
        throw InvalidInputError("the downhill session length must be positive");
    }
    if (!(Rational(0) < tmin) || tmax < tmin) {
        throw InvalidInputError("downhill run durations need 0 < tmin <= tmax");
    }
    check_tick(tick, {total, tmin, tmax}, "downhill");

    const auto intervals = grid_intervals(start, start + total, tmin, tmax, tick);
    check_product_capacity(intervals.size(), skiers, limits);

    EventFile file;
    std::vector<std::string> ids;
    for (std::size_t skier = 1; skier <= skiers; ++skier) {
        ids.push_back("skier" + std::to_string(skier));
        file.events.push_back({ids.back(), intervals});
    }
    file.expression = skiers == 1 ? ids.front() : joined_call("mul", ids, "");
    file.metadata["scenario"] = "downhill";
    file.metadata["full_scale_reference"] = {
        {"start", "1736253600"},
        {"total", "1200"},
        {"durations", {"90", "120"}},
        {"tick", "1"},
    };
    return file;
}

EventFile scenario_mergesort(std::size_t len, std::size_t procs) {
    if (len < 2 || len > 16 || (len & (len - 1)) != 0) {
        throw InvalidInputError(
            "merge sort lengths must be powers of two between 2 and 16");
    }
    if (procs == 0) procs = len / 2;

    EventFile file;
    std::vector<std::string> layer_terms;
    std::size_t window_start = 0;
    for (std::size_t run = 1; run < len; run *= 2) {
        const std::size_t cost = 2 * run;
        const std::size_t tasks = len / cost;
        const std::size_t batches = (tasks + procs - 1) / procs;
        const std::size_t window_end = window_start + batches * cost;

        std::vector<Interval> slots;
        for (std::size_t b = 0; b < batches; ++b) {
            const std::size_t s = window_start + b * cost;
            slots.push_back(Interval(Rational(static_cast<long>(s)),
                                     Rational(static_cast<long>(s + cost))));
        }

        std::vector<std::string> ids;
        for (std::size_t t = 0; t < tasks; ++t) {
            const std::size_t lo1 = t * cost + 1;
            const std::size_t hi1 = lo1 + run - 1;
            const std::size_t lo2 = hi1 + 1;
            const std::size_t hi2 = lo2 + run - 1;
            ids.push_back("m_" + std::to_string(lo1) + "_" + std::to_string(hi1) +
                          "_" + std::to_string(lo2) + "_" + std::to_string(hi2));
            file.events.push_back({ids.back(), slots});
        }

        if (tasks == 1) {
            layer_terms.push_back(ids.front());
        } else {
            layer_terms.push_back(joined_call(
                "add", ids,
                "; alpha=" + std::to_string(window_start) +
                    ", beta=" + std::to_string(window_end)));
        }
        window_start = window_end;
    }

    file.expression = layer_terms.size() == 1 ? layer_terms.front()
                                              : joined_call("mul", layer_terms, "");
    file.metadata["scenario"] = "mergesort";
    file.metadata["len"] = len;
    file.metadata["procs"] = procs;
    return file;
}

SamplingReport scenario_sampling(std::size_t balls, std::size_t red,
                                 std::size_t drawers, const Rational& tick,
                                 const Limits& limits) {
    if (!(1 < drawers && drawers <= red && red < balls && balls <= 6)) {
        throw InvalidInputError(
            "sampling needs 1 < drawers <= red < balls <= 6");
    }
    if (!(Rational(0) < tick)) {
        throw InvalidInputError("sampling tick must be positive");
    }

    SamplingReport report;
    std::vector<Interval> slots;
    for (std::size_t j = 0; j < drawers; ++j) {
        slots.push_back(Interval(Rational(static_cast<long>(j)) * tick,
                                 Rational(static_cast<long>(j + 1)) * tick));
    }
    std::vector<std::string> ids;
    for (std::size_t d = 1; d <= drawers; ++d) {
        ids.push_back("drawer" + std::to_string(d));
        report.file.events.push_back({ids.back(), slots});
    }
    const Rational horizon = Rational(static_cast<long>(drawers)) * tick;
    report.file.expression =
        joined_call("add", ids, "; alpha=0, beta=" + horizon.str());
    report.file.metadata["scenario"] = "sampling";
    report.file.metadata["balls"] = balls;
    report.file.metadata["red"] = red;
    report.file.metadata["drawers"] = drawers;

    const auto atoms = file_atoms(report.file);
    const IndexTuple idx = IndexTuple::ascending(drawers);
    report.add_result =
        csa(atoms, idx, DomainWindow(Rational(0), horizon), {}, IntersectionMode::pairwise,
            limits);
    report.mul_result = csm(atoms, idx, {}, IntersectionMode::pairwise, limits);

    report.occupancy.assign(drawers, std::vector<std::size_t>(drawers, 0));
    for (const auto& combo : report.add_result.details_F().combos()) {
        for (std::size_t d = 0; d < drawers; ++d) {
            for (std::size_t s = 0; s < drawers; ++s) {
                if (combo[d] == slots[s]) report.occupancy[d][s] += 1;
            }
        }
    }

    // Exhaustive ordered allocation of distinct balls to draw positions.
    // Balls 1..red are the red ones; per position we count allocations
    // that put a red ball there.
    std::vector<std::size_t> red_hits(drawers, 0);
    std::size_t total_allocations = 0;
    std::vector<bool> used(balls, false);
    std::vector<std::size_t> chosen(drawers, 0);
    const auto enumerate = [&](auto&& self, std::size_t position) -> void {
        if (position == drawers) {
            ++total_allocations;
            for (std::size_t p = 0; p < drawers; ++p) {
                if (chosen[p] < red) ++red_hits[p];
            }
            return;
        }
        for (std::size_t ball = 0; ball < balls; ++ball) {
            if (used[ball]) continue;
            used[ball] = true;
            chosen[position] = ball;
            self(self, position + 1);
            used[ball] = false;
        }
    };
    enumerate(enumerate, 0);

    for (std::size_t d = 0; d < drawers; ++d) {
        const Rational marginal(static_cast<long>(red_hits[d]),
                                static_cast<long>(total_allocations));
        report.marginal_add.push_back(marginal);
        report.marginal_mul.push_back(marginal);
    }
    return report;
}

} // namespace oie
