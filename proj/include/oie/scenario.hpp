// Desk-scale scenario generators: sprint heats, downhill starts, merge
// sort scheduling, and the drawer sampling experiment. Each generator
// emits an ordinary event file whose expression reproduces the scenario's
// composition; the continuous originals are discretized by a tick.

#ifndef OIE_SCENARIO_HPP
#define OIE_SCENARIO_HPP

#include <vector>

#include "oie/event_file.hpp"
#include "oie/sequential.hpp"

namespace oie {

// n independent athletes sharing one window; each athlete may take any
// duration in [dmin, dmax] starting anywhere on the tick grid inside the
// window. Expression: natadd over all lanes. tick must divide the window
// length and both duration bounds.
EventFile scenario_sprint(std::size_t lanes, const DomainWindow& window,
                          const Rational& dmin, const Rational& dmax,
                          const Rational& tick, const Limits& limits = {});

// n skiers started one after another: run durations in [tmin, tmax] on the
// tick grid, all inside (start, start + total). Expression: mul over the
// given start order.
EventFile scenario_downhill(std::size_t skiers, const Timestamp& start,
                            const Rational& total, const Rational& tmin,
                            const Rational& tmax, const Rational& tick,
                            const Limits& limits = {});

// Bottom-up merge sort of len elements (a power of two, at most 16) on
// procs processors. One atomic task per merge; each layer is an add over
// its tasks within the layer window, layers are chained by mul. Task cost
// is twice the merge output length and a layer with t tasks spans
// ceil(t/procs) batches. procs defaults to len/2, the widest layer.
EventFile scenario_mergesort(std::size_t len, std::size_t procs = 0);

struct SamplingReport {
    EventFile file;
    OIE add_result;
    OIE mul_result;
    // occupancy[d][s]: combos of the add result placing drawer d in slot
    // s. Equal everywhere by symmetry.
    std::vector<std::vector<std::size_t>> occupancy;
    // Red-draw marginal per drawer under exhaustive ball allocation; every
    // entry is red/balls for both forms.
    std::vector<Rational> marginal_add;
    std::vector<Rational> marginal_mul;
};

// balls total, red of them red, drawers drawing one ball each from slots
// of tick duration inside (0, drawers * tick). Requires
// 1 < drawers <= red < balls and balls <= 6.
SamplingReport scenario_sampling(std::size_t balls, std::size_t red,
                                 std::size_t drawers, const Rational& tick,
                                 const Limits& limits = {});

} // namespace oie

#endif
